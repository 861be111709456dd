#include "wirecat/twocell.hpp"

#include <sstream>

#include "wirecat/error.hpp"

namespace wirecat {

namespace {

bool is_braid_body(const SliceBody& b) {
  return std::holds_alternative<BraidBody>(b);
}

// Transposes adjacent disjoint slices pos, pos+1, re-whiskering both.
// Returns nullopt when the bodies overlap.
std::optional<Diagram> transpose_slices(const Signature& sig, const Diagram& d,
                                        std::size_t pos) {
  if (pos + 1 >= d.slices.size()) return std::nullopt;
  const Slice& s1 = d.slices[pos];
  const Slice& s2 = d.slices[pos + 1];
  const Word dom1 = body_dom(sig, s1.body);
  const Word cod1 = body_cod(sig, s1.body);
  const Word dom2 = body_dom(sig, s2.body);
  const Word cod2 = body_cod(sig, s2.body);
  const std::size_t p1 = s1.left.size();
  const std::size_t p2 = s2.left.size();
  Diagram out = d;
  if (p2 + dom2.size() <= p1) {
    // Upper body left of (or degenerate at) the lower body.
    Word lpre(s1.left.begin(), s1.left.begin() + static_cast<std::ptrdiff_t>(p2));
    Word lmid(s1.left.begin() + static_cast<std::ptrdiff_t>(p2 + dom2.size()),
              s1.left.end());
    out.slices[pos] =
        Slice{lpre, s2.body, word_concat(word_concat(lmid, dom1), s1.right)};
    out.slices[pos + 1] =
        Slice{word_concat(word_concat(lpre, cod2), lmid), s1.body, s1.right};
    return out;
  }
  if (p2 >= p1 + cod1.size()) {
    const std::size_t off = p2 - (p1 + cod1.size());
    Word mid(s1.right.begin(),
             s1.right.begin() + static_cast<std::ptrdiff_t>(off));
    Word tail(s1.right.begin() + static_cast<std::ptrdiff_t>(off + dom2.size()),
              s1.right.end());
    out.slices[pos] =
        Slice{word_concat(word_concat(s1.left, dom1), mid), s2.body, tail};
    out.slices[pos + 1] =
        Slice{s1.left, s1.body, word_concat(word_concat(mid, cod2), tail)};
    return out;
  }
  return std::nullopt;
}

std::variant<Diagram, std::string> apply_interchange(const Signature& sig,
                                                     const Diagram& d,
                                                     const InterchangeCell& c) {
  if (c.pos + 1 >= d.slices.size()) return std::string("position out of range");
  const Slice& lower = d.slices[c.pos];
  const Slice& upper = d.slices[c.pos + 1];
  if (is_braid_body(lower.body) || is_braid_body(upper.body)) {
    return std::string("interchange bodies must be generators");
  }
  const std::size_t p1 = lower.left.size();
  const std::size_t p2 = upper.left.size();
  const std::size_t cod1 = body_cod(sig, lower.body).size();
  const std::size_t dom2 = body_dom(sig, upper.body).size();
  if (!c.back && p1 < p2 + dom2) {
    return std::string("forward interchange needs the lower body at or right "
                       "of the upper body");
  }
  if (c.back && p2 < p1 + cod1) {
    return std::string("backward interchange needs the lower body at or left "
                       "of the upper body");
  }
  auto r = transpose_slices(sig, d, c.pos);
  if (!r) return std::string("interchange bodies overlap");
  return *r;
}

std::variant<Diagram, std::string> apply_gen2(const Signature& sig,
                                              const Diagram& d,
                                              const GenCell& c) {
  const Gen2* g = sig.find_gen2(c.gen2);
  if (!g) return std::string("unknown 2-generator '" + c.gen2 + "'");
  if (c.back && !g->invertible) {
    return std::string("'" + c.gen2 + "' is not invertible");
  }
  const Diagram pattern = whisker(c.left, c.back ? *g->tgt : *g->src, c.right);
  const Diagram repl = whisker(c.left, c.back ? *g->src : *g->tgt, c.right);
  if (c.pos + pattern.slices.size() > d.slices.size()) {
    return std::string("pattern window out of range");
  }
  for (std::size_t i = 0; i < pattern.slices.size(); ++i) {
    if (!slice_eq(d.slices[c.pos + i], pattern.slices[i])) {
      return std::string("source slices of '" + c.gen2 +
                         "' not literally present at the given position");
    }
  }
  if (word_at(sig, d, c.pos) != pattern.src) {
    return std::string("boundary word mismatch at the pattern site");
  }
  Diagram out;
  out.src = d.src;
  out.slices.assign(d.slices.begin(),
                    d.slices.begin() + static_cast<std::ptrdiff_t>(c.pos));
  out.slices.insert(out.slices.end(), repl.slices.begin(), repl.slices.end());
  out.slices.insert(
      out.slices.end(),
      d.slices.begin() +
          static_cast<std::ptrdiff_t>(c.pos + pattern.slices.size()),
      d.slices.end());
  return out;
}

}  // namespace

std::variant<Diagram, std::string> apply_cell(const Signature& sig,
                                              const Diagram& d, const Cell& c) {
  if (const auto* st = std::get_if<StructCell>(&c)) {
    auto r = apply_move(sig, d, st->move);
    if (!r) {
      return std::string("move " + move_to_string(st->move) +
                         " does not apply");
    }
    return *r;
  }
  if (const auto* ic = std::get_if<InterchangeCell>(&c)) {
    return apply_interchange(sig, d, *ic);
  }
  return apply_gen2(sig, d, std::get<GenCell>(c));
}

std::variant<Diagram, ReplayError> replay(const Signature& sig,
                                          const Script& s) {
  Diagram cur = s.src;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    auto r = apply_cell(sig, cur, s.cells[i]);
    if (auto* msg = std::get_if<std::string>(&r)) {
      return ReplayError{i, *msg};
    }
    cur = std::move(std::get<Diagram>(r));
  }
  return cur;
}

Diagram replay_or_throw(const Signature& sig, const Script& s) {
  auto r = replay(sig, s);
  if (auto* err = std::get_if<ReplayError>(&r)) {
    std::ostringstream msg;
    msg << "cell " << err->cell_index << ": " << err->reason;
    throw Error("ReplayFailure", msg.str());
  }
  return std::get<Diagram>(r);
}

Script vcompose(const Signature& sig, const Script& s1, const Script& s2) {
  if (!diagram_eq(replay_or_throw(sig, s1), s2.src)) {
    throw Error("EndpointMismatch", "vcompose: target(s1) != src(s2)");
  }
  Script out{s1.src, s1.cells};
  out.cells.insert(out.cells.end(), s2.cells.begin(), s2.cells.end());
  return out;
}

namespace {

Cell shift_cell(const Cell& c, std::size_t off) {
  if (const auto* st = std::get_if<StructCell>(&c)) {
    StructCell out = *st;
    out.move.pos += off;
    return out;
  }
  if (const auto* ic = std::get_if<InterchangeCell>(&c)) {
    InterchangeCell out = *ic;
    out.pos += off;
    return out;
  }
  GenCell out = std::get<GenCell>(c);
  out.pos += off;
  return out;
}

}  // namespace

Script hcompose(const Signature& sig, const Script& alpha, const Script& beta) {
  Script out;
  out.src = compose(sig, alpha.src, beta.src);
  out.cells = alpha.cells;
  const std::size_t off = replay_or_throw(sig, alpha).slices.size();
  for (const auto& c : beta.cells) out.cells.push_back(shift_cell(c, off));
  return out;
}

Script build_phi(const Signature& sig, const Diagram& f, const Diagram& g,
                 const Diagram& fp, const Diagram& gp) {
  if (target(sig, f) != fp.src || target(sig, g) != gp.src) {
    throw Error("EndpointMismatch", "build_phi: layers do not chain");
  }
  Script out;
  out.src = compose(sig, tensor(sig, f, g), tensor(sig, fp, gp));
  const std::size_t a = f.slices.size();
  const std::size_t b = g.slices.size();
  const std::size_t c = fp.slices.size();
  // Bubble each second-layer left slice down past the first-layer right block.
  for (std::size_t fi = 0; fi < c; ++fi) {
    for (std::size_t j = a + b + fi; j-- > a + fi;) {
      out.cells.push_back(InterchangeCell{j, false});
    }
  }
  return out;
}

Script build_beta_fg(const Signature& sig, const Diagram& f, const Diagram& g) {
  Script out;
  const Word a_src = f.src;
  const Word b_src = g.src;
  out.src = compose(sig, braid_word(a_src, b_src), tensor(sig, g, f));
  const Diagram tgt = compose(sig, tensor(sig, f, g),
                              braid_word(target(sig, f), target(sig, g)));
  const std::size_t nb = a_src.size() * b_src.size();
  const std::size_t b = g.slices.size();
  // Reorder the two tensor layers: each f slice descends past the g block.
  for (std::size_t fi = 0; fi < f.slices.size(); ++fi) {
    for (std::size_t j = nb + b + fi; j-- > nb + fi;) {
      out.cells.push_back(InterchangeCell{j, true});
    }
  }
  // Carry both layers below the braid by naturality slides.
  const Diagram mid = replay_or_throw(sig, out);
  EqualResult eq = equal(sig, mid, tgt);
  if (eq.verdict != Verdict::True || !eq.trace) {
    throw Error("DerivationFailure",
                "build_beta_fg: no structural path to the nudged target");
  }
  for (const auto& m : *eq.trace) out.cells.push_back(StructCell{m});
  return out;
}

Script deloop_sigma(const Signature& sig, const Diagram& a, const Diagram& b) {
  if (!a.src.empty() || !target(sig, a).empty() || !b.src.empty() ||
      !target(sig, b).empty()) {
    throw Error("EndpointMismatch",
                "deloop_sigma: inputs must be unit endomorphisms");
  }
  Script out;
  out.src = tensor(sig, a, b);
  const std::size_t na = a.slices.size();
  // Bubble the second factor below the first.
  for (std::size_t bi = 0; bi < b.slices.size(); ++bi) {
    for (std::size_t j = na + bi; j-- > bi;) {
      out.cells.push_back(InterchangeCell{j, false});
    }
  }
  return out;
}

}  // namespace wirecat
