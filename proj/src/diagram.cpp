#include "wirecat/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "wirecat/error.hpp"

namespace wirecat {

bool slice_eq(const Slice& a, const Slice& b) {
  if (a.left != b.left || a.right != b.right) return false;
  if (a.body.index() != b.body.index()) return false;
  if (const auto* g = std::get_if<GenBody>(&a.body)) {
    return g->gen1 == std::get<GenBody>(b.body).gen1;
  }
  const auto& x = std::get<BraidBody>(a.body);
  const auto& y = std::get<BraidBody>(b.body);
  return x.x == y.x && x.y == y.y;
}

Word body_dom(const Signature& sig, const SliceBody& body) {
  if (const auto* g = std::get_if<GenBody>(&body)) {
    const Gen1* gen = sig.find_gen1(g->gen1);
    if (!gen) throw Error("UnknownReference", "1-generator '" + g->gen1 + "'");
    return gen->dom;
  }
  const auto& b = std::get<BraidBody>(body);
  return {b.x, b.y};
}

Word body_cod(const Signature& sig, const SliceBody& body) {
  if (const auto* g = std::get_if<GenBody>(&body)) {
    const Gen1* gen = sig.find_gen1(g->gen1);
    if (!gen) throw Error("UnknownReference", "1-generator '" + g->gen1 + "'");
    return gen->cod;
  }
  const auto& b = std::get<BraidBody>(body);
  return {b.y, b.x};
}

Word slice_dom(const Signature& sig, const Slice& s) {
  return word_concat(word_concat(s.left, body_dom(sig, s.body)), s.right);
}

Word slice_cod(const Signature& sig, const Slice& s) {
  return word_concat(word_concat(s.left, body_cod(sig, s.body)), s.right);
}

bool diagram_eq(const Diagram& a, const Diagram& b) {
  if (a.src != b.src || a.slices.size() != b.slices.size()) return false;
  for (std::size_t i = 0; i < a.slices.size(); ++i)
    if (!slice_eq(a.slices[i], b.slices[i])) return false;
  return true;
}

Diagram identity_diagram(Word w) { return Diagram{std::move(w), {}}; }

bool well_formed(const Signature& sig, const Diagram& d) {
  Word cur = d.src;
  for (const auto& s : d.slices) {
    if (slice_dom(sig, s) != cur) return false;
    cur = slice_cod(sig, s);
  }
  return true;
}

void infer_src(const Signature& sig, Diagram& d) {
  if (!d.slices.empty()) d.src = slice_dom(sig, d.slices.front());
}

Word word_at(const Signature& sig, const Diagram& d, std::size_t k) {
  if (k == 0) return d.src;
  return slice_cod(sig, d.slices[k - 1]);
}

Word target(const Signature& sig, const Diagram& d) {
  return word_at(sig, d, d.slices.size());
}

Diagram compose(const Signature& sig, const Diagram& d1, const Diagram& d2) {
  if (target(sig, d1) != d2.src) {
    throw Error("EndpointMismatch", "compose: target(d1) != src(d2)");
  }
  Diagram out = d1;
  out.slices.insert(out.slices.end(), d2.slices.begin(), d2.slices.end());
  return out;
}

Diagram whisker(const Word& left, const Diagram& d, const Word& right) {
  Diagram out;
  out.src = word_concat(word_concat(left, d.src), right);
  out.slices.reserve(d.slices.size());
  for (const auto& s : d.slices) {
    out.slices.push_back(Slice{word_concat(left, s.left), s.body,
                               word_concat(s.right, right)});
  }
  return out;
}

Diagram tensor(const Signature& sig, const Diagram& d1, const Diagram& d2) {
  return compose(sig, whisker({}, d1, d2.src),
                 whisker(target(sig, d1), d2, {}));
}

Diagram braid_word(const Word& a, const Word& b) {
  Diagram d;
  d.src = word_concat(a, b);
  if (a.empty() || b.empty()) return d;
  // Each letter of b walks left across the block a, leftmost letter first.
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = a.size(); i-- > 0;) {
      Word left(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
      left.insert(left.end(), a.begin(),
                  a.begin() + static_cast<std::ptrdiff_t>(i));
      Word right(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end());
      right.insert(right.end(), b.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                   b.end());
      d.slices.push_back(Slice{std::move(left), BraidBody{a[i], b[j]},
                               std::move(right)});
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Moves.

namespace {

bool is_braid(const Slice& s) {
  return std::holds_alternative<BraidBody>(s.body);
}

// Window [pos, pos + w.size()) in d.slices equals w, slicewise.
bool window_matches(const Diagram& d, std::size_t pos,
                    const std::vector<Slice>& w) {
  if (pos + w.size() > d.slices.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!slice_eq(d.slices[pos + i], w[i])) return false;
  return true;
}

Diagram splice(const Diagram& d, std::size_t pos, std::size_t count,
               const std::vector<Slice>& repl) {
  Diagram out;
  out.src = d.src;
  out.slices.reserve(d.slices.size() - count + repl.size());
  out.slices.insert(out.slices.end(), d.slices.begin(),
                    d.slices.begin() + static_cast<std::ptrdiff_t>(pos));
  out.slices.insert(out.slices.end(), repl.begin(), repl.end());
  out.slices.insert(out.slices.end(),
                    d.slices.begin() + static_cast<std::ptrdiff_t>(pos + count),
                    d.slices.end());
  return out;
}

std::optional<Diagram> apply_braid_cancel(const Diagram& d, std::size_t pos) {
  if (pos + 1 >= d.slices.size()) return std::nullopt;
  const Slice& s1 = d.slices[pos];
  const Slice& s2 = d.slices[pos + 1];
  if (!is_braid(s1) || !is_braid(s2)) return std::nullopt;
  const auto& b1 = std::get<BraidBody>(s1.body);
  const auto& b2 = std::get<BraidBody>(s2.body);
  if (b1.x != b2.y || b1.y != b2.x) return std::nullopt;
  if (s1.left != s2.left || s1.right != s2.right) return std::nullopt;
  return splice(d, pos, 2, {});
}

std::optional<Diagram> apply_braid_insert(const Signature& sig,
                                          const Diagram& d, std::size_t pos,
                                          std::size_t word_pos) {
  if (pos > d.slices.size()) return std::nullopt;
  const Word w = word_at(sig, d, pos);
  if (word_pos + 1 >= w.size()) return std::nullopt;
  Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(word_pos));
  Word right(w.begin() + static_cast<std::ptrdiff_t>(word_pos) + 2, w.end());
  std::vector<Slice> repl{
      Slice{left, BraidBody{w[word_pos], w[word_pos + 1]}, right},
      Slice{left, BraidBody{w[word_pos + 1], w[word_pos]}, right}};
  return splice(d, pos, 0, repl);
}

// Transposes disjoint slices pos, pos+1 where at least one body is a braid
// (generator-generator transposition is the nontrivial interchangor).
std::optional<Diagram> apply_disjoint_swap(const Signature& sig,
                                           const Diagram& d, std::size_t pos) {
  if (pos + 1 >= d.slices.size()) return std::nullopt;
  const Slice& s1 = d.slices[pos];
  const Slice& s2 = d.slices[pos + 1];
  if (!is_braid(s1) && !is_braid(s2)) return std::nullopt;
  const Word dom1 = body_dom(sig, s1.body);
  const Word cod1 = body_cod(sig, s1.body);
  const Word dom2 = body_dom(sig, s2.body);
  const Word cod2 = body_cod(sig, s2.body);
  const std::size_t p1 = s1.left.size();
  const std::size_t p2 = s2.left.size();
  if (p2 >= p1 + cod1.size()) {
    // Upper body to the right of the lower body.
    const std::size_t off = p2 - (p1 + cod1.size());
    Word mid(s1.right.begin(), s1.right.begin() + static_cast<std::ptrdiff_t>(off));
    Word tail(s1.right.begin() + static_cast<std::ptrdiff_t>(off + dom2.size()),
              s1.right.end());
    Slice n1{word_concat(word_concat(s1.left, dom1), mid), s2.body, tail};
    Slice n2{s1.left, s1.body, word_concat(word_concat(mid, cod2), tail)};
    return splice(d, pos, 2, {n1, n2});
  }
  if (p2 + dom2.size() <= p1) {
    // Upper body to the left of the lower body.
    Word lpre(s1.left.begin(), s1.left.begin() + static_cast<std::ptrdiff_t>(p2));
    Word lmid(s1.left.begin() + static_cast<std::ptrdiff_t>(p2 + dom2.size()),
              s1.left.end());
    Slice n1{lpre, s2.body,
             word_concat(word_concat(lmid, dom1), s1.right)};
    Slice n2{word_concat(word_concat(lpre, cod2), lmid), s1.body, s1.right};
    return splice(d, pos, 2, {n1, n2});
  }
  return std::nullopt;
}

// Naturality slides: a slice crosses one adjacent letter, exchanging the
// canonical braid staircase on its codomain side for the one on its domain
// side (or back).
std::optional<Diagram> apply_nat_slide(const Signature& sig, const Diagram& d,
                                       std::size_t pos, SlideDir dir) {
  if (pos >= d.slices.size()) return std::nullopt;
  const Slice& s = d.slices[pos];
  const Word u = body_dom(sig, s.body);
  const Word c = body_cod(sig, s.body);
  switch (dir) {
    case SlideDir::UpRight: {
      if (s.right.empty()) return std::nullopt;
      const std::string z = s.right.front();
      Word r(s.right.begin() + 1, s.right.end());
      const Diagram up = whisker(s.left, braid_word(c, {z}), r);
      if (!window_matches(d, pos + 1, up.slices)) return std::nullopt;
      std::vector<Slice> repl = whisker(s.left, braid_word(u, {z}), r).slices;
      repl.push_back(Slice{word_concat(s.left, {z}), s.body, r});
      return splice(d, pos, 1 + c.size(), repl);
    }
    case SlideDir::UpLeft: {
      if (s.left.empty()) return std::nullopt;
      const std::string x = s.left.back();
      Word l(s.left.begin(), s.left.end() - 1);
      const Diagram up = whisker(l, braid_word({x}, c), s.right);
      if (!window_matches(d, pos + 1, up.slices)) return std::nullopt;
      std::vector<Slice> repl = whisker(l, braid_word({x}, u), s.right).slices;
      repl.push_back(Slice{l, s.body, word_concat({x}, s.right)});
      return splice(d, pos, 1 + c.size(), repl);
    }
    case SlideDir::DownRight: {
      if (s.left.empty() || pos < u.size()) return std::nullopt;
      const std::string z = s.left.back();
      Word l(s.left.begin(), s.left.end() - 1);
      const Diagram below = whisker(l, braid_word(u, {z}), s.right);
      if (!window_matches(d, pos - u.size(), below.slices)) return std::nullopt;
      std::vector<Slice> repl;
      repl.push_back(Slice{l, s.body, word_concat({z}, s.right)});
      const Diagram above = whisker(l, braid_word(c, {z}), s.right);
      repl.insert(repl.end(), above.slices.begin(), above.slices.end());
      return splice(d, pos - u.size(), 1 + u.size(), repl);
    }
    case SlideDir::DownLeft: {
      if (s.right.empty() || pos < u.size()) return std::nullopt;
      const std::string x = s.right.front();
      Word r(s.right.begin() + 1, s.right.end());
      const Diagram below = whisker(s.left, braid_word({x}, u), r);
      if (!window_matches(d, pos - u.size(), below.slices)) return std::nullopt;
      std::vector<Slice> repl;
      repl.push_back(Slice{word_concat(s.left, {x}), s.body, r});
      const Diagram above = whisker(s.left, braid_word({x}, c), r);
      repl.insert(repl.end(), above.slices.begin(), above.slices.end());
      return splice(d, pos - u.size(), 1 + u.size(), repl);
    }
  }
  return std::nullopt;
}

}  // namespace

bool move_eq(const MoveRecord& a, const MoveRecord& b) {
  return a.kind == b.kind && a.pos == b.pos && a.arg == b.arg && a.dir == b.dir;
}

std::string move_to_string(const MoveRecord& m) {
  std::ostringstream out;
  switch (m.kind) {
    case MoveKind::BraidCancel: out << "cancel@" << m.pos; break;
    case MoveKind::BraidInsert: out << "insert@" << m.pos << ":" << m.arg; break;
    case MoveKind::DisjointSwap: out << "swap@" << m.pos; break;
    case MoveKind::NatSlide:
      switch (m.dir) {
        case SlideDir::UpRight: out << "slide_ur@" << m.pos; break;
        case SlideDir::UpLeft: out << "slide_ul@" << m.pos; break;
        case SlideDir::DownRight: out << "slide_dr@" << m.pos; break;
        case SlideDir::DownLeft: out << "slide_dl@" << m.pos; break;
      }
      break;
  }
  return out.str();
}

std::optional<Diagram> apply_move(const Signature& sig, const Diagram& d,
                                  const MoveRecord& m) {
  switch (m.kind) {
    case MoveKind::BraidCancel: return apply_braid_cancel(d, m.pos);
    case MoveKind::BraidInsert: return apply_braid_insert(sig, d, m.pos, m.arg);
    case MoveKind::DisjointSwap: return apply_disjoint_swap(sig, d, m.pos);
    case MoveKind::NatSlide: return apply_nat_slide(sig, d, m.pos, m.dir);
  }
  return std::nullopt;
}

std::vector<MoveResult> moves(const Signature& sig, const Diagram& d) {
  std::vector<MoveResult> out;
  const std::size_t n = d.slices.size();
  auto try_move = [&](MoveRecord m) {
    if (auto r = apply_move(sig, d, m)) {
      out.push_back(MoveResult{std::move(*r), m});
    }
  };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    try_move({MoveKind::BraidCancel, k, 0, SlideDir::UpRight});
    try_move({MoveKind::DisjointSwap, k, 0, SlideDir::UpRight});
  }
  for (std::size_t k = 0; k <= n; ++k) {
    const Word w = word_at(sig, d, k);
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      try_move({MoveKind::BraidInsert, k, p, SlideDir::UpRight});
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (SlideDir dir : {SlideDir::UpRight, SlideDir::UpLeft,
                         SlideDir::DownRight, SlideDir::DownLeft}) {
      try_move({MoveKind::NatSlide, k, 0, dir});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equality by bounded BFS saturation.

std::string diagram_key(const Diagram& d) {
  std::ostringstream out;
  for (const auto& l : d.src) out << l << ',';
  out << '/';
  for (const auto& s : d.slices) {
    for (const auto& l : s.left) out << l << ',';
    out << '|';
    if (const auto* g = std::get_if<GenBody>(&s.body)) {
      out << 'g' << g->gen1;
    } else {
      const auto& b = std::get<BraidBody>(s.body);
      out << 'b' << b.x << ',' << b.y;
    }
    out << '|';
    for (const auto& l : s.right) out << l << ',';
    out << ';';
  }
  return out.str();
}

EqualResult equal(const Signature& sig, const Diagram& d1, const Diagram& d2,
                  const EqualOptions& opts) {
  if (d1.src != d2.src || target(sig, d1) != target(sig, d2)) {
    return {Verdict::False, std::nullopt};
  }
  const std::string goal = diagram_key(d2);
  const std::string start = diagram_key(d1);
  if (start == goal) return {Verdict::True, MoveTrace{}};

  const std::size_t cap =
      std::max(d1.slices.size(), d2.slices.size()) + opts.insert_budget;

  struct Visit {
    std::string parent;
    MoveRecord via;
  };
  std::unordered_map<std::string, Visit> seen;
  std::unordered_map<std::string, Diagram> store;
  seen.emplace(start, Visit{});
  store.emplace(start, d1);
  std::deque<std::string> frontier{start};

  while (!frontier.empty()) {
    const std::string cur_key = frontier.front();
    frontier.pop_front();
    const Diagram cur = store.at(cur_key);
    for (auto& mr : moves(sig, cur)) {
      if (mr.diagram.slices.size() > cap) continue;
      std::string key = diagram_key(mr.diagram);
      if (seen.count(key)) continue;
      seen.emplace(key, Visit{cur_key, mr.record});
      if (key == goal) {
        MoveTrace trace;
        std::string at = key;
        while (at != start) {
          const Visit& v = seen.at(at);
          trace.push_back(v.via);
          at = v.parent;
        }
        std::reverse(trace.begin(), trace.end());
        return {Verdict::True, std::move(trace)};
      }
      if (seen.size() > opts.max_states) {
        return {Verdict::Unknown, std::nullopt};
      }
      store.emplace(key, std::move(mr.diagram));
      frontier.push_back(std::move(key));
    }
  }
  return {Verdict::False, std::nullopt};
}

// ---------------------------------------------------------------------------
// Canonical form for braid content.

std::optional<std::vector<std::size_t>> braid_permutation(const Diagram& d) {
  std::vector<std::size_t> cur(d.src.size());
  std::iota(cur.begin(), cur.end(), 0);
  for (const auto& s : d.slices) {
    if (!is_braid(s)) return std::nullopt;
    const std::size_t p = s.left.size();
    std::swap(cur[p], cur[p + 1]);
  }
  std::vector<std::size_t> perm(cur.size());
  for (std::size_t j = 0; j < cur.size(); ++j) perm[cur[j]] = j;
  return perm;
}

namespace {

// Lexicographically minimal reduced word for a position permutation, as a
// sequence of adjacent transposition positions applied bottom-up.
std::vector<std::size_t> lex_min_reduced_word(std::vector<std::size_t> perm) {
  std::vector<std::size_t> word;
  for (;;) {
    std::optional<std::size_t> best;
    for (std::size_t p = 0; p + 1 < perm.size(); ++p) {
      if (perm[p] > perm[p + 1]) {
        best = p;
        break;
      }
    }
    if (!best) break;
    word.push_back(*best);
    std::swap(perm[*best], perm[*best + 1]);
  }
  return word;
}

// Replaces the maximal braid-only run starting at `begin` (of length `len`,
// over bottom word w) by the lex-min reduced word of its permutation.
std::vector<Slice> run_slices_for(const Word& w,
                                  const std::vector<std::size_t>& positions) {
  Word cur = w;
  std::vector<Slice> out;
  for (std::size_t p : positions) {
    Word left(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(p));
    Word right(cur.begin() + static_cast<std::ptrdiff_t>(p) + 2, cur.end());
    out.push_back(Slice{left, BraidBody{cur[p], cur[p + 1]}, right});
    std::swap(cur[p], cur[p + 1]);
  }
  return out;
}

bool minimalize_runs(const Signature& sig, Diagram& d) {
  bool changed = false;
  std::size_t i = 0;
  while (i < d.slices.size()) {
    if (!is_braid(d.slices[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < d.slices.size() && is_braid(d.slices[j])) ++j;
    const Word bottom = word_at(sig, d, i);
    Diagram run{bottom, std::vector<Slice>(d.slices.begin() + static_cast<std::ptrdiff_t>(i),
                                           d.slices.begin() + static_cast<std::ptrdiff_t>(j))};
    auto perm = braid_permutation(run);
    const std::vector<std::size_t> minword = lex_min_reduced_word(*perm);
    std::vector<Slice> repl = run_slices_for(bottom, minword);
    bool same = repl.size() == run.slices.size();
    if (same) {
      for (std::size_t k = 0; k < repl.size(); ++k) {
        if (!slice_eq(repl[k], run.slices[k])) {
          same = false;
          break;
        }
      }
    }
    if (!same) {
      Diagram next = d;
      next.slices.erase(next.slices.begin() + static_cast<std::ptrdiff_t>(i),
                        next.slices.begin() + static_cast<std::ptrdiff_t>(j));
      next.slices.insert(next.slices.begin() + static_cast<std::ptrdiff_t>(i),
                         repl.begin(), repl.end());
      d = std::move(next);
      changed = true;
    }
    i += repl.size() + 1;
  }
  return changed;
}

// One braid-sinking step: move a braid just above a generator slice below it,
// by a disjoint transposition or a slide that does not grow the diagram.
bool sink_one(const Signature& sig, Diagram& d) {
  for (std::size_t k = 0; k + 1 < d.slices.size(); ++k) {
    if (is_braid(d.slices[k]) || !is_braid(d.slices[k + 1])) continue;
    MoveRecord swap{MoveKind::DisjointSwap, k, 0, SlideDir::UpRight};
    if (auto r = apply_move(sig, d, swap)) {
      d = std::move(*r);
      return true;
    }
    const Word u = body_dom(sig, d.slices[k].body);
    const Word c = body_cod(sig, d.slices[k].body);
    if (u.size() > c.size()) continue;
    for (SlideDir dir : {SlideDir::UpRight, SlideDir::UpLeft}) {
      if (auto r = apply_move(sig, d, {MoveKind::NatSlide, k, 0, dir})) {
        d = std::move(*r);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Diagram canonical_braids(const Signature& sig, const Diagram& d) {
  Diagram cur = d;
  for (;;) {
    bool changed = minimalize_runs(sig, cur);
    if (sink_one(sig, cur)) changed = true;
    if (!changed) break;
  }
  return cur;
}

}  // namespace wirecat
