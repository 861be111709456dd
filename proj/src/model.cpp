#include "wirecat/model.hpp"

#include <algorithm>
#include <sstream>

#include "wirecat/error.hpp"

namespace wirecat {

namespace {

[[noreturn]] void missing(const std::string& table, const std::string& key) {
  throw Error("MissingTableEntry", table + "[" + key + "]");
}

std::string pair_key(const std::string& a, const std::string& b) {
  return a + ", " + b;
}

}  // namespace

const Cell1Info* FiniteModel::find_cell1(const std::string& id) const {
  for (const auto& c : cells1)
    if (c.id == id) return &c;
  return nullptr;
}

const Cell2Info* FiniteModel::find_cell2(const std::string& id) const {
  for (const auto& c : cells2)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& FiniteModel::checker_objects() const {
  return enum_window.empty() ? objects : enum_window;
}

std::string FiniteModel::tensor_obj(const std::string& a,
                                    const std::string& b) const {
  auto it = tensor.find({a, b});
  if (it == tensor.end()) missing("tensor", pair_key(a, b));
  return it->second;
}

std::string FiniteModel::word_object(
    const std::map<std::string, std::string>& objs, const Word& w) const {
  std::string cur = unit;
  for (const auto& letter : w) {
    auto it = objs.find(letter);
    if (it == objs.end()) missing("assign_obj", letter);
    cur = tensor_obj(cur, it->second);
  }
  return cur;
}

std::string FiniteModel::comp1(const std::string& f,
                               const std::string& g) const {
  auto it = compose1.find({f, g});
  if (it == compose1.end()) missing("compose1", pair_key(f, g));
  return it->second;
}

std::string FiniteModel::comp2(const std::string& a,
                               const std::string& b) const {
  auto it = compose2.find({a, b});
  if (it == compose2.end()) missing("compose2", pair_key(a, b));
  return it->second;
}

std::string FiniteModel::id1(const std::string& obj) const {
  auto it = identity1.find(obj);
  if (it == identity1.end()) missing("identity1", obj);
  return it->second;
}

std::string FiniteModel::id2(const std::string& f) const {
  auto it = identity2.find(f);
  if (it == identity2.end()) missing("identity2", f);
  return it->second;
}

std::string FiniteModel::inv2(const std::string& a) const {
  auto it = inverse2.find(a);
  if (it == inverse2.end()) missing("inverse2", a);
  return it->second;
}

std::string FiniteModel::lt1(const std::string& obj,
                             const std::string& f) const {
  auto it = ltensor1.find({obj, f});
  if (it == ltensor1.end()) missing("ltensor1", pair_key(obj, f));
  return it->second;
}

std::string FiniteModel::rt1(const std::string& obj,
                             const std::string& f) const {
  auto it = rtensor1.find({obj, f});
  if (it == rtensor1.end()) missing("rtensor1", pair_key(obj, f));
  return it->second;
}

std::string FiniteModel::lt2(const std::string& obj,
                             const std::string& a) const {
  auto it = ltensor2.find({obj, a});
  if (it == ltensor2.end()) missing("ltensor2", pair_key(obj, a));
  return it->second;
}

std::string FiniteModel::rt2(const std::string& obj,
                             const std::string& a) const {
  auto it = rtensor2.find({obj, a});
  if (it == rtensor2.end()) missing("rtensor2", pair_key(obj, a));
  return it->second;
}

std::string FiniteModel::whisker_post(const std::string& h,
                                      const std::string& a) const {
  auto it = post_whisker.find({h, a});
  if (it == post_whisker.end()) missing("post_whisker", pair_key(h, a));
  return it->second;
}

std::string FiniteModel::whisker_pre(const std::string& a,
                                     const std::string& h) const {
  auto it = pre_whisker.find({a, h});
  if (it == pre_whisker.end()) missing("pre_whisker", pair_key(a, h));
  return it->second;
}

std::string FiniteModel::phi_at(const std::string& f,
                                const std::string& g) const {
  auto it = phi.find({f, g});
  if (it == phi.end()) missing("phi", pair_key(f, g));
  return it->second;
}

std::string FiniteModel::beta_at(const std::string& a,
                                 const std::string& b) const {
  auto it = beta.find({a, b});
  if (it == beta.end()) missing("beta", pair_key(a, b));
  return it->second;
}

bool FiniteModel::is_braiding_component(const std::string& f) const {
  for (const auto& [key, value] : beta) {
    if (value == f) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_model(const FiniteModel& m) {
  std::vector<std::string> out;
  auto complain = [&](const std::string& msg) { out.push_back(msg); };
  auto has_obj = [&](const std::string& o) {
    return std::find(m.objects.begin(), m.objects.end(), o) != m.objects.end();
  };

  if (!has_obj(m.unit)) complain("unit '" + m.unit + "' is not an object");
  for (const auto& o : m.checker_objects()) {
    if (!has_obj(o)) complain("window object '" + o + "' is not an object");
  }

  for (const auto& c : m.cells1) {
    if (!has_obj(c.dom) || !has_obj(c.cod)) {
      complain("1-cell '" + c.id + "' has undeclared endpoints");
    }
  }
  for (const auto& c : m.cells2) {
    const Cell1Info* s = m.find_cell1(c.src);
    const Cell1Info* t = m.find_cell1(c.tgt);
    if (!s || !t) {
      complain("2-cell '" + c.id + "' has undeclared endpoints");
    } else if (s->dom != t->dom || s->cod != t->cod) {
      complain("2-cell '" + c.id + "' is not between parallel 1-cells");
    }
  }

  for (const auto& [key, value] : m.compose1) {
    const Cell1Info* f = m.find_cell1(key.first);
    const Cell1Info* g = m.find_cell1(key.second);
    const Cell1Info* h = m.find_cell1(value);
    if (!f || !g || !h) {
      complain("compose1[" + pair_key(key.first, key.second) +
               "] references unknown 1-cells");
    } else if (f->cod != g->dom || h->dom != f->dom || h->cod != g->cod) {
      complain("compose1[" + pair_key(key.first, key.second) +
               "] endpoints do not chain");
    }
  }
  for (const auto& [obj, value] : m.identity1) {
    const Cell1Info* f = m.find_cell1(value);
    if (!f || f->dom != obj || f->cod != obj) {
      complain("identity1[" + obj + "] is not an endomorphism of " + obj);
    }
  }
  for (const auto& [key, value] : m.compose2) {
    const Cell2Info* a = m.find_cell2(key.first);
    const Cell2Info* b = m.find_cell2(key.second);
    const Cell2Info* c = m.find_cell2(value);
    if (!a || !b || !c) {
      complain("compose2[" + pair_key(key.first, key.second) +
               "] references unknown 2-cells");
    } else if (a->tgt != b->src || c->src != a->src || c->tgt != b->tgt) {
      complain("compose2[" + pair_key(key.first, key.second) +
               "] endpoints do not chain");
    }
  }
  for (const auto& [f, value] : m.identity2) {
    const Cell2Info* a = m.find_cell2(value);
    if (!a || a->src != f || a->tgt != f) {
      complain("identity2[" + f + "] is not an endo 2-cell of " + f);
    }
  }
  for (const auto& [a, value] : m.inverse2) {
    const Cell2Info* fwd = m.find_cell2(a);
    const Cell2Info* bwd = m.find_cell2(value);
    if (!fwd || !bwd) {
      complain("inverse2[" + a + "] references unknown 2-cells");
      continue;
    }
    if (bwd->src != fwd->tgt || bwd->tgt != fwd->src) {
      complain("inverse2[" + a + "] endpoints are not reversed");
      continue;
    }
    try {
      if (m.comp2(a, value) != m.id2(fwd->src) ||
          m.comp2(value, a) != m.id2(fwd->tgt)) {
        complain("inverse2[" + a + "] does not cancel");
      }
    } catch (const Error& e) {
      complain(std::string("inverse2[") + a + "]: " + e.what());
    }
  }

  auto check_action1 =
      [&](const char* name,
          const std::map<std::pair<std::string, std::string>, std::string>& t,
          bool left) {
        for (const auto& [key, value] : t) {
          const Cell1Info* f = m.find_cell1(key.second);
          const Cell1Info* r = m.find_cell1(value);
          if (!has_obj(key.first) || !f || !r) {
            complain(std::string(name) + "[" +
                     pair_key(key.first, key.second) + "] has unknown parts");
            continue;
          }
          try {
            const std::string dom = left ? m.tensor_obj(key.first, f->dom)
                                         : m.tensor_obj(f->dom, key.first);
            const std::string cod = left ? m.tensor_obj(key.first, f->cod)
                                         : m.tensor_obj(f->cod, key.first);
            if (r->dom != dom || r->cod != cod) {
              complain(std::string(name) + "[" +
                       pair_key(key.first, key.second) +
                       "] endpoints disagree with the object tensor");
            }
          } catch (const Error&) {
            // Carrier windows may omit far tensor entries.
          }
        }
      };
  check_action1("ltensor1", m.ltensor1, true);
  check_action1("rtensor1", m.rtensor1, false);

  for (const auto& [key, value] : m.phi) {
    if (!m.find_cell2(value)) {
      complain("phi[" + pair_key(key.first, key.second) +
               "] is not a 2-cell");
    } else if (!m.inverse2.count(value)) {
      complain("phi[" + pair_key(key.first, key.second) +
               "] has no inverse entry");
    }
  }
  for (const auto& [key, value] : m.beta) {
    const Cell1Info* f = m.find_cell1(value);
    if (!f) {
      complain("beta[" + pair_key(key.first, key.second) +
               "] is not a 1-cell");
      continue;
    }
    try {
      if (f->dom != m.tensor_obj(key.first, key.second) ||
          f->cod != m.tensor_obj(key.second, key.first)) {
        complain("beta[" + pair_key(key.first, key.second) +
                 "] has the wrong endpoints");
      }
    } catch (const Error&) {
    }
  }
  for (const auto& [letter, obj] : m.assign_obj) {
    if (!has_obj(obj)) {
      complain("assign_obj[" + letter + "] is not an object");
    }
  }
  for (const auto& [gen, cell] : m.assign_gen1) {
    if (!m.find_cell1(cell)) {
      complain("assign_gen1[" + gen + "] is not a 1-cell");
    }
  }
  for (const auto& [gen, cell] : m.assign_gen2) {
    if (!m.find_cell2(cell)) {
      complain("assign_gen2[" + gen + "] is not a 2-cell");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

std::string eval_body(const FiniteModel& m, const Signature& sig,
                      const SliceBody& body) {
  if (const auto* g = std::get_if<GenBody>(&body)) {
    auto it = m.assign_gen1.find(g->gen1);
    if (it == m.assign_gen1.end()) missing("assign_gen1", g->gen1);
    return it->second;
  }
  const auto& b = std::get<BraidBody>(body);
  auto x = m.assign_obj.find(b.x);
  auto y = m.assign_obj.find(b.y);
  if (x == m.assign_obj.end()) missing("assign_obj", b.x);
  if (y == m.assign_obj.end()) missing("assign_obj", b.y);
  return m.beta_at(x->second, y->second);
}

std::string eval_slice(const FiniteModel& m, const Signature& sig,
                       const Slice& s) {
  const std::string body = eval_body(m, sig, s.body);
  return m.lt1(m.word_object(m.assign_obj, s.left),
               m.rt1(m.word_object(m.assign_obj, s.right), body));
}

// Composite 1-cell of slices [from, to) of d.
std::string eval_range(const FiniteModel& m, const Signature& sig,
                       const Diagram& d, std::size_t from, std::size_t to) {
  std::string cur = m.id1(m.word_object(m.assign_obj, word_at(sig, d, from)));
  for (std::size_t i = from; i < to; ++i) {
    cur = m.comp1(cur, eval_slice(m, sig, d.slices[i]));
  }
  return cur;
}

}  // namespace

std::string eval1(const FiniteModel& m, const Signature& sig,
                  const Diagram& d) {
  return eval_range(m, sig, d, 0, d.slices.size());
}

namespace {

// Local 2-cell of a forward interchange between slices pos, pos+1 of d,
// whiskered out to the full boundary: the upper body sits left of the lower
// body, separated by the letters of mid.
std::string eval_interchange_fwd(const FiniteModel& m, const Signature& sig,
                                 const Diagram& d, std::size_t pos) {
  const Slice& lower = d.slices[pos];
  const Slice& upper = d.slices[pos + 1];
  const std::string f = eval_body(m, sig, upper.body);
  const std::string g = eval_body(m, sig, lower.body);
  const std::size_t cut = upper.left.size() + body_dom(sig, upper.body).size();
  const Word mid(lower.left.begin() + static_cast<std::ptrdiff_t>(cut),
                 lower.left.end());
  const std::string inner =
      m.phi_at(m.rt1(m.word_object(m.assign_obj, mid), f), g);
  return m.lt2(m.word_object(m.assign_obj, upper.left),
               m.rt2(m.word_object(m.assign_obj, lower.right), inner));
}

std::string eval_cell_local(const FiniteModel& m, const Signature& sig,
                            const Diagram& cur, const Diagram& next,
                            const Cell& c, std::size_t& pos,
                            std::size_t& window) {
  if (const auto* ic = std::get_if<InterchangeCell>(&c)) {
    pos = ic->pos;
    window = 2;
    if (!ic->back) return eval_interchange_fwd(m, sig, cur, ic->pos);
    // A backward interchange is undone by the forward one on its result.
    return m.inv2(eval_interchange_fwd(m, sig, next, ic->pos));
  }
  const auto& gc = std::get<GenCell>(c);
  const Gen2* g = sig.find_gen2(gc.gen2);
  if (!g) missing("gens2", gc.gen2);
  auto it = m.assign_gen2.find(gc.gen2);
  if (it == m.assign_gen2.end()) missing("assign_gen2", gc.gen2);
  const std::string raw = gc.back ? m.inv2(it->second) : it->second;
  pos = gc.pos;
  window = (gc.back ? g->tgt : g->src)->slices.size();
  return m.lt2(m.word_object(m.assign_obj, gc.left),
               m.rt2(m.word_object(m.assign_obj, gc.right), raw));
}

}  // namespace

std::string eval2(const FiniteModel& m, const Signature& sig,
                  const Script& s) {
  Diagram cur = s.src;
  std::string acc = m.id2(eval1(m, sig, cur));
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    auto applied = apply_cell(sig, cur, s.cells[i]);
    if (auto* msg = std::get_if<std::string>(&applied)) {
      std::ostringstream err;
      err << "cell " << i << ": " << *msg;
      throw Error("ReplayFailure", err.str());
    }
    Diagram next = std::move(std::get<Diagram>(applied));
    if (std::holds_alternative<StructCell>(s.cells[i])) {
      if (eval1(m, sig, next) != eval1(m, sig, cur)) {
        throw Error("StructEvalMismatch",
                    "structural move changed the evaluation");
      }
      cur = std::move(next);
      continue;
    }
    std::size_t pos = 0;
    std::size_t window = 0;
    const std::string local =
        eval_cell_local(m, sig, cur, next, s.cells[i], pos, window);
    const std::string below = eval_range(m, sig, cur, 0, pos);
    const std::string above =
        eval_range(m, sig, cur, pos + window, cur.slices.size());
    acc = m.comp2(acc, m.whisker_post(above, m.whisker_pre(local, below)));
    cur = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Synthetic context.

ModelContext make_context(const FiniteModel& m) {
  ModelContext ctx;
  ctx.model = m;
  ctx.model.assign_obj.clear();
  ctx.model.assign_gen1.clear();
  ctx.model.assign_gen2.clear();
  for (const auto& o : m.objects) {
    ctx.sig.objects.push_back({o});
    ctx.obj_letter[o] = o;
    ctx.model.assign_obj[o] = o;
  }
  for (const auto& c : m.cells1) {
    ctx.sig.gens1.push_back(Gen1{c.id, {c.dom}, {c.cod}});
    ctx.cell1_gen[c.id] = c.id;
    ctx.model.assign_gen1[c.id] = c.id;
  }
  return ctx;
}

Diagram cell_diagram(const ModelContext& ctx, const std::string& cell1) {
  const Cell1Info* c = ctx.model.find_cell1(cell1);
  if (!c) missing("cells1", cell1);
  Diagram d;
  d.src = {ctx.obj_letter.at(c->dom)};
  d.slices.push_back(Slice{{}, GenBody{ctx.cell1_gen.at(cell1)}, {}});
  return d;
}

}  // namespace wirecat
