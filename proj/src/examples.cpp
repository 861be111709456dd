#include "wirecat/examples.hpp"

#include <algorithm>
#include <sstream>

#include "wirecat/error.hpp"

namespace wirecat {

bool smc_tables_equal(const SmcTables& a, const SmcTables& b) {
  auto morph_eq = [](const std::vector<SmcMorphism>& x,
                     const std::vector<SmcMorphism>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].id != y[i].id || x[i].dom != y[i].dom || x[i].cod != y[i].cod)
        return false;
    }
    return true;
  };
  return a.objects == b.objects && a.unit == b.unit && a.tensor == b.tensor &&
         morph_eq(a.morphisms, b.morphisms) && a.identity == b.identity &&
         a.compose == b.compose && a.mtensor == b.mtensor &&
         a.braiding == b.braiding;
}

SmcTables picard_p() {
  SmcTables p;
  p.name = "picard_p";
  p.objects = {"x0", "x1"};
  p.unit = "x0";
  // Morphism ids: p<object> is I, m<object> is -I.
  for (const std::string& x : p.objects) {
    for (const std::string& y : p.objects) {
      const std::string sum = (x == y) ? "x0" : "x1";
      p.tensor[{x, y}] = sum;
    }
    p.morphisms.push_back({"p" + x, x, x});
    p.morphisms.push_back({"m" + x, x, x});
    p.identity[x] = "p" + x;
    p.compose[{"p" + x, "p" + x}] = "p" + x;
    p.compose[{"p" + x, "m" + x}] = "m" + x;
    p.compose[{"m" + x, "p" + x}] = "m" + x;
    p.compose[{"m" + x, "m" + x}] = "p" + x;
  }
  for (const std::string& x : p.objects) {
    for (const std::string& y : p.objects) {
      const std::string sum = p.tensor.at({x, y});
      auto sign = [](const std::string& a) { return a[0] == 'm' ? -1 : 1; };
      for (const std::string& a : {"p" + x, "m" + x}) {
        for (const std::string& b : {"p" + y, "m" + y}) {
          p.mtensor[{a, b}] =
              (sign(a) * sign(b) < 0 ? "m" : "p") + sum;
        }
      }
      // Koszul rule: only the odd-odd braiding is nontrivial.
      p.braiding[{x, y}] = (x == "x1" && y == "x1") ? "mx0" : "p" + sum;
    }
  }
  return p;
}

FiniteModel deloop(const SmcTables& smc) {
  FiniteModel m;
  m.name = "deloop(" + smc.name + ")";
  m.objects = {"pt"};
  m.unit = "pt";
  m.tensor[{"pt", "pt"}] = "pt";
  for (const auto& x : smc.objects) {
    m.cells1.push_back({x, "pt", "pt"});
    m.ltensor1[{"pt", x}] = x;
    m.rtensor1[{"pt", x}] = x;
  }
  m.identity1["pt"] = smc.unit;
  m.compose1 = smc.tensor;
  for (const auto& f : smc.morphisms) {
    m.cells2.push_back({f.id, f.dom, f.cod});
    m.ltensor2[{"pt", f.id}] = f.id;
    m.rtensor2[{"pt", f.id}] = f.id;
  }
  for (const auto& [x, id] : smc.identity) m.identity2[x] = id;
  m.compose2 = smc.compose;
  for (const auto& a : smc.morphisms) {
    for (const auto& b : smc.morphisms) {
      auto fwd = smc.compose.find({a.id, b.id});
      auto bwd = smc.compose.find({b.id, a.id});
      if (fwd != smc.compose.end() && bwd != smc.compose.end() &&
          fwd->second == smc.identity.at(a.dom) &&
          bwd->second == smc.identity.at(a.cod)) {
        m.inverse2[a.id] = b.id;
      }
    }
  }
  for (const auto& a : smc.morphisms) {
    for (const auto& h : smc.objects) {
      auto post = smc.mtensor.find({a.id, smc.identity.at(h)});
      auto pre = smc.mtensor.find({smc.identity.at(h), a.id});
      if (post != smc.mtensor.end()) m.post_whisker[{h, a.id}] = post->second;
      if (pre != smc.mtensor.end()) m.pre_whisker[{a.id, h}] = pre->second;
    }
  }
  // The interchangor recovers the braiding with its arguments swapped.
  for (const auto& [key, value] : smc.braiding) {
    m.phi[{key.second, key.first}] = value;
  }
  m.beta[{"pt", "pt"}] = smc.unit;
  return m;
}

SmcTables loop(const FiniteModel& m) {
  if (m.objects.size() != 1) {
    throw Error("NotDeloopable", "loop needs a one-object model");
  }
  SmcTables smc;
  smc.name = "loop(" + m.name + ")";
  for (const auto& c : m.cells1) smc.objects.push_back(c.id);
  smc.unit = m.id1(m.objects.front());
  smc.tensor = m.compose1;
  for (const auto& a : m.cells2) smc.morphisms.push_back({a.id, a.src, a.tgt});
  for (const auto& [f, id] : m.identity2) smc.identity[f] = id;
  smc.compose = m.compose2;
  for (const auto& a : m.cells2) {
    for (const auto& b : m.cells2) {
      // a (x) b = (a * id) then (id * b).
      smc.mtensor[{a.id, b.id}] = m.comp2(m.whisker_post(b.src, a.id),
                                          m.whisker_pre(b.id, a.tgt));
    }
  }
  for (const auto& [key, value] : m.phi) {
    smc.braiding[{key.second, key.first}] = value;
  }
  return smc;
}

const char* to_string(SphereVariant v) {
  return v == SphereVariant::Literal ? "literal" : "braid_trivial_phi";
}

std::string q_object(int m) {
  return (m < 0 ? "on" + std::to_string(-m) : "o" + std::to_string(m));
}

std::string q_cell1(int m, int degree) {
  return q_object(m) + "d" + std::to_string(degree);
}

std::string q_cell2(int m, int degree, int sign) {
  return q_cell1(m, degree) + (sign < 0 ? "m" : "p");
}

FiniteModel sphere_q(int window, SphereVariant variant) {
  if (window < 0) throw Error("BadWindow", "window must be nonnegative");
  // Axiom instances tensor up to three window objects, so the carrier is
  // three windows wide.
  const int reach = 3 * window;
  auto in_carrier = [&](int m) { return -reach <= m && m <= reach; };
  auto mod2 = [](int m) { return ((m % 2) + 2) % 2; };

  FiniteModel q;
  std::ostringstream name;
  name << "sphere_q[" << window << "," << to_string(variant) << "]";
  q.name = name.str();
  q.unit = q_object(0);
  for (int m = -reach; m <= reach; ++m) {
    q.objects.push_back(q_object(m));
    q.identity1[q_object(m)] = q_cell1(m, 0);
    for (int p = 0; p < 2; ++p) {
      q.cells1.push_back({q_cell1(m, p), q_object(m), q_object(m)});
      q.identity2[q_cell1(m, p)] = q_cell2(m, p, 1);
      for (int s : {1, -1}) {
        q.cells2.push_back({q_cell2(m, p, s), q_cell1(m, p), q_cell1(m, p)});
        q.inverse2[q_cell2(m, p, s)] = q_cell2(m, p, s);
        for (int t : {1, -1}) {
          q.compose2[{q_cell2(m, p, s), q_cell2(m, p, t)}] =
              q_cell2(m, p, s * t);
        }
      }
      for (int r : {0, 1}) {
        for (int s : {1, -1}) {
          // Whiskering by a 1-cell shifts the degree, keeping the sign.
          q.post_whisker[{q_cell1(m, r), q_cell2(m, p, s)}] =
              q_cell2(m, (p + r) % 2, s);
          q.pre_whisker[{q_cell2(m, p, s), q_cell1(m, r)}] =
              q_cell2(m, (p + r) % 2, s);
        }
        q.compose1[{q_cell1(m, p), q_cell1(m, r)}] = q_cell1(m, (p + r) % 2);
      }
    }
  }
  for (int a = -reach; a <= reach; ++a) {
    for (int b = -reach; b <= reach; ++b) {
      if (!in_carrier(a + b)) continue;
      q.tensor[{q_object(a), q_object(b)}] = q_object(a + b);
      q.beta[{q_object(a), q_object(b)}] = q_cell1(a + b, mod2(a + b));
      for (int p = 0; p < 2; ++p) {
        q.ltensor1[{q_object(a), q_cell1(b, p)}] = q_cell1(a + b, p);
        q.rtensor1[{q_object(a), q_cell1(b, p)}] = q_cell1(b + a, p);
        for (int s : {1, -1}) {
          q.ltensor2[{q_object(a), q_cell2(b, p, s)}] = q_cell2(a + b, p, s);
          q.rtensor2[{q_object(a), q_cell2(b, p, s)}] = q_cell2(b + a, p, s);
        }
        for (int r : {0, 1}) {
          // Literal Koszul sign. Forcing triviality only on braiding
          // components is not stable under whiskering (object shifts reach
          // every parity class), so the braid-trivial variant trivializes
          // the whole interchangor -- the whisker closure of that forcing.
          const int sign =
              (variant == SphereVariant::Literal && p == 1 && r == 1) ? -1 : 1;
          q.phi[{q_cell1(a, p), q_cell1(b, r)}] = q_cell2(a + b, (p + r) % 2, sign);
        }
      }
    }
  }
  for (int n = -window; n <= window; ++n) {
    q.enum_window.push_back(q_object(n));
  }
  return q;
}

namespace {

bool parse_q_object_id(const std::string& id, int* m) {
  std::size_t at = 1;
  if (id.empty() || id[0] != 'o') return false;
  const bool neg = at < id.size() && id[at] == 'n';
  if (neg) ++at;
  if (at >= id.size()) return false;
  int value = 0;
  for (; at < id.size(); ++at) {
    if (id[at] < '0' || id[at] > '9') return false;
    value = value * 10 + (id[at] - '0');
  }
  *m = neg ? -value : value;
  return true;
}

bool parse_q_cell1_id(const std::string& id, int* m, int* deg) {
  const std::size_t d = id.rfind('d');
  if (d == std::string::npos || d + 2 != id.size()) return false;
  if (id[d + 1] != '0' && id[d + 1] != '1') return false;
  *deg = id[d + 1] - '0';
  return parse_q_object_id(id.substr(0, d), m);
}

}  // namespace

void annotate_sphere_parity(const FiniteModel& m, Report& r) {
  for (auto& o : r.outcomes) {
    if (o.axiom != "symmetric.iv" || o.status != CheckStatus::Fail) continue;
    const auto& W = m.checker_objects();
    std::size_t failures = 0;
    for (const auto& c : m.cells1) {
      if (std::find(W.begin(), W.end(), c.dom) == W.end()) continue;
      int fm = 0, fdeg = 0;
      if (!parse_q_cell1_id(c.id, &fm, &fdeg)) return;
      for (const auto& B : W) {
        for (const auto& C : W) {
          int mb = 0, mc = 0;
          if (!parse_q_object_id(B, &mb) || !parse_q_object_id(C, &mc)) return;
          const bool in_class = fdeg == 1 && (((mb + mc) % 2) + 2) % 2 == 1;
          for (const std::string& v :
               {m.phi_at(c.id, m.beta_at(B, C)),
                m.phi_at(m.beta_at(B, C), c.id)}) {
            const bool fail = v != m.id2(m.find_cell2(v)->src);
            // Annotate only when the failures are exactly the parity class.
            if (fail != in_class) return;
          }
          if (in_class) ++failures;
        }
      }
    }
    o.witness += "; counterexample class: deg f = 1, m+n odd => phi = -I (" +
                 std::to_string(failures) + " instances per side)";
  }
}

}  // namespace wirecat
