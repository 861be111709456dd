#include <algorithm>
#include <functional>
#include <sstream>

#include "wirecat/error.hpp"
#include "wirecat/model.hpp"

namespace wirecat {

bool Report::all_pass() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const AxiomOutcome& o) {
    return o.status != CheckStatus::Fail;
  });
}

const AxiomOutcome* Report::find(const std::string& axiom) const {
  for (const auto& o : outcomes)
    if (o.axiom == axiom) return &o;
  return nullptr;
}

std::string report_to_string(const Report& r) {
  std::ostringstream out;
  out << "model " << r.model;
  if (!r.window_note.empty()) out << " (" << r.window_note << ")";
  out << "\n";
  for (const auto& o : r.outcomes) {
    const char* status = o.status == CheckStatus::Pass   ? "pass"
                         : o.status == CheckStatus::Fail ? "FAIL"
                                                         : "skip";
    out << "  " << o.axiom << ": " << status << " (" << o.instances
        << " instances)";
    if (!o.witness.empty()) out << "\n    " << o.witness;
    out << "\n";
  }
  return out.str();
}

namespace {

struct Checker {
  const FiniteModel& m;
  Report report;

  // 1-cells and 2-cells whose endpoints lie in the checker window.
  std::vector<std::string> cw1;
  std::vector<std::string> cw2;

  explicit Checker(const FiniteModel& model, const char* suite) : m(model) {
    report.model = m.name;
    if (!m.enum_window.empty() && m.enum_window.size() != m.objects.size()) {
      std::ostringstream note;
      note << suite << " over " << m.enum_window.size() << " of "
           << m.objects.size() << " carrier objects";
      report.window_note = note.str();
    }
    const auto& w = m.checker_objects();
    auto in_window = [&](const std::string& o) {
      return std::find(w.begin(), w.end(), o) != w.end();
    };
    for (const auto& c : m.cells1) {
      if (in_window(c.dom) && in_window(c.cod)) cw1.push_back(c.id);
    }
    for (const auto& c : m.cells2) {
      const Cell1Info* s = m.find_cell1(c.src);
      if (s && in_window(s->dom) && in_window(s->cod)) cw2.push_back(c.id);
    }
  }

  std::string dom(const std::string& f) { return m.find_cell1(f)->dom; }
  std::string cod(const std::string& f) { return m.find_cell1(f)->cod; }
  std::string src2(const std::string& a) { return m.find_cell2(a)->src; }
  std::string tgt2(const std::string& a) { return m.find_cell2(a)->tgt; }

  // Runs one axiom; body calls check() per instance and returns on the first
  // failure. Missing table entries fail the instance loudly.
  void axiom(const std::string& name,
             const std::function<void(AxiomOutcome&)>& body) {
    AxiomOutcome o;
    o.axiom = name;
    try {
      body(o);
    } catch (const Error& e) {
      if (o.status != CheckStatus::Fail) {
        o.status = CheckStatus::Fail;
        o.witness = std::string("lookup failed: ") + e.what();
      }
    }
    report.outcomes.push_back(std::move(o));
  }

  static bool note(AxiomOutcome& o, bool ok, const std::string& witness) {
    ++o.instances;
    if (!ok && o.status != CheckStatus::Fail) {
      o.status = CheckStatus::Fail;
      o.witness = witness;
    }
    return ok;
  }
};

std::string eq_witness(const std::string& inst, const std::string& lhs,
                       const std::string& rhs) {
  return inst + ": lhs=" + lhs + " rhs=" + rhs;
}

}  // namespace

Report check_stringent(const FiniteModel& m) {
  Checker ck(m, "stringent checks");
  const auto& W = m.checker_objects();

  ck.axiom("stringent.v", [&](AxiomOutcome& o) {
    for (const auto& f : ck.cw1) {
      for (const auto& g : ck.cw1) {
        const std::string p = m.phi_at(f, g);
        const Cell2Info* info = m.find_cell2(p);
        const std::string src =
            m.comp1(m.lt1(ck.dom(f), g), m.rt1(ck.cod(g), f));
        const std::string tgt =
            m.comp1(m.rt1(ck.dom(g), f), m.lt1(ck.cod(f), g));
        Checker::note(o, info && info->src == src && info->tgt == tgt,
                      eq_witness("phi(" + f + "," + g + ")",
                                 info ? info->src + "=>" + info->tgt : "?",
                                 src + "=>" + tgt));
        if (o.status == CheckStatus::Fail) return;
      }
    }
  });

  ck.axiom("stringent.vi", [&](AxiomOutcome& o) {
    for (const auto& X : W) {
      for (const auto& g : ck.cw1) {
        for (const auto& h : ck.cw1) {
          std::string lhs = m.phi_at(m.lt1(X, g), h);
          std::string rhs = m.lt2(X, m.phi_at(g, h));
          if (!Checker::note(o, lhs == rhs,
                             eq_witness("phi(" + X + "(x)" + g + ", " + h + ")",
                                        lhs, rhs)))
            return;
          lhs = m.phi_at(m.rt1(X, g), h);
          rhs = m.phi_at(g, m.lt1(X, h));
          if (!Checker::note(o, lhs == rhs,
                             eq_witness("phi(" + g + "(x)" + X + ", " + h + ")",
                                        lhs, rhs)))
            return;
          lhs = m.phi_at(g, m.rt1(X, h));
          rhs = m.rt2(X, m.phi_at(g, h));
          if (!Checker::note(o, lhs == rhs,
                             eq_witness("phi(" + g + ", " + h + "(x)" + X + ")",
                                        lhs, rhs)))
            return;
        }
      }
    }
  });

  ck.axiom("stringent.vii", [&](AxiomOutcome& o) {
    for (const auto& f : ck.cw1) {
      for (const auto& B : W) {
        std::string lhs = m.phi_at(f, m.id1(B));
        std::string rhs = m.id2(m.rt1(B, f));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("phi(" + f + ", id_" + B + ")", lhs,
                                      rhs)))
          return;
        lhs = m.phi_at(m.id1(B), f);
        rhs = m.id2(m.lt1(B, f));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("phi(id_" + B + ", " + f + ")", lhs,
                                      rhs)))
          return;
      }
    }
  });

  ck.axiom("stringent.viii", [&](AxiomOutcome& o) {
    for (const auto& a : ck.cw2) {
      const std::string f = ck.src2(a);
      const std::string fp = ck.tgt2(a);
      const std::string A = ck.dom(f);
      const std::string Ap = ck.cod(f);
      for (const auto& g : ck.cw1) {
        const std::string B = ck.dom(g);
        const std::string Bp = ck.cod(g);
        // alpha on the first tensor factor.
        std::string lhs = m.comp2(
            m.whisker_pre(m.rt2(Bp, a), m.lt1(A, g)), m.phi_at(fp, g));
        std::string rhs = m.comp2(
            m.phi_at(f, g), m.whisker_post(m.lt1(Ap, g), m.rt2(B, a)));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("naturality in " + a + " against " + g,
                                      lhs, rhs)))
          return;
      }
    }
    // The same square with the 2-cell on the second tensor factor.
    for (const auto& b : ck.cw2) {
      const std::string g = ck.src2(b);
      const std::string gp = ck.tgt2(b);
      const std::string B = ck.dom(g);
      const std::string Bp = ck.cod(g);
      for (const auto& f : ck.cw1) {
        const std::string A = ck.dom(f);
        const std::string Ap = ck.cod(f);
        const std::string lhs = m.comp2(
            m.whisker_post(m.rt1(Bp, f), m.lt2(A, b)), m.phi_at(f, gp));
        const std::string rhs = m.comp2(
            m.phi_at(f, g), m.whisker_pre(m.lt2(Ap, b), m.rt1(B, f)));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("naturality in " + b + " against " + f,
                                      lhs, rhs)))
          return;
      }
    }
  });

  ck.axiom("stringent.ix", [&](AxiomOutcome& o) {
    for (const auto& f : ck.cw1) {
      const std::string A = ck.dom(f);
      const std::string Ap = ck.cod(f);
      for (const auto& g : ck.cw1) {
        for (const auto& h : ck.cw1) {
          if (ck.cod(g) != ck.dom(h)) continue;
          std::string lhs = m.phi_at(f, m.comp1(g, h));
          std::string rhs =
              m.comp2(m.whisker_pre(m.phi_at(f, h), m.lt1(A, g)),
                      m.whisker_post(m.lt1(Ap, h), m.phi_at(f, g)));
          if (!Checker::note(
                  o, lhs == rhs,
                  eq_witness("phi(" + f + ", " + h + "o" + g + ")", lhs, rhs)))
            return;
        }
      }
    }
    // Rotated version: composing in the first argument.
    for (const auto& g : ck.cw1) {
      const std::string B = ck.dom(g);
      const std::string Bp = ck.cod(g);
      for (const auto& f : ck.cw1) {
        for (const auto& fp : ck.cw1) {
          if (ck.cod(f) != ck.dom(fp)) continue;
          std::string lhs = m.phi_at(m.comp1(f, fp), g);
          std::string rhs =
              m.comp2(m.whisker_post(m.rt1(Bp, fp), m.phi_at(f, g)),
                      m.whisker_pre(m.phi_at(fp, g), m.rt1(B, f)));
          if (!Checker::note(
                  o, lhs == rhs,
                  eq_witness("phi(" + fp + "o" + f + ", " + g + ")", lhs, rhs)))
            return;
        }
      }
    }
  });

  return ck.report;
}

Report check_symmetric(const FiniteModel& m) {
  Checker ck(m, "symmetric checks");
  const auto& W = m.checker_objects();

  ck.axiom("symmetric.i", [&](AxiomOutcome& o) {
    for (const auto& A : W) {
      for (const auto& B : W) {
        const std::string lhs = m.comp1(m.beta_at(A, B), m.beta_at(B, A));
        const std::string rhs = m.id1(m.tensor_obj(A, B));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("beta(" + A + "," + B + ") roundtrip",
                                      lhs, rhs)))
          return;
      }
    }
  });

  ck.axiom("symmetric.ii", [&](AxiomOutcome& o) {
    for (const auto& A : W) {
      for (const auto& B : W) {
        for (const auto& C : W) {
          std::string lhs = m.beta_at(m.tensor_obj(A, B), C);
          std::string rhs =
              m.comp1(m.lt1(A, m.beta_at(B, C)), m.rt1(B, m.beta_at(A, C)));
          if (!Checker::note(o, lhs == rhs,
                             eq_witness("beta(" + A + "(x)" + B + ", " + C +
                                            ")",
                                        lhs, rhs)))
            return;
          lhs = m.beta_at(A, m.tensor_obj(B, C));
          rhs = m.comp1(m.rt1(C, m.beta_at(A, B)), m.lt1(B, m.beta_at(A, C)));
          if (!Checker::note(o, lhs == rhs,
                             eq_witness("beta(" + A + ", " + B + "(x)" + C +
                                            ")",
                                        lhs, rhs)))
            return;
        }
      }
    }
  });

  ck.axiom("symmetric.iii", [&](AxiomOutcome& o) {
    for (const auto& f : ck.cw1) {
      const std::string A = ck.dom(f);
      const std::string Ap = ck.cod(f);
      for (const auto& B : W) {
        std::string lhs = m.comp1(m.rt1(B, f), m.beta_at(Ap, B));
        std::string rhs = m.comp1(m.beta_at(A, B), m.lt1(B, f));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("beta natural in " + f + " (left of " +
                                          B + ")",
                                      lhs, rhs)))
          return;
        lhs = m.comp1(m.lt1(B, f), m.beta_at(B, Ap));
        rhs = m.comp1(m.beta_at(B, A), m.rt1(B, f));
        if (!Checker::note(o, lhs == rhs,
                           eq_witness("beta natural in " + f + " (right of " +
                                          B + ")",
                                      lhs, rhs)))
          return;
      }
    }
  });

  ck.axiom("symmetric.iv", [&](AxiomOutcome& o) {
    for (const auto& f : ck.cw1) {
      for (const auto& B : W) {
        for (const auto& C : W) {
          std::string p = m.phi_at(f, m.beta_at(B, C));
          std::string expected = m.id2(m.find_cell2(p)->src);
          if (!Checker::note(o, p == expected,
                             eq_witness("phi(" + f + ", beta(" + B + "," + C +
                                            "))",
                                        p, expected)))
            return;
          p = m.phi_at(m.beta_at(B, C), f);
          expected = m.id2(m.find_cell2(p)->src);
          if (!Checker::note(o, p == expected,
                             eq_witness("phi(beta(" + B + "," + C + "), " + f +
                                            ")",
                                        p, expected)))
            return;
        }
      }
    }
  });

  ck.axiom("symmetric.unit", [&](AxiomOutcome& o) {
    for (const auto& A : W) {
      if (!Checker::note(
              o, m.beta_at(m.unit, A) == m.id1(A),
              eq_witness("beta(1," + A + ")", m.beta_at(m.unit, A),
                         m.id1(A))))
        return;
      if (!Checker::note(
              o, m.beta_at(A, m.unit) == m.id1(A),
              eq_witness("beta(" + A + ",1)", m.beta_at(A, m.unit),
                         m.id1(A))))
        return;
    }
  });

  return ck.report;
}

// ---------------------------------------------------------------------------
// Quasistrict conversion.

QuasistrictData to_quasistrict(const FiniteModel& m, bool override_prereq) {
  if (!override_prereq) {
    const Report rs = check_stringent(m);
    const Report ry = check_symmetric(m);
    if (!rs.all_pass() || !ry.all_pass()) {
      throw Error("PrerequisiteFailure",
                  "model fails the stringent or symmetric checks; derived "
                  "coherence data would be incoherent");
    }
  }
  QuasistrictData q;
  q.base = m;
  q.base.phi.clear();

  const ModelContext ctx = make_context(m);
  const auto& W = m.checker_objects();
  // Conversion is table-level: it ranges over the whole carrier so the
  // restriction round trip reproduces the phi table exactly. Tuples whose
  // tensor leaves a windowed carrier are skipped.
  std::vector<std::string> c1;
  for (const auto& c : m.cells1) c1.push_back(c.id);

  for (const auto& f : c1) {
    for (const auto& fp : c1) {
      if (ctx.model.find_cell1(f)->cod != ctx.model.find_cell1(fp)->dom)
        continue;
      for (const auto& g : c1) {
        for (const auto& gp : c1) {
          if (ctx.model.find_cell1(g)->cod != ctx.model.find_cell1(gp)->dom)
            continue;
          try {
            const Script phi_script =
                build_phi(ctx.sig, cell_diagram(ctx, f), cell_diagram(ctx, g),
                          cell_diagram(ctx, fp), cell_diagram(ctx, gp));
            q.Phi[{fp, gp, f, g}] = eval2(ctx.model, ctx.sig, phi_script);
          } catch (const Error&) {
            // outside the materialized carrier
          }
        }
      }
    }
  }
  for (const auto& f : c1) {
    for (const auto& g : c1) {
      try {
        const Script beta_script =
            build_beta_fg(ctx.sig, cell_diagram(ctx, f), cell_diagram(ctx, g));
        q.beta2[{f, g}] = eval2(ctx.model, ctx.sig, beta_script);
      } catch (const Error&) {
        // outside the materialized carrier
      }
    }
  }
  for (const auto& A : W) {
    for (const auto& B : W) {
      q.sigma[{A, B}] = m.id2(m.id1(m.tensor_obj(A, B)));
    }
  }
  return q;
}

FiniteModel from_quasistrict(const QuasistrictData& q) {
  FiniteModel m = q.base;
  m.phi.clear();
  for (const auto& [key, value] : q.Phi) {
    const auto& [fp, gp, f, g] = key;
    const Cell1Info* fpi = m.find_cell1(fp);
    const Cell1Info* gi = m.find_cell1(g);
    if (!fpi || !gi) continue;
    // phi_{f', g} is recovered from the quadruple (f', id), (id, g).
    if (f == m.id1(fpi->dom) && gp == m.id1(gi->cod)) {
      m.phi[{fp, g}] = value;
    }
  }
  return m;
}

Report check_quasistrict(const FiniteModel& m, const QuasistrictData& q) {
  Checker ck(m, "quasistrict checks");

  ck.axiom("qs.1", [&](AxiomOutcome& o) {
    for (const auto& [key, value] : q.sigma) {
      const std::string expected =
          m.id2(m.id1(m.tensor_obj(key.first, key.second)));
      if (!Checker::note(o, value == expected,
                         eq_witness("sigma(" + key.first + "," + key.second +
                                        ")",
                                    value, expected)))
        return;
    }
  });

  ck.axiom("qs.2", [&](AxiomOutcome& o) {
    for (const auto& [key, value] : q.beta2) {
      const Cell1Info* f = m.find_cell1(key.first);
      const Cell1Info* g = m.find_cell1(key.second);
      const bool f_id = f && key.first == m.id1(f->dom);
      const bool g_id = g && key.second == m.id1(g->dom);
      if (!f_id && !g_id) continue;
      const std::string expected = m.id2(m.find_cell2(value)->src);
      if (!Checker::note(o, value == expected,
                         eq_witness("beta2(" + key.first + "," + key.second +
                                        ")",
                                    value, expected)))
        return;
    }
  });

  ck.axiom("qs.3", [&](AxiomOutcome& o) {
    for (const auto& [key, value] : q.Phi) {
      const std::string& fp = key[0];
      const std::string& g = key[3];
      if (!m.is_braiding_component(fp) && !m.is_braiding_component(g))
        continue;
      const std::string expected = m.id2(m.find_cell2(value)->src);
      if (!Checker::note(o, value == expected,
                         eq_witness("Phi(" + key[0] + "," + key[1] + ";" +
                                        key[2] + "," + key[3] + ")",
                                    value, expected)))
        return;
    }
  });

  ck.axiom("css.2a", [&](AxiomOutcome& o) {
    for (const auto& A : m.checker_objects()) {
      if (!Checker::note(o, m.beta_at(m.unit, A) == m.id1(A),
                         eq_witness("beta(1," + A + ")",
                                    m.beta_at(m.unit, A), m.id1(A))))
        return;
      if (!Checker::note(o, m.beta_at(A, m.unit) == m.id1(A),
                         eq_witness("beta(" + A + ",1)",
                                    m.beta_at(A, m.unit), m.id1(A))))
        return;
    }
  });

  ck.axiom("qs.restrict", [&](AxiomOutcome& o) {
    const FiniteModel back = from_quasistrict(q);
    for (const auto& [key, value] : m.phi) {
      auto it = back.phi.find(key);
      const bool present = it != back.phi.end();
      if (!Checker::note(o, present && it->second == value,
                         eq_witness("phi(" + key.first + "," + key.second +
                                        ") roundtrip",
                                    present ? it->second : "<missing>",
                                    value)))
        return;
    }
  });

  return ck.report;
}

}  // namespace wirecat
