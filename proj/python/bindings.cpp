// Python bindings: a thin string-level facade over the C++ core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wirecat/dsl.hpp"
#include "wirecat/error.hpp"
#include "wirecat/examples.hpp"
#include "wirecat/model.hpp"
#include "wirecat/render.hpp"

namespace py = pybind11;

namespace {

using namespace wirecat;

Signature sig_of(const std::string& text) {
  if (text.empty()) return Signature{};
  auto r = parse_signature(text);
  if (!r.ok()) throw py::value_error(r.error->to_string());
  const std::vector<Diagnostic> problems = validate(*r.value);
  if (!problems.empty()) {
    std::string msg = "invalid signature:";
    for (const auto& p : problems) msg += "\n  " + p.message;
    throw py::value_error(msg);
  }
  return std::move(*r.value);
}

Diagram diagram_of(const Signature& sig, const std::string& text) {
  auto r = parse_diagram(text, sig);
  if (!r.ok()) throw py::value_error(r.error->to_string());
  if (!well_formed(sig, *r.value)) {
    throw py::value_error("diagram slices do not chain: " + text);
  }
  return std::move(*r.value);
}

Script script_of(const Signature& sig, const std::string& text) {
  auto r = parse_script(text, sig);
  if (!r.ok()) throw py::value_error(r.error->to_string());
  if (!well_formed(sig, r.value->src)) {
    throw py::value_error("script source does not chain: " + text);
  }
  return std::move(*r.value);
}

SphereVariant variant_of(const std::string& name) {
  if (name == "literal") return SphereVariant::Literal;
  if (name == "braid-trivial") return SphereVariant::BraidTrivialPhi;
  throw py::value_error("unknown variant '" + name + "'");
}

FiniteModel with_assignment(FiniteModel m, const Signature& sig,
                            const std::map<std::string, std::string>& assign) {
  for (const auto& [name, cell] : assign) {
    if (sig.has_object(name)) {
      m.assign_obj[name] = cell;
    } else if (sig.find_gen1(name) != nullptr) {
      m.assign_gen1[name] = cell;
    } else if (sig.find_gen2(name) != nullptr) {
      m.assign_gen2[name] = cell;
    } else {
      throw py::value_error("assignment name '" + name +
                            "' is not in the signature");
    }
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "wire-diagram calculus for stringent symmetric monoidal "
            "2-categories";

  py::register_exception<Error>(m, "WirecatError");

  // ---- terms -------------------------------------------------------------
  m.def(
      "parse_diagram",
      [](const std::string& text, const std::string& sig) {
        return print_diagram(diagram_of(sig_of(sig), text));
      },
      py::arg("text"), py::arg("sig") = "",
      "Parse a diagram and return its canonical printed form.");

  m.def(
      "parse_script",
      [](const std::string& text, const std::string& sig) {
        return print_script(script_of(sig_of(sig), text));
      },
      py::arg("text"), py::arg("sig") = "",
      "Parse a script and return its canonical printed form.");

  m.def(
      "normalize",
      [](const std::string& text, const std::string& sig) {
        const Signature s = sig_of(sig);
        return print_diagram(canonical_braids(s, diagram_of(s, text)));
      },
      py::arg("text"), py::arg("sig") = "",
      "Canonical braid form of a diagram.");

  m.def(
      "check_equal",
      [](const std::string& d1, const std::string& d2, const std::string& sig,
         std::size_t budget, std::size_t max_states) {
        const Signature s = sig_of(sig);
        EqualOptions opts;
        opts.insert_budget = budget;
        opts.max_states = max_states;
        const EqualResult r = equal(s, diagram_of(s, d1), diagram_of(s, d2),
                                    opts);
        std::vector<std::string> trace;
        if (r.trace) {
          for (const auto& mv : *r.trace) trace.push_back(move_to_string(mv));
        }
        const char* verdict = r.verdict == Verdict::True    ? "equal"
                              : r.verdict == Verdict::False ? "not-equal"
                                                            : "unknown";
        return py::make_tuple(verdict, trace);
      },
      py::arg("d1"), py::arg("d2"), py::arg("sig") = "",
      py::arg("budget") = 4, py::arg("max_states") = 500000,
      "On-the-nose equality; returns (verdict, move_trace).");

  m.def(
      "apply_script",
      [](const std::string& text, const std::string& sig) {
        const Signature s = sig_of(sig);
        return print_diagram(replay_or_throw(s, script_of(s, text)));
      },
      py::arg("text"), py::arg("sig") = "",
      "Replay a script and return the printed target diagram.");

  m.def(
      "derive_phi",
      [](const std::string& f, const std::string& g, const std::string& fp,
         const std::string& gp, const std::string& sig) {
        const Signature s = sig_of(sig);
        return print_script(build_phi(s, diagram_of(s, f), diagram_of(s, g),
                                      diagram_of(s, fp), diagram_of(s, gp)));
      },
      py::arg("f"), py::arg("g"), py::arg("fp"), py::arg("gp"),
      py::arg("sig") = "", "Derived tensorator script.");

  m.def(
      "derive_beta",
      [](const std::string& f, const std::string& g, const std::string& sig) {
        const Signature s = sig_of(sig);
        return print_script(
            build_beta_fg(s, diagram_of(s, f), diagram_of(s, g)));
      },
      py::arg("f"), py::arg("g"), py::arg("sig") = "",
      "Derived braiding naturator script.");

  m.def(
      "render",
      [](const std::string& text, const std::string& sig,
         const std::string& format) {
        const Signature s = sig_of(sig);
        RenderTarget target;
        if (format == "ascii") {
          target = RenderTarget::Ascii;
        } else if (format == "tikz") {
          target = RenderTarget::Tikz;
        } else {
          throw py::value_error("unknown format '" + format + "'");
        }
        if (auto d = parse_diagram(text, s); d.ok()) {
          return render_diagram(s, *d.value, target);
        }
        return render_script(s, script_of(s, text), target);
      },
      py::arg("text"), py::arg("sig") = "", py::arg("format") = "ascii",
      "Render a diagram or script as ascii art or tikz code.");

  // ---- models ------------------------------------------------------------
  py::class_<FiniteModel>(m, "Model")
      .def_readonly("name", &FiniteModel::name)
      .def_property_readonly(
          "objects", [](const FiniteModel& mm) { return mm.objects; })
      .def("save", [](const FiniteModel& mm) { return save_model(mm); })
      .def("__repr__", [](const FiniteModel& mm) {
        return "<wirecat.Model '" + mm.name + "'>";
      });

  m.def("deloop_p", [] { return deloop(picard_p()); },
        "The delooped skeletal Picard category of Z/2-graded lines.");

  m.def(
      "sphere_q",
      [](int window, const std::string& variant) {
        return sphere_q(window, variant_of(variant));
      },
      py::arg("window") = 2, py::arg("variant") = "literal",
      "The truncated sphere-spectrum example on a finite window.");

  m.def(
      "load_model",
      [](const std::string& text, const std::string& name) {
        std::istringstream in(text);
        return load_model(in, name);
      },
      py::arg("text"), py::arg("name") = "", "Parse a model file's text.");

  m.def(
      "eval",
      [](const FiniteModel& model, const std::string& term,
         const std::string& sig,
         const std::map<std::string, std::string>& assign) {
        const Signature s = sig_of(sig);
        const FiniteModel mm = with_assignment(model, s, assign);
        if (auto d = parse_diagram(term, s); d.ok()) {
          if (!well_formed(s, *d.value)) {
            throw py::value_error("diagram slices do not chain");
          }
          return eval1(mm, s, *d.value);
        }
        return eval2(mm, s, script_of(s, term));
      },
      py::arg("model"), py::arg("term"), py::arg("sig") = "",
      py::arg("assign") = std::map<std::string, std::string>{},
      "Evaluate a diagram to a 1-cell or a script to a 2-cell.");

  m.def(
      "check_axioms",
      [](const FiniteModel& model) {
        const Report rs = check_stringent(model);
        Report ry = check_symmetric(model);
        annotate_sphere_parity(model, ry);
        return py::make_tuple(rs.all_pass() && ry.all_pass(),
                              report_to_string(rs) + report_to_string(ry));
      },
      py::arg("model"),
      "Exhaustive axiom checks; returns (all_pass, report_text).");

  m.def(
      "convert_roundtrip",
      [](const FiniteModel& model) {
        const QuasistrictData q =
            to_quasistrict(model, /*override_prereq=*/true);
        const Report r = check_quasistrict(model, q);
        return py::make_tuple(
            model_tables_equal(from_quasistrict(q), model), r.all_pass(),
            py::dict(py::arg("Phi") = q.Phi.size(),
                     py::arg("beta2") = q.beta2.size(),
                     py::arg("sigma") = q.sigma.size()));
      },
      py::arg("model"),
      "Derive quasistrict data; returns (tables_roundtrip, checks_pass, "
      "table_sizes).");
}
