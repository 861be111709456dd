#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wirecat/dsl.hpp"
#include "wirecat/error.hpp"
#include "wirecat/examples.hpp"
#include "wirecat/model.hpp"
#include "wirecat/render.hpp"

namespace {

using namespace wirecat;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{"cannot open '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Positional terms are literal DSL text, or @file to read from disk.
std::string term_text(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

struct CommonOpts {
  std::string sig_file;
  std::string model_spec;
  int window = 2;
  std::string variant = "literal";
  std::size_t budget = 4;
  std::size_t max_states = 500000;
  bool trace = false;
  std::string format = "ascii";
  std::string out_file;
  std::vector<std::string> assigns;
};

Signature load_sig(const CommonOpts& opts) {
  if (opts.sig_file.empty()) return Signature{};
  auto r = parse_signature(slurp(opts.sig_file));
  if (!r.ok()) throw InputError{opts.sig_file + ": " + r.error->to_string()};
  Signature sig = std::move(*r.value);
  std::vector<Diagnostic> problems = validate(sig);
  if (!problems.empty()) {
    std::string msg = opts.sig_file + ":";
    for (const auto& p : problems) msg += "\n  " + p.message;
    throw InputError{msg};
  }
  return sig;
}

Diagram load_diagram(const Signature& sig, const std::string& arg) {
  auto r = parse_diagram(term_text(arg), sig);
  if (!r.ok()) throw InputError{r.error->to_string()};
  if (!well_formed(sig, *r.value)) {
    throw InputError{"diagram slices do not chain: " + term_text(arg)};
  }
  return std::move(*r.value);
}

Script load_script(const Signature& sig, const std::string& arg) {
  auto r = parse_script(term_text(arg), sig);
  if (!r.ok()) throw InputError{r.error->to_string()};
  if (!well_formed(sig, r.value->src)) {
    throw InputError{"script source does not chain"};
  }
  return std::move(*r.value);
}

FiniteModel load_model_spec(const CommonOpts& opts, const Signature& sig) {
  FiniteModel m;
  if (opts.model_spec == "q") {
    SphereVariant v;
    if (opts.variant == "literal") {
      v = SphereVariant::Literal;
    } else if (opts.variant == "braid-trivial") {
      v = SphereVariant::BraidTrivialPhi;
    } else {
      throw InputError{"unknown variant '" + opts.variant + "'"};
    }
    m = sphere_q(opts.window, v);
  } else if (opts.model_spec == "deloop-p") {
    m = deloop(picard_p());
  } else if (!opts.model_spec.empty()) {
    m = load_model_file(opts.model_spec);
  } else {
    throw InputError{"--model is required"};
  }
  for (const auto& a : opts.assigns) {
    const std::size_t eq = a.find('=');
    if (eq == std::string::npos) {
      throw InputError{"--assign expects name=cell, got '" + a + "'"};
    }
    const std::string name = a.substr(0, eq);
    const std::string cell = a.substr(eq + 1);
    if (sig.has_object(name)) {
      m.assign_obj[name] = cell;
    } else if (sig.find_gen1(name)) {
      m.assign_gen1[name] = cell;
    } else if (sig.find_gen2(name)) {
      m.assign_gen2[name] = cell;
    } else {
      throw InputError{"--assign name '" + name + "' not in the signature"};
    }
  }
  std::vector<std::string> problems = validate_model(m);
  if (!problems.empty()) {
    std::string msg = "model is inconsistent:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InputError{msg};
  }
  return m;
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_file);
  if (!out) throw InputError{"cannot write '" + opts.out_file + "'"};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wire-diagram calculus for stringent symmetric monoidal "
               "2-categories"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> terms;

  auto add_common = [&](CLI::App* cmd, bool with_model) {
    cmd->add_option("--sig", opts.sig_file, "signature file");
    cmd->add_option("--out", opts.out_file, "write output to a file");
    if (with_model) {
      cmd->add_option("--model", opts.model_spec,
                      "q | deloop-p | model file path");
      cmd->add_option("--window", opts.window, "sphere example window radius");
      cmd->add_option("--variant", opts.variant, "literal | braid-trivial");
      cmd->add_option("--assign", opts.assigns,
                      "name=cell assignment overrides");
    }
    return cmd;
  };

  auto* parse_cmd = add_common(app.add_subcommand("parse", "parse and echo"),
                               false);
  parse_cmd->add_option("term", terms, "diagram, script, or @file")
      ->required()
      ->allow_extra_args(false);

  auto* norm_cmd = add_common(
      app.add_subcommand("normalize", "canonical braid form"), false);
  norm_cmd->add_option("term", terms, "diagram or @file")->required()
      ->allow_extra_args(false);

  auto* eq_cmd = add_common(
      app.add_subcommand("check-equal", "on-the-nose equality"), false);
  eq_cmd->add_option("term", terms, "two diagrams")->expected(2)
      ->allow_extra_args(false);
  eq_cmd->add_option("--budget", opts.budget, "extra slice budget");
  eq_cmd->add_option("--max-states", opts.max_states,
                     "state cap before answering unknown");
  eq_cmd->add_flag("--trace", opts.trace, "print the move witness");

  auto* apply_cmd =
      add_common(app.add_subcommand("apply", "replay a script"), false);
  apply_cmd->add_option("term", terms, "script or @file")->required()
      ->allow_extra_args(false);

  auto* eval_cmd = add_common(
      app.add_subcommand("eval", "evaluate in a finite model"), true);
  eval_cmd->add_option("term", terms, "diagram or script")->required()
      ->allow_extra_args(false);

  auto* ax_cmd = add_common(
      app.add_subcommand("check-axioms", "exhaustive axiom reports"), true);

  auto* phi_cmd = add_common(
      app.add_subcommand("derive-phi", "tensorator script"), false);
  phi_cmd->add_option("term", terms, "diagrams f g fp gp")->expected(4)
      ->allow_extra_args(false);

  auto* beta_cmd = add_common(
      app.add_subcommand("derive-beta", "braiding naturator script"), false);
  beta_cmd->add_option("term", terms, "diagrams f g")->expected(2)
      ->allow_extra_args(false);

  auto* conv_cmd = add_common(
      app.add_subcommand("convert", "derive quasistrict data and check it"),
      true);

  auto* render_cmd =
      add_common(app.add_subcommand("render", "draw a diagram or script"),
                 false);
  render_cmd->add_option("term", terms, "diagram, script, or @file")
      ->required()
      ->allow_extra_args(false);
  render_cmd->add_option("--format", opts.format, "ascii | tikz");

  CLI11_PARSE(app, argc, argv);

  try {
    const Signature sig = load_sig(opts);

    if (parse_cmd->parsed()) {
      const std::string text = term_text(terms[0]);
      if (auto d = parse_diagram(text, sig); d.ok()) {
        if (!well_formed(sig, *d.value)) {
          throw InputError{"diagram slices do not chain"};
        }
        emit(opts, print_diagram(*d.value) + "\n");
        return kTrue;
      }
      if (auto s = parse_script(text, sig); s.ok()) {
        if (!well_formed(sig, s.value->src)) {
          throw InputError{"script source does not chain"};
        }
        emit(opts, print_script(*s.value) + "\n");
        return kTrue;
      }
      auto d = parse_diagram(text);
      throw InputError{d.error->to_string()};
    }

    if (norm_cmd->parsed()) {
      const Diagram d = load_diagram(sig, terms[0]);
      emit(opts, print_diagram(canonical_braids(sig, d)) + "\n");
      return kTrue;
    }

    if (eq_cmd->parsed()) {
      const Diagram d1 = load_diagram(sig, terms[0]);
      const Diagram d2 = load_diagram(sig, terms[1]);
      EqualOptions eq_opts;
      eq_opts.insert_budget = opts.budget;
      eq_opts.max_states = opts.max_states;
      const EqualResult r = equal(sig, d1, d2, eq_opts);
      std::ostringstream out;
      switch (r.verdict) {
        case Verdict::True: out << "equal\n"; break;
        case Verdict::False: out << "not equal\n"; break;
        case Verdict::Unknown: out << "unknown (budget exhausted)\n"; break;
      }
      if (opts.trace && r.trace) {
        for (const auto& m : *r.trace) out << move_to_string(m) << "\n";
      }
      emit(opts, out.str());
      return r.verdict == Verdict::True    ? kTrue
             : r.verdict == Verdict::False ? kFalse
                                           : kUnknown;
    }

    if (apply_cmd->parsed()) {
      const Script s = load_script(sig, terms[0]);
      auto r = replay(sig, s);
      if (auto* err = std::get_if<ReplayError>(&r)) {
        std::ostringstream out;
        out << "cell " << err->cell_index << ": " << err->reason << "\n";
        emit(opts, out.str());
        return kFalse;
      }
      emit(opts, print_diagram(std::get<Diagram>(r)) + "\n");
      return kTrue;
    }

    if (eval_cmd->parsed()) {
      const FiniteModel m = load_model_spec(opts, sig);
      const std::string text = term_text(terms[0]);
      std::string value;
      if (auto d = parse_diagram(text, sig); d.ok()) {
        if (!well_formed(sig, *d.value)) {
          throw InputError{"diagram slices do not chain"};
        }
        value = eval1(m, sig, *d.value);
      } else if (auto s = parse_script(text, sig); s.ok()) {
        if (!well_formed(sig, s.value->src)) {
          throw InputError{"script source does not chain"};
        }
        value = eval2(m, sig, *s.value);
      } else {
        throw InputError{d.error->to_string()};
      }
      emit(opts, value + "\n");
      return kTrue;
    }

    if (ax_cmd->parsed()) {
      const FiniteModel m = load_model_spec(opts, sig);
      const Report rs = check_stringent(m);
      Report ry = check_symmetric(m);
      annotate_sphere_parity(m, ry);
      emit(opts, report_to_string(rs) + report_to_string(ry));
      return rs.all_pass() && ry.all_pass() ? kTrue : kFalse;
    }

    if (phi_cmd->parsed()) {
      const Diagram f = load_diagram(sig, terms[0]);
      const Diagram g = load_diagram(sig, terms[1]);
      const Diagram fp = load_diagram(sig, terms[2]);
      const Diagram gp = load_diagram(sig, terms[3]);
      emit(opts, print_script(build_phi(sig, f, g, fp, gp)) + "\n");
      return kTrue;
    }

    if (beta_cmd->parsed()) {
      const Diagram f = load_diagram(sig, terms[0]);
      const Diagram g = load_diagram(sig, terms[1]);
      emit(opts, print_script(build_beta_fg(sig, f, g)) + "\n");
      return kTrue;
    }

    if (conv_cmd->parsed()) {
      const FiniteModel m = load_model_spec(opts, sig);
      const QuasistrictData q = to_quasistrict(m, /*override_prereq=*/true);
      const FiniteModel back = from_quasistrict(q);
      const Report rq = check_quasistrict(m, q);
      std::ostringstream out;
      out << "derived Phi entries: " << q.Phi.size() << "\n";
      out << "derived beta2 entries: " << q.beta2.size() << "\n";
      out << "derived sigma entries: " << q.sigma.size() << "\n";
      const bool roundtrip = model_tables_equal(back, m);
      out << "restriction roundtrip: " << (roundtrip ? "ok" : "MISMATCH")
          << "\n";
      out << report_to_string(rq);
      emit(opts, out.str());
      return roundtrip && rq.all_pass() ? kTrue : kFalse;
    }

    if (render_cmd->parsed()) {
      RenderTarget target;
      if (opts.format == "ascii") {
        target = RenderTarget::Ascii;
      } else if (opts.format == "tikz") {
        target = RenderTarget::Tikz;
      } else {
        throw InputError{"unknown format '" + opts.format + "'"};
      }
      const std::string text = term_text(terms[0]);
      if (auto d = parse_diagram(text, sig); d.ok()) {
        emit(opts, render_diagram(sig, *d.value, target));
        return kTrue;
      }
      if (auto s = parse_script(text, sig); s.ok()) {
        emit(opts, render_script(sig, *s.value, target));
        return kTrue;
      }
      auto d = parse_diagram(text);
      throw InputError{d.error->to_string()};
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
