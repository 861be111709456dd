#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wirecat/twocell.hpp"

namespace wirecat {

struct Cell1Info {
  std::string id;
  std::string dom;
  std::string cod;
};

struct Cell2Info {
  std::string id;
  std::string src;  // 1-cell
  std::string tgt;  // 1-cell
};

// A finite stringent symmetric monoidal 2-category given by explicit tables.
// All equality is by identifier. Pair keys are (first applied, second
// applied) for compositions.
struct FiniteModel {
  std::string name;

  std::vector<std::string> objects;
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> tensor;

  std::vector<Cell1Info> cells1;
  std::map<std::string, std::string> identity1;  // object -> 1-cell
  std::map<std::pair<std::string, std::string>, std::string> compose1;

  std::vector<Cell2Info> cells2;
  std::map<std::string, std::string> identity2;  // 1-cell -> 2-cell
  std::map<std::pair<std::string, std::string>, std::string> compose2;
  std::map<std::string, std::string> inverse2;

  // Strict 2-functors L_A and R_A on 1- and 2-cells, keyed by object.
  std::map<std::pair<std::string, std::string>, std::string> ltensor1;
  std::map<std::pair<std::string, std::string>, std::string> rtensor1;
  std::map<std::pair<std::string, std::string>, std::string> ltensor2;
  std::map<std::pair<std::string, std::string>, std::string> rtensor2;

  // Whiskering of 2-cells by 1-cells: post_whisker[(h, a)] = id_h * a with h
  // composed after a's endpoints; pre_whisker[(a, h)] = a * id_h.
  std::map<std::pair<std::string, std::string>, std::string> post_whisker;
  std::map<std::pair<std::string, std::string>, std::string> pre_whisker;

  std::map<std::pair<std::string, std::string>, std::string> phi;
  std::map<std::pair<std::string, std::string>, std::string> beta;

  // Evaluation assignment for a user signature.
  std::map<std::string, std::string> assign_obj;
  std::map<std::string, std::string> assign_gen1;
  std::map<std::string, std::string> assign_gen2;

  // Checker quantifier domain; empty means all objects. Used when the carrier
  // is a window into an infinite object set.
  std::vector<std::string> enum_window;

  const Cell1Info* find_cell1(const std::string& id) const;
  const Cell2Info* find_cell2(const std::string& id) const;
  const std::vector<std::string>& checker_objects() const;

  // Table lookups; throw Error("MissingTableEntry", ...) when absent.
  std::string tensor_obj(const std::string& a, const std::string& b) const;
  std::string word_object(const std::map<std::string, std::string>& objs,
                          const Word& w) const;
  std::string comp1(const std::string& f, const std::string& g) const;
  std::string comp2(const std::string& a, const std::string& b) const;
  std::string id1(const std::string& obj) const;
  std::string id2(const std::string& f) const;
  std::string inv2(const std::string& a) const;
  std::string lt1(const std::string& obj, const std::string& f) const;
  std::string rt1(const std::string& obj, const std::string& f) const;
  std::string lt2(const std::string& obj, const std::string& a) const;
  std::string rt2(const std::string& obj, const std::string& a) const;
  std::string whisker_post(const std::string& h, const std::string& a) const;
  std::string whisker_pre(const std::string& a, const std::string& h) const;
  std::string phi_at(const std::string& f, const std::string& g) const;
  std::string beta_at(const std::string& a, const std::string& b) const;

  // Whether f occurs in the beta table (a braiding component).
  bool is_braiding_component(const std::string& f) const;
};

// Structural validation: totality/closure of tables, phi invertibility,
// strict 2-functor laws for the tensor actions.
std::vector<std::string> validate_model(const FiniteModel& m);

// ---------------------------------------------------------------------------
// Evaluation.

// Evaluates a diagram to a 1-cell, "tensor first, then compose".
std::string eval1(const FiniteModel& m, const Signature& sig,
                  const Diagram& d);

// Evaluates a script to a 2-cell; struct moves evaluate to identities.
std::string eval2(const FiniteModel& m, const Signature& sig, const Script& s);

// ---------------------------------------------------------------------------
// Axiom reports.

enum class CheckStatus : std::uint8_t { Pass, Fail, Skip };

struct AxiomOutcome {
  std::string axiom;       // stable identifier, e.g. "stringent.vii"
  std::size_t instances = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;     // first counterexample: instantiation + both sides
};

struct Report {
  std::string model;
  std::string window_note;
  std::vector<AxiomOutcome> outcomes;

  bool all_pass() const;
  const AxiomOutcome* find(const std::string& axiom) const;
};

std::string report_to_string(const Report& r);

// Exhaustive stringent axiom checks (v)-(ix) over the checker window.
Report check_stringent(const FiniteModel& m);

// Exhaustive symmetric axiom checks (i)-(iv).
Report check_symmetric(const FiniteModel& m);

// ---------------------------------------------------------------------------
// Stringent <-> quasistrict conversion.

struct QuasistrictData {
  // Carrier tables with the interchangor cleared; the derived tables below
  // carry the equivalent data.
  FiniteModel base;
  // Phi[(fp, gp, f, g)]: tensorator on composable quadruples, f before fp
  // on the left and g before gp on the right.
  std::map<std::array<std::string, 4>, std::string> Phi;
  // beta2[(f, g)]: braiding naturator.
  std::map<std::pair<std::string, std::string>, std::string> beta2;
  // sigma[(A, B)]: symmetrator entries, identities by construction.
  std::map<std::pair<std::string, std::string>, std::string> sigma;
};

// Derives Phi via eval2(build_phi(...)) and beta2 via eval2(build_beta_fg(...))
// over all composable tuples in the checker window. Requires the stringent and
// symmetric checks to pass unless overridden.
QuasistrictData to_quasistrict(const FiniteModel& m, bool override_prereq = false);

// Restriction: phi_{f,g} := Phi[(f,id),(id,g)]; beta copied; the rest forgotten.
FiniteModel from_quasistrict(const QuasistrictData& q);

// QS.1-3 and CSS.2 conditions on derived tables.
Report check_quasistrict(const FiniteModel& m, const QuasistrictData& q);

// ---------------------------------------------------------------------------
// Model file format (documented in docs/model-format.md).

FiniteModel load_model(std::istream& in, const std::string& name = "");
FiniteModel load_model_file(const std::string& path);
std::string save_model(const FiniteModel& m);

// Tables equal (assignment sections included). Used for round-trip checks.
bool model_tables_equal(const FiniteModel& a, const FiniteModel& b);

// ---------------------------------------------------------------------------
// Synthetic evaluation context: one object letter per carrier object and one
// 1-generator per carrier 1-cell, with the evident assignment. Used by the
// converters to run the script builders inside a model.

struct ModelContext {
  Signature sig;
  FiniteModel model;  // copy of the input with the context's assignment
  std::map<std::string, std::string> obj_letter;   // object -> letter
  std::map<std::string, std::string> cell1_gen;    // 1-cell -> gen1 id
};

ModelContext make_context(const FiniteModel& m);

// Single-slice diagram for a carrier 1-cell.
Diagram cell_diagram(const ModelContext& ctx, const std::string& cell1);

}  // namespace wirecat
