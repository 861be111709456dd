#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wirecat/diagram.hpp"

namespace wirecat {

// One on-the-nose move, recorded so that replay is deterministic on
// representatives. Evaluates to an identity 2-cell in every model.
struct StructCell {
  MoveRecord move;
};

// The interchangor applied between slice `pos` (lower) and `pos + 1` (upper).
// Forward: lower body strictly right of upper body, phi_{upper, lower}.
// Back: lower body strictly left of upper body, phi inverse.
// Neither body may be a braid; those transpositions are StructCells.
struct InterchangeCell {
  std::size_t pos;
  bool back = false;
};

// A whiskered generator 2-cell replacing a literal occurrence of its source
// (resp. target, when back) slices at `pos`.
struct GenCell {
  std::string gen2;
  std::size_t pos;
  Word left;
  Word right;
  bool back = false;
};

using Cell = std::variant<StructCell, InterchangeCell, GenCell>;

// A 2-morphism term: a source diagram plus a replayable sequence of cells.
struct Script {
  Diagram src;
  std::vector<Cell> cells;
};

struct ReplayError {
  std::size_t cell_index;
  std::string reason;
};

// Applies one cell to a diagram; error if its precondition fails.
std::variant<Diagram, std::string> apply_cell(const Signature& sig,
                                              const Diagram& d, const Cell& c);

// Target diagram of the script. Total and deterministic.
std::variant<Diagram, ReplayError> replay(const Signature& sig,
                                          const Script& s);

// Throwing convenience used where scripts are known-good.
Diagram replay_or_throw(const Signature& sig, const Script& s);

// Vertical composition: s1 then s2; requires replay(s1) = src(s2) literally.
Script vcompose(const Signature& sig, const Script& s1, const Script& s2);

// Horizontal composition per the stacked reading: alpha on the lower diagram
// first, then beta on the upper. Requires the boundary words to chain.
Script hcompose(const Signature& sig, const Script& alpha, const Script& beta);

// The derived tensorator: a script from (f tensor g) then (fp tensor gp) to
// (f;fp) tensor (g;gp), whose only non-identity content is the whiskered
// interchangor moving the g-layer up past the fp-layer.
Script build_phi(const Signature& sig, const Diagram& f, const Diagram& g,
                 const Diagram& fp, const Diagram& gp);

// The braiding naturator: a script from (g tensor f) after braid_word(A,B)
// to braid_word(A',B') after (f tensor g). One interchange (back), then
// naturality slides carrying f and g below the braid run.
Script build_beta_fg(const Signature& sig, const Diagram& f, const Diagram& g);

// The recovered braiding on unit endomorphisms: tensor(A,B) => tensor(B,A)
// via the interchangor phi_{B,A}. Both inputs must be endomorphisms of the
// empty word.
Script deloop_sigma(const Signature& sig, const Diagram& a, const Diagram& b);

}  // namespace wirecat
