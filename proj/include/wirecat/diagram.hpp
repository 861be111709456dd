#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wirecat/signature.hpp"

namespace wirecat {

// Slice bodies: a declared 1-generator, or an elementary braid between two
// adjacent single object generators.
struct GenBody {
  std::string gen1;
};

struct BraidBody {
  std::string x;
  std::string y;
};

using SliceBody = std::variant<GenBody, BraidBody>;

struct Slice {
  Word left;
  SliceBody body;
  Word right;
};

bool slice_eq(const Slice& a, const Slice& b);

// Domain/codomain of the bare body (no whiskers). GenBody needs the signature.
Word body_dom(const Signature& sig, const SliceBody& body);
Word body_cod(const Signature& sig, const SliceBody& body);

Word slice_dom(const Signature& sig, const Slice& s);
Word slice_cod(const Signature& sig, const Slice& s);

// A 1-morphism term: a bottom-to-top sequence of whiskered slices.
// The identity on W is the diagram with src = W and no slices.
struct Diagram {
  Word src;
  std::vector<Slice> slices;
};

bool diagram_eq(const Diagram& a, const Diagram& b);

Diagram identity_diagram(Word w);

// Chaining check: each slice's domain equals the previous codomain.
bool well_formed(const Signature& sig, const Diagram& d);

// Recomputes src from the first slice; needed after parsing, since the
// source word depends on generator arities.
void infer_src(const Signature& sig, Diagram& d);
Word target(const Signature& sig, const Diagram& d);

// Boundary word just below slice k (k = slices.size() gives the target).
Word word_at(const Signature& sig, const Diagram& d, std::size_t k);

// Stacking: d1 below, d2 above. Requires target(d1) = src(d2).
Diagram compose(const Signature& sig, const Diagram& d1, const Diagram& d2);

// Tensor with identities on both sides (strict 2-functors L and R).
Diagram whisker(const Word& left, const Diagram& d, const Word& right);

// f tensor g as the canonical nudged staircase: f lower-left, g upper-right.
Diagram tensor(const Signature& sig, const Diagram& d1, const Diagram& d2);

// Canonical elementary-braid decomposition of the block braiding A.B -> B.A.
Diagram braid_word(const Word& a, const Word& b);

// ---------------------------------------------------------------------------
// On-the-nose moves.

enum class MoveKind : std::uint8_t {
  BraidCancel,   // delete an adjacent inverse braid pair
  BraidInsert,   // insert an inverse braid pair at a boundary level
  NatSlide,      // slide a slice across one letter's braid staircase
  DisjointSwap,  // transpose disjoint slices, at least one a braid
};

// NatSlide variants: the slid slice moves up or down, crossing the single
// letter on its right or on its left.
enum class SlideDir : std::uint8_t { UpRight, UpLeft, DownRight, DownLeft };

struct MoveRecord {
  MoveKind kind;
  std::size_t pos = 0;      // slice index the move acts at
  std::size_t arg = 0;      // BraidInsert: word position at level `pos`
  SlideDir dir = SlideDir::UpRight;  // NatSlide only
};

bool move_eq(const MoveRecord& a, const MoveRecord& b);
std::string move_to_string(const MoveRecord& m);

// Replaying the records from the first diagram yields the second.
using MoveTrace = std::vector<MoveRecord>;

// Applies one move; nullopt if the move's pattern does not match.
std::optional<Diagram> apply_move(const Signature& sig, const Diagram& d,
                                  const MoveRecord& m);

struct MoveResult {
  Diagram diagram;
  MoveRecord record;
};

// All diagrams reachable by one on-the-nose move.
std::vector<MoveResult> moves(const Signature& sig, const Diagram& d);

// ---------------------------------------------------------------------------
// Equality by bounded breadth-first saturation.

enum class Verdict : std::uint8_t { True, False, Unknown };

struct EqualOptions {
  // Slice-count cap: max(|d1|,|d2|) + insert_budget.
  std::size_t insert_budget = 4;
  // Distinct diagrams explored before giving up with Unknown.
  std::size_t max_states = 500000;
};

struct EqualResult {
  Verdict verdict;
  std::optional<MoveTrace> trace;  // witness when verdict is True
};

EqualResult equal(const Signature& sig, const Diagram& d1, const Diagram& d2,
                  const EqualOptions& opts = {});

// Heuristic normalization: sinks braids below generators where a slide
// applies and rewrites maximal braid-only runs to the lexicographically
// minimal reduced word of their underlying permutation. Idempotent, and the
// result is always equal() to the input.
Diagram canonical_braids(const Signature& sig, const Diagram& d);

// Underlying position permutation of a braid-only diagram: perm[i] is the
// target position of the wire entering at position i. Nullopt if any slice
// is a generator.
std::optional<std::vector<std::size_t>> braid_permutation(const Diagram& d);

// Stable string form, usable as a hash key.
std::string diagram_key(const Diagram& d);

}  // namespace wirecat
