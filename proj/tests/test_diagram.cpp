#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "wirecat/diagram.hpp"
#include "wirecat/dsl.hpp"

namespace {

using namespace wirecat;

Signature two_gen_sig() {
  Signature sig;
  sig.objects = {{"a"}, {"b"}};
  sig.gens1.push_back({"f", {"a"}, {"b"}});
  sig.gens1.push_back({"g", {"b"}, {"a"}});
  return sig;
}

Diagram diag(const Signature& sig, const std::string& text) {
  auto r = parse_diagram(text, sig);
  REQUIRE(r.ok());
  REQUIRE(well_formed(sig, *r.value));
  return std::move(*r.value);
}

// Independent oracle: the permutation of wire positions a braid-only diagram
// induces, simulated letter-by-letter without touching braid_permutation.
std::vector<std::size_t> perm_oracle(const Diagram& d) {
  std::vector<std::size_t> where(d.src.size());
  for (std::size_t i = 0; i < where.size(); ++i) where[i] = i;
  for (const auto& s : d.slices) {
    const std::size_t p = s.left.size();
    for (auto& w : where) {
      if (w == p) {
        w = p + 1;
      } else if (w == p + 1) {
        w = p;
      }
    }
  }
  return where;
}

}  // namespace

TEST_CASE("word concat and equality") {
  const Word u = {"a", "b"};
  const Word v = {"c"};
  CHECK(word_eq(word_concat(u, v), Word{"a", "b", "c"}));
  CHECK(word_eq(word_concat(u, {}), u));
  CHECK(word_eq(word_concat({}, v), v));
  CHECK_FALSE(word_eq(u, v));
}

TEST_CASE("slice endpoints and chaining") {
  const Signature sig = two_gen_sig();
  const Slice s{{"a"}, GenBody{"f"}, {"b"}};
  CHECK(word_eq(slice_dom(sig, s), {"a", "a", "b"}));
  CHECK(word_eq(slice_cod(sig, s), {"a", "b", "b"}));
  const Slice br{{}, BraidBody{"a", "b"}, {"a"}};
  CHECK(word_eq(slice_dom(sig, br), {"a", "b", "a"}));
  CHECK(word_eq(slice_cod(sig, br), {"b", "a", "a"}));
}

TEST_CASE("identity, compose, whisker") {
  const Signature sig = two_gen_sig();
  const Diagram id_ab = identity_diagram({"a", "b"});
  CHECK(id_ab.slices.empty());
  CHECK(word_eq(target(sig, id_ab), {"a", "b"}));

  const Diagram f = diag(sig, "[1|f|1]");
  const Diagram g = diag(sig, "[1|g|1]");
  const Diagram fg = compose(sig, f, g);
  CHECK(fg.slices.size() == 2);
  CHECK(word_eq(target(sig, fg), {"a"}));
  CHECK_THROWS(compose(sig, f, f));

  const Diagram w = whisker({"b"}, f, {"a", "a"});
  CHECK(word_eq(w.src, {"b", "a", "a", "a"}));
  CHECK(word_eq(w.slices[0].left, {"b"}));
  CHECK(word_eq(w.slices[0].right, {"a", "a"}));
}

TEST_CASE("tensor staircase: f lower-left, g upper-right") {
  const Signature sig = two_gen_sig();
  const Diagram f = diag(sig, "[1|f|1]");
  const Diagram g = diag(sig, "[1|g|1]");
  const Diagram t = tensor(sig, f, g);
  CHECK(word_eq(t.src, {"a", "b"}));
  CHECK(t.slices.size() == 2);
  CHECK(diagram_eq(t, diag(sig, "[1|f|b] ; [b|g|1]")));
  // Tensoring with identities degenerates to whiskering.
  CHECK(diagram_eq(tensor(sig, identity_diagram({"b"}), g),
                   whisker({"b"}, g, {})));
  CHECK(diagram_eq(tensor(sig, f, identity_diagram({"a"})),
                   whisker({}, f, {"a"})));
}

TEST_CASE("braid_word frozen decomposition") {
  // Oracle: the letter b[j] walks left across block a, top index first.
  const Diagram d = braid_word({"a", "b"}, {"c"});
  CHECK(word_eq(d.src, {"a", "b", "c"}));
  REQUIRE(d.slices.size() == 2);
  CHECK(slice_eq(d.slices[0], Slice{{"a"}, BraidBody{"b", "c"}, {}}));
  CHECK(slice_eq(d.slices[1], Slice{{}, BraidBody{"a", "c"}, {"b"}}));

  const Diagram e = braid_word({"a"}, {"b", "c"});
  REQUIRE(e.slices.size() == 2);
  CHECK(slice_eq(e.slices[0], Slice{{}, BraidBody{"a", "b"}, {"c"}}));
  CHECK(slice_eq(e.slices[1], Slice{{"b"}, BraidBody{"a", "c"}, {}}));

  CHECK(braid_word({}, {"a"}).slices.empty());
  CHECK(braid_word({"a"}, {}).slices.empty());
}

TEST_CASE("braid permutation matches the oracle") {
  const Signature sig = two_gen_sig();
  const Diagram d = diag(sig, "[1|swap(a,b)|a] ; [b|swap(a,a)|1]");
  auto p = braid_permutation(d);
  REQUIRE(p.has_value());
  CHECK(*p == perm_oracle(d));
  CHECK_FALSE(braid_permutation(diag(sig, "[1|f|1]")).has_value());
}

TEST_CASE("moves round-trip") {
  const Signature sig = two_gen_sig();
  const Diagram cancel_pair = diag(sig, "[1|swap(a,b)|1] ; [1|swap(b,a)|1]");

  SUBCASE("cancel then insert") {
    auto after = apply_move(sig, cancel_pair, {MoveKind::BraidCancel, 0});
    REQUIRE(after.has_value());
    CHECK(diagram_eq(*after, identity_diagram({"a", "b"})));
    auto back = apply_move(sig, *after, {MoveKind::BraidInsert, 0, 0});
    REQUIRE(back.has_value());
    CHECK(diagram_eq(*back, cancel_pair));
  }

  SUBCASE("disjoint swap requires a braid") {
    const Diagram d = diag(sig, "[1|f|a*a] ; [b|swap(a,a)|1]");
    auto s = apply_move(sig, d, {MoveKind::DisjointSwap, 0});
    REQUIRE(s.has_value());
    CHECK(diagram_eq(*s, diag(sig, "[a|swap(a,a)|1] ; [1|f|a*a]")));
    auto back = apply_move(sig, *s, {MoveKind::DisjointSwap, 0});
    REQUIRE(back.has_value());
    CHECK(diagram_eq(*back, d));
    // Two generator bodies never swap by a move: that is the interchangor.
    const Diagram gens = diag(sig, "[1|f|b] ; [b|g|1]");
    CHECK_FALSE(apply_move(sig, gens, {MoveKind::DisjointSwap, 0}).has_value());
  }

  SUBCASE("nat slide up-right and back down") {
    const Diagram d = diag(sig, "[1|f|a] ; [1|swap(b,a)|1]");
    MoveRecord up{MoveKind::NatSlide, 0};
    up.dir = SlideDir::UpRight;
    auto slid = apply_move(sig, d, up);
    REQUIRE(slid.has_value());
    CHECK(diagram_eq(*slid, diag(sig, "[1|swap(a,a)|1] ; [a|f|1]")));
    MoveRecord down{MoveKind::NatSlide, 1};
    down.dir = SlideDir::DownRight;
    auto back = apply_move(sig, *slid, down);
    REQUIRE(back.has_value());
    CHECK(diagram_eq(*back, d));
  }

  SUBCASE("move enumeration is closed under apply_move") {
    const Diagram d = diag(sig, "[1|f|a] ; [1|swap(b,a)|1]");
    for (const auto& mr : moves(sig, d)) {
      auto re = apply_move(sig, d, mr.record);
      REQUIRE(re.has_value());
      CHECK(diagram_eq(*re, mr.diagram));
      CHECK(well_formed(sig, mr.diagram));
    }
  }
}

TEST_CASE("equal: basic verdicts") {
  const Signature sig = two_gen_sig();

  SUBCASE("cancelling braids equal the identity") {
    const Diagram d = diag(sig, "[1|swap(a,b)|1] ; [1|swap(b,a)|1]");
    const EqualResult r = equal(sig, d, identity_diagram({"a", "b"}));
    CHECK(r.verdict == Verdict::True);
    REQUIRE(r.trace.has_value());
    Diagram replayed = d;
    for (const auto& m : *r.trace) {
      auto step = apply_move(sig, replayed, m);
      REQUIRE(step.has_value());
      replayed = *step;
    }
    CHECK(diagram_eq(replayed, identity_diagram({"a", "b"})));
  }

  SUBCASE("endpoint mismatch is immediately false") {
    CHECK(equal(sig, diag(sig, "[1|f|1]"), diag(sig, "[1|g|1]")).verdict ==
          Verdict::False);
    CHECK(equal(sig, identity_diagram({"a"}), identity_diagram({"b"}))
              .verdict == Verdict::False);
  }

  SUBCASE("yang-baxter on three wires") {
    const Diagram lhs =
        diag(sig, "[1|swap(a,b)|b] ; [b|swap(a,b)|1] ; [1|swap(b,b)|a]");
    const Diagram rhs =
        diag(sig, "[a|swap(b,b)|1] ; [1|swap(a,b)|b] ; [b|swap(a,b)|1]");
    CHECK(equal(sig, lhs, rhs).verdict == Verdict::True);
  }

  SUBCASE("stacked unit endomorphisms do not transpose") {
    Signature esig;
    esig.gens1.push_back({"u", {}, {}});
    esig.gens1.push_back({"v", {}, {}});
    Diagram uv;
    uv.slices.push_back({{}, GenBody{"u"}, {}});
    uv.slices.push_back({{}, GenBody{"v"}, {}});
    Diagram vu;
    vu.slices.push_back({{}, GenBody{"v"}, {}});
    vu.slices.push_back({{}, GenBody{"u"}, {}});
    CHECK(equal(esig, uv, vu).verdict == Verdict::False);
    CHECK(equal(esig, uv, uv).verdict == Verdict::True);
  }

  SUBCASE("tiny budget reports unknown, never false") {
    const Diagram lhs =
        diag(sig, "[1|swap(a,b)|b] ; [b|swap(a,b)|1] ; [1|swap(b,b)|a]");
    const Diagram rhs =
        diag(sig, "[a|swap(b,b)|1] ; [1|swap(a,b)|b] ; [b|swap(a,b)|1]");
    EqualOptions tight;
    tight.insert_budget = 4;
    tight.max_states = 2;
    CHECK(equal(sig, lhs, rhs, tight).verdict == Verdict::Unknown);
  }
}

TEST_CASE("canonical_braids") {
  const Signature sig = two_gen_sig();
  const Diagram lhs =
      diag(sig, "[1|swap(a,b)|b] ; [b|swap(a,b)|1] ; [1|swap(b,b)|a]");
  const Diagram rhs =
      diag(sig, "[a|swap(b,b)|1] ; [1|swap(a,b)|b] ; [b|swap(a,b)|1]");
  const Diagram cl = canonical_braids(sig, lhs);
  const Diagram cr = canonical_braids(sig, rhs);
  CHECK(diagram_eq(cl, cr));
  CHECK(diagram_eq(canonical_braids(sig, cl), cl));
  CHECK(equal(sig, lhs, cl).verdict == Verdict::True);

  // Braids sink below generators where a slide permits.
  const Diagram mixed = diag(sig, "[1|f|a] ; [1|swap(b,a)|1]");
  const Diagram cm = canonical_braids(sig, mixed);
  CHECK(std::holds_alternative<BraidBody>(cm.slices[0].body));
  CHECK(equal(sig, mixed, cm).verdict == Verdict::True);
}

TEST_CASE("diagram_key separates distinct diagrams") {
  const Signature sig = two_gen_sig();
  std::set<std::string> keys;
  keys.insert(diagram_key(diag(sig, "[1|f|1]")));
  keys.insert(diagram_key(diag(sig, "[1|f|b]")));
  keys.insert(diagram_key(diag(sig, "[b|f|1]")));
  keys.insert(diagram_key(identity_diagram({"a"})));
  keys.insert(diagram_key(identity_diagram({})));
  CHECK(keys.size() == 5);
}
