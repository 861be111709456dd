#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "wirecat/dsl.hpp"
#include "wirecat/error.hpp"
#include "wirecat/render.hpp"

namespace {

using namespace wirecat;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(WIRECAT_TEST_DIR) + "/golden/" + name);
}

Signature fixture_sig() {
  auto r = parse_signature(
      slurp(std::string(WIRECAT_TEST_DIR) + "/fixtures/zig.sig"));
  REQUIRE(r.ok());
  REQUIRE(validate(*r.value).empty());
  return std::move(*r.value);
}

}  // namespace

TEST_CASE("diagram renders match the goldens byte for byte") {
  const Signature sig = fixture_sig();
  auto d = parse_diagram("[b|f|1] ; [1|swap(b,b)|1]", sig);
  REQUIRE(d.ok());
  CHECK(render_diagram(sig, *d.value, RenderTarget::Ascii) ==
        golden("gen_braid.ascii.txt"));
  CHECK(render_diagram(sig, *d.value, RenderTarget::Tikz) ==
        golden("gen_braid.tikz.tex"));
}

TEST_CASE("script renders match the goldens byte for byte") {
  const Signature sig = fixture_sig();
  auto s = parse_script("src [b|f|1] ; [1|g|b] ; cells: interchange@0", sig);
  REQUIRE(s.ok());
  CHECK(render_script(sig, *s.value, RenderTarget::Ascii) ==
        golden("interchange.script.ascii.txt"));
  CHECK(render_script(sig, *s.value, RenderTarget::Tikz) ==
        golden("interchange.script.tikz.tex"));
}

TEST_CASE("ascii layout invariants") {
  const Signature sig = fixture_sig();

  SUBCASE("empty words render as a dash") {
    Signature endo;
    endo.gens1.push_back({"u", {}, {}});
    Diagram u;
    u.slices.push_back({{}, GenBody{"u"}, {}});
    const std::string text = render_diagram(endo, u, RenderTarget::Ascii);
    CHECK(text == "-\n[u]\n-\n");
  }

  SUBCASE("wide gen labels never swallow whiskers") {
    auto d = parse_diagram("[1|g|b]", sig);
    REQUIRE(d.ok());
    const std::string text = render_diagram(sig, *d.value, RenderTarget::Ascii);
    CHECK(text.find("[g]") != std::string::npos);
    // top word, slice, bottom word
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  }

  SUBCASE("identity diagram is a single word row pair") {
    const std::string text =
        render_diagram(sig, identity_diagram({"a", "b"}), RenderTarget::Ascii);
    CHECK(text == "a b\n");
  }
}

TEST_CASE("render rejects malformed input") {
  const Signature sig = fixture_sig();
  Diagram bad;
  bad.src = {"a"};
  bad.slices.push_back({{}, GenBody{"g"}, {}});  // g needs b below
  CHECK_THROWS_AS((void)render_diagram(sig, bad, RenderTarget::Ascii), Error);

  auto s = parse_script("src [1|f|1] ; cells: interchange@0", sig);
  REQUIRE(s.ok());
  CHECK_THROWS_AS((void)render_script(sig, *s.value, RenderTarget::Ascii),
                  Error);
}
