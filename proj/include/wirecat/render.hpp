#pragma once

#include <string>

#include "wirecat/twocell.hpp"

namespace wirecat {

enum class RenderTarget : std::uint8_t { Ascii, Tikz };

// Deterministic text renderings. Ascii: one column per wire, slices bottom to
// top, braids as crossings. Tikz: tikzpicture code in the wire-diagram style,
// with boxes marking cell application sites for scripts.
std::string render_diagram(const Signature& sig, const Diagram& d,
                           RenderTarget target);
std::string render_script(const Signature& sig, const Script& s,
                          RenderTarget target);

}  // namespace wirecat
