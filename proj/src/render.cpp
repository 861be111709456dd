#include "wirecat/render.hpp"

#include <algorithm>
#include <sstream>

#include "wirecat/dsl.hpp"
#include "wirecat/error.hpp"

namespace wirecat {

namespace {

// Column of each letter when tokens are joined by single spaces.
std::vector<std::size_t> columns(const Word& w) {
  std::vector<std::size_t> cols;
  std::size_t at = 0;
  for (const auto& letter : w) {
    cols.push_back(at);
    at += letter.size() + 1;
  }
  return cols;
}

// Writes at the wanted column, shifted right if the row is already longer
// (gen labels can be wider than the wires they sit on).
void put(std::string& row, std::size_t col, const std::string& text) {
  if (!row.empty() && col < row.size() + 1) col = row.size() + 1;
  if (row.size() < col + text.size()) row.resize(col + text.size(), ' ');
  for (std::size_t i = 0; i < text.size(); ++i) row[col + i] = text[i];
}

std::string word_row(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w[i];
  }
  return out;
}

std::string slice_row(const Signature& sig, const Slice& s) {
  const Word below = slice_dom(sig, s);
  const std::vector<std::size_t> cols = columns(below);
  std::string row;
  for (std::size_t i = 0; i < s.left.size(); ++i) put(row, cols[i], "|");
  const Word dom = body_dom(sig, s.body);
  if (const auto* g = std::get_if<GenBody>(&s.body)) {
    std::size_t col;
    if (!dom.empty()) {
      col = cols[s.left.size()];
    } else {
      // A body with empty domain sits in the gap after the left whisker.
      col = s.left.empty() ? 0 : cols[s.left.size() - 1] +
                                     below[s.left.size() - 1].size() + 1;
    }
    put(row, col, "[" + g->gen1 + "]");
  } else {
    put(row, cols[s.left.size()], ">");
    put(row, cols[s.left.size() + 1], "<");
  }
  for (std::size_t i = 0; i < s.right.size(); ++i) {
    put(row, cols[s.left.size() + dom.size() + i], "|");
  }
  return row;
}

std::string ascii_diagram(const Signature& sig, const Diagram& d) {
  std::ostringstream out;
  out << word_row(target(sig, d)) << "\n";
  for (std::size_t k = d.slices.size(); k-- > 0;) {
    out << slice_row(sig, d.slices[k]) << "\n";
    out << word_row(word_at(sig, d, k)) << "\n";
  }
  return out.str();
}

std::string tikz_diagram(const Signature& sig, const Diagram& d) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}[yscale=0.8]\n";
  Word cur = d.src;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    out << "  \\node[below] at (" << i << ",0) {$" << cur[i] << "$};\n";
  }
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    const Slice& s = d.slices[k];
    const Word dom = body_dom(sig, s.body);
    const Word cod = body_cod(sig, s.body);
    const std::size_t l = s.left.size();
    for (std::size_t i = 0; i < l; ++i) {
      out << "  \\draw (" << i << "," << k << ") to (" << i << "," << k + 1
          << ");\n";
    }
    for (std::size_t j = 0; j < s.right.size(); ++j) {
      out << "  \\draw (" << l + dom.size() + j << "," << k << ") to ("
          << l + cod.size() + j << "," << k + 1 << ");\n";
    }
    if (const auto* g = std::get_if<GenBody>(&s.body)) {
      const double cx =
          static_cast<double>(l) +
          (static_cast<double>(std::max(dom.size(), cod.size())) - 1.0) / 2.0;
      out << "  \\node[draw, fill=white] (b" << k << ") at (" << cx << ","
          << k << ".5) {$" << g->gen1 << "$};\n";
      for (std::size_t i = 0; i < dom.size(); ++i) {
        out << "  \\draw (" << l + i << "," << k << ") to (b" << k << ");\n";
      }
      for (std::size_t i = 0; i < cod.size(); ++i) {
        out << "  \\draw (b" << k << ") to (" << l + i << "," << k + 1
            << ");\n";
      }
    } else {
      out << "  \\draw (" << l << "," << k << ") to (" << l + 1 << ","
          << k + 1 << ");\n";
      out << "  \\draw (" << l + 1 << "," << k << ") to (" << l << ","
          << k + 1 << ");\n";
    }
    cur = slice_cod(sig, s);
  }
  const std::size_t top = d.slices.size();
  for (std::size_t i = 0; i < cur.size(); ++i) {
    out << "  \\node[above] at (" << i << "," << top << ") {$" << cur[i]
        << "$};\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string cell_desc(const Cell& c) {
  const Script one{{}, {c}};
  const std::string printed = print_script(one);
  // print_script emits "src id(1) ; cells: <cell>".
  const std::string marker = "cells: ";
  return printed.substr(printed.find(marker) + marker.size());
}

}  // namespace

std::string render_diagram(const Signature& sig, const Diagram& d,
                           RenderTarget target) {
  if (!well_formed(sig, d)) {
    throw Error("MalformedDiagram", "render: slices do not chain");
  }
  return target == RenderTarget::Ascii ? ascii_diagram(sig, d)
                                       : tikz_diagram(sig, d);
}

std::string render_script(const Signature& sig, const Script& s,
                          RenderTarget target) {
  std::ostringstream out;
  Diagram cur = s.src;
  out << render_diagram(sig, cur, target);
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    auto r = apply_cell(sig, cur, s.cells[i]);
    if (auto* msg = std::get_if<std::string>(&r)) {
      throw Error("ReplayFailure", "cell " + std::to_string(i) + ": " + *msg);
    }
    cur = std::move(std::get<Diagram>(r));
    if (target == RenderTarget::Ascii) {
      out << "==[" << i << ": " << cell_desc(s.cells[i]) << "]==>\n";
    } else {
      out << "% step " << i << ": " << cell_desc(s.cells[i]) << "\n";
      out << "\\quad\\Rightarrow\\quad\n";
    }
    out << render_diagram(sig, cur, target);
  }
  return out.str();
}

}  // namespace wirecat
