#include "wirecat/dsl.hpp"

#include <cctype>
#include <sstream>

namespace wirecat {

std::string SyntaxError::to_string() const {
  std::ostringstream out;
  out << "syntax error at " << line << ":" << col << ": expected " << expected;
  return out.str();
}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;
  std::optional<SyntaxError> error;

  explicit Scanner(const std::string& t) : text(t) {}

  bool failed() const { return error.has_value(); }

  void fail(const std::string& expected) {
    if (!error) error = SyntaxError{line, col, expected};
  }

  void advance() {
    if (pos >= text.size()) return;
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      advance();
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  // Consumes `tok` if present (after whitespace); keyword tokens must not be
  // followed by an identifier character.
  bool eat(const std::string& tok, bool keyword = false) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) != 0) return false;
    if (keyword) {
      const std::size_t after = pos + tok.size();
      if (after < text.size() &&
          (std::isalnum(static_cast<unsigned char>(text[after])) ||
           text[after] == '_' || text[after] == '\'')) {
        return false;
      }
    }
    for (std::size_t i = 0; i < tok.size(); ++i) advance();
    return true;
  }

  void expect(const std::string& tok, bool keyword = false) {
    if (!eat(tok, keyword)) fail("'" + tok + "'");
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) ||
          text[pos] == '_')) {
      fail("identifier");
      return "";
    }
    std::string out;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '\'')) {
      out.push_back(text[pos]);
      advance();
    }
    return out;
  }

  std::size_t integer() {
    skip_ws();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("integer");
      return 0;
    }
    std::size_t out = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + static_cast<std::size_t>(text[pos] - '0');
      advance();
    }
    return out;
  }

  Word word() {
    if (eat("1", true)) return {};
    Word out;
    out.push_back(ident());
    while (!failed() && eat("*")) out.push_back(ident());
    return out;
  }

  Slice slice() {
    Slice s;
    expect("[");
    s.left = word();
    expect("|");
    if (eat("swap", true)) {
      expect("(");
      BraidBody b;
      b.x = ident();
      expect(",");
      b.y = ident();
      expect(")");
      s.body = b;
    } else {
      s.body = GenBody{ident()};
    }
    expect("|");
    s.right = word();
    expect("]");
    return s;
  }

  Diagram diagram() {
    Diagram d;
    if (eat("id", true)) {
      expect("(");
      d.src = word();
      expect(")");
      return d;
    }
    d.slices.push_back(slice());
    while (!failed() && eat(";")) {
      // "; cells:" belongs to the surrounding script.
      skip_ws();
      const std::size_t before = pos;
      const int bl = line, bc = col;
      if (eat("cells", true)) {
        // The ';' belonged to the surrounding script; rewind to "cells".
        pos = before;
        line = bl;
        col = bc;
        cells_pending = true;
        break;
      }
      d.slices.push_back(slice());
    }
    return d;
  }

  bool cells_pending = false;

  Cell cell() {
    if (eat("interchange", true)) {
      expect("@");
      InterchangeCell c{integer(), false};
      c.back = eat("back", true);
      return c;
    }
    if (eat("move", true)) {
      expect(":");
      MoveRecord m;
      if (eat("cancel", true)) {
        m.kind = MoveKind::BraidCancel;
      } else if (eat("insert", true)) {
        m.kind = MoveKind::BraidInsert;
      } else if (eat("swap", true)) {
        m.kind = MoveKind::DisjointSwap;
      } else if (eat("slide_ur", true)) {
        m.kind = MoveKind::NatSlide;
        m.dir = SlideDir::UpRight;
      } else if (eat("slide_ul", true)) {
        m.kind = MoveKind::NatSlide;
        m.dir = SlideDir::UpLeft;
      } else if (eat("slide_dr", true)) {
        m.kind = MoveKind::NatSlide;
        m.dir = SlideDir::DownRight;
      } else if (eat("slide_dl", true)) {
        m.kind = MoveKind::NatSlide;
        m.dir = SlideDir::DownLeft;
      } else {
        fail("move kind");
        return StructCell{};
      }
      expect("@");
      m.pos = integer();
      if (m.kind == MoveKind::BraidInsert) {
        expect(":");
        m.arg = integer();
      }
      return StructCell{m};
    }
    if (eat("gen2", true)) {
      expect(":");
      GenCell c;
      c.gen2 = ident();
      expect("@");
      c.pos = integer();
      for (;;) {
        if (eat("l=")) {
          c.left = word();
        } else if (eat("r=")) {
          c.right = word();
        } else if (eat("back", true)) {
          c.back = true;
        } else {
          break;
        }
      }
      return c;
    }
    fail("cell");
    return StructCell{};
  }

  Script script() {
    Script s;
    expect("src", true);
    s.src = diagram();
    if (!cells_pending) expect(";");
    expect("cells", true);
    expect(":");
    if (at_end()) return s;
    s.cells.push_back(cell());
    while (!failed() && eat("|")) s.cells.push_back(cell());
    return s;
  }
};

template <typename T>
ParseResult<T> finish(Scanner& sc, T value, bool require_end = true) {
  if (!sc.failed() && require_end && !sc.at_end()) sc.fail("end of input");
  if (sc.failed()) return {std::nullopt, sc.error};
  return {std::move(value), std::nullopt};
}

}  // namespace

ParseResult<Word> parse_word(const std::string& text) {
  Scanner sc(text);
  Word w = sc.word();
  return finish(sc, std::move(w));
}

ParseResult<Diagram> parse_diagram(const std::string& text) {
  Scanner sc(text);
  Diagram d = sc.diagram();
  if (sc.cells_pending) sc.fail("slice");
  return finish(sc, std::move(d));
}

ParseResult<Script> parse_script(const std::string& text) {
  Scanner sc(text);
  Script s = sc.script();
  return finish(sc, std::move(s));
}

ParseResult<Diagram> parse_diagram(const std::string& text,
                                   const Signature& sig) {
  ParseResult<Diagram> r = parse_diagram(text);
  if (r.ok()) infer_src(sig, *r.value);
  return r;
}

ParseResult<Script> parse_script(const std::string& text,
                                 const Signature& sig) {
  ParseResult<Script> r = parse_script(text);
  if (r.ok()) infer_src(sig, r.value->src);
  return r;
}

ParseResult<Signature> parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    std::string ln = hash == std::string::npos ? raw : raw.substr(0, hash);
    Scanner sc(ln);
    sc.line = line_no;
    if (sc.at_end()) continue;
    if (sc.eat("obj", true)) {
      while (!sc.at_end() && !sc.failed()) sig.objects.push_back({sc.ident()});
    } else if (sc.eat("gen2", true)) {
      Gen2 g;
      g.id = sc.ident();
      sc.expect(":");
      // Split at the top-level "=>"; slices never contain '='.
      const std::size_t arrow = ln.find("=>");
      if (arrow == std::string::npos) {
        sc.fail("'=>'");
      } else {
        std::string lhs = ln.substr(sc.pos, arrow - sc.pos);
        std::string rhs = ln.substr(arrow + 2);
        Scanner ls(lhs);
        ls.line = line_no;
        Diagram src = ls.diagram();
        if (!ls.at_end()) ls.fail("end of diagram");
        Scanner rs(rhs);
        rs.line = line_no;
        Diagram tgt = rs.diagram();
        g.invertible = rs.eat("invertible", true);
        if (!rs.at_end()) rs.fail("end of line");
        if (ls.failed()) sc.error = ls.error;
        if (!sc.failed() && rs.failed()) sc.error = rs.error;
        if (!sc.failed()) {
          // Uses the declarations seen so far (declare before use).
          infer_src(sig, src);
          infer_src(sig, tgt);
          g.src = std::make_shared<Diagram>(std::move(src));
          g.tgt = std::make_shared<Diagram>(std::move(tgt));
          sig.gens2.push_back(std::move(g));
        }
      }
      if (sc.failed()) return {std::nullopt, sc.error};
      continue;
    } else if (sc.eat("gen", true)) {
      Gen1 g;
      g.id = sc.ident();
      sc.expect(":");
      g.dom = sc.word();
      sc.expect("->");
      g.cod = sc.word();
      if (!sc.failed() && !sc.at_end()) sc.fail("end of line");
      sig.gens1.push_back(std::move(g));
    } else {
      sc.fail("'obj', 'gen' or 'gen2'");
    }
    if (sc.failed()) return {std::nullopt, sc.error};
  }
  return {std::move(sig), std::nullopt};
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += w[i];
  }
  return out;
}

namespace {

std::string print_slice(const Slice& s) {
  std::string body;
  if (const auto* g = std::get_if<GenBody>(&s.body)) {
    body = g->gen1;
  } else {
    const auto& b = std::get<BraidBody>(s.body);
    body = "swap(" + b.x + "," + b.y + ")";
  }
  return "[" + print_word(s.left) + "|" + body + "|" + print_word(s.right) +
         "]";
}

std::string print_cell(const Cell& c) {
  std::ostringstream out;
  if (const auto* ic = std::get_if<InterchangeCell>(&c)) {
    out << "interchange@" << ic->pos;
    if (ic->back) out << " back";
  } else if (const auto* st = std::get_if<StructCell>(&c)) {
    out << "move:" << move_to_string(st->move);
  } else {
    const auto& g = std::get<GenCell>(c);
    out << "gen2:" << g.gen2 << "@" << g.pos;
    if (!g.left.empty()) out << " l=" << print_word(g.left);
    if (!g.right.empty()) out << " r=" << print_word(g.right);
    if (g.back) out << " back";
  }
  return out.str();
}

}  // namespace

std::string print_diagram(const Diagram& d) {
  if (d.slices.empty()) return "id(" + print_word(d.src) + ")";
  std::string out;
  for (std::size_t i = 0; i < d.slices.size(); ++i) {
    if (i) out += " ; ";
    out += print_slice(d.slices[i]);
  }
  return out;
}

std::string print_script(const Script& s) {
  std::string out = "src " + print_diagram(s.src) + " ; cells:";
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    out += i ? " | " : " ";
    out += print_cell(s.cells[i]);
  }
  return out;
}

std::string print_signature(const Signature& sig) {
  std::ostringstream out;
  if (!sig.objects.empty()) {
    out << "obj";
    for (const auto& o : sig.objects) out << " " << o.id;
    out << "\n";
  }
  for (const auto& g : sig.gens1) {
    out << "gen " << g.id << " : " << print_word(g.dom) << " -> "
        << print_word(g.cod) << "\n";
  }
  for (const auto& g : sig.gens2) {
    out << "gen2 " << g.id << " : " << print_diagram(*g.src) << " => "
        << print_diagram(*g.tgt);
    if (g.invertible) out << " invertible";
    out << "\n";
  }
  return out.str();
}

}  // namespace wirecat
