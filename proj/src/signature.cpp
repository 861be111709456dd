#include "wirecat/signature.hpp"

#include <algorithm>
#include <set>

#include "wirecat/diagram.hpp"
#include "wirecat/dsl.hpp"

namespace wirecat {

Word word_concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool word_eq(const Word& u, const Word& v) { return u == v; }

const char* to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::DuplicateId: return "DuplicateId";
    case DiagnosticCode::UnknownReference: return "UnknownReference";
    case DiagnosticCode::EndpointMismatch: return "EndpointMismatch";
    case DiagnosticCode::MalformedDiagram: return "MalformedDiagram";
  }
  return "?";
}

bool Signature::has_object(const std::string& id) const {
  return std::any_of(objects.begin(), objects.end(),
                     [&](const ObjGen& o) { return o.id == id; });
}

const Gen1* Signature::find_gen1(const std::string& id) const {
  for (const auto& g : gens1)
    if (g.id == id) return &g;
  return nullptr;
}

const Gen2* Signature::find_gen2(const std::string& id) const {
  for (const auto& g : gens2)
    if (g.id == id) return &g;
  return nullptr;
}

namespace {

void check_word(const Signature& sig, const Word& w, const std::string& owner,
                std::vector<Diagnostic>& out) {
  for (const auto& letter : w) {
    if (!sig.has_object(letter)) {
      out.push_back({DiagnosticCode::UnknownReference, owner,
                     owner + " references undeclared object '" + letter + "'"});
    }
  }
}

void check_diagram_refs(const Signature& sig, const Diagram& d,
                        const std::string& owner,
                        std::vector<Diagnostic>& out) {
  check_word(sig, d.src, owner, out);
  for (const auto& s : d.slices) {
    check_word(sig, s.left, owner, out);
    check_word(sig, s.right, owner, out);
    if (const auto* g = std::get_if<GenBody>(&s.body)) {
      if (!sig.find_gen1(g->gen1)) {
        out.push_back({DiagnosticCode::UnknownReference, owner,
                       owner + " references undeclared 1-generator '" +
                           g->gen1 + "'"});
      }
    } else {
      const auto& b = std::get<BraidBody>(s.body);
      check_word(sig, {b.x, b.y}, owner, out);
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Signature& sig) {
  std::vector<Diagnostic> out;

  std::set<std::string> seen;
  for (const auto& o : sig.objects) {
    if (o.id.empty() || !seen.insert(o.id).second) {
      out.push_back({DiagnosticCode::DuplicateId, o.id,
                     "object id '" + o.id + "' empty or declared twice"});
    }
  }
  std::set<std::string> seen1;
  for (const auto& g : sig.gens1) {
    if (g.id.empty() || !seen1.insert(g.id).second) {
      out.push_back({DiagnosticCode::DuplicateId, g.id,
                     "gen id '" + g.id + "' empty or declared twice"});
    }
    check_word(sig, g.dom, g.id, out);
    check_word(sig, g.cod, g.id, out);
  }
  std::set<std::string> seen2;
  for (const auto& g : sig.gens2) {
    if (g.id.empty() || !seen2.insert(g.id).second) {
      out.push_back({DiagnosticCode::DuplicateId, g.id,
                     "gen2 id '" + g.id + "' empty or declared twice"});
    }
    if (!g.src || !g.tgt) {
      out.push_back({DiagnosticCode::MalformedDiagram, g.id,
                     "gen2 '" + g.id + "' missing src or tgt"});
      continue;
    }
    const std::size_t before = out.size();
    check_diagram_refs(sig, *g.src, g.id, out);
    check_diagram_refs(sig, *g.tgt, g.id, out);
    if (out.size() != before) continue;  // endpoint math needs resolvable refs
    if (!well_formed(sig, *g.src) || !well_formed(sig, *g.tgt)) {
      out.push_back({DiagnosticCode::MalformedDiagram, g.id,
                     "gen2 '" + g.id + "' has an ill-chained endpoint diagram"});
      continue;
    }
    if (!word_eq(g.src->src, g.tgt->src) ||
        !word_eq(target(sig, *g.src), target(sig, *g.tgt))) {
      out.push_back({DiagnosticCode::EndpointMismatch, g.id,
                     "gen2 '" + g.id + "' src and tgt have different boundary words"});
    }
  }
  return out;
}

}  // namespace wirecat
