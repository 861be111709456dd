#pragma once

#include <memory>
#include <string>
#include <vector>

namespace wirecat {

// A tensor word of object generators. The unit object is the empty word;
// concatenation is strictly associative with the empty word as unit.
using Word = std::vector<std::string>;

Word word_concat(const Word& u, const Word& v);
bool word_eq(const Word& u, const Word& v);

struct ObjGen {
  std::string id;
};

struct Gen1 {
  std::string id;
  Word dom;
  Word cod;
};

// Forward declaration; Gen2 endpoints are full diagrams (see diagram.hpp).
struct Diagram;

struct Gen2 {
  std::string id;
  // Owned via indirection so signature.hpp need not see Diagram's layout.
  std::shared_ptr<const Diagram> src;
  std::shared_ptr<const Diagram> tgt;
  bool invertible = false;
};

enum class DiagnosticCode {
  DuplicateId,
  UnknownReference,
  EndpointMismatch,
  MalformedDiagram,
};

struct Diagnostic {
  DiagnosticCode code;
  std::string subject;  // id of the offending declaration
  std::string message;
};

const char* to_string(DiagnosticCode code);

struct Signature {
  std::vector<ObjGen> objects;
  std::vector<Gen1> gens1;
  std::vector<Gen2> gens2;

  bool has_object(const std::string& id) const;
  const Gen1* find_gen1(const std::string& id) const;
  const Gen2* find_gen2(const std::string& id) const;
};

// Checks all signature invariants: unique ids, referential integrity,
// well-formedness of Gen2 endpoints and equality of their boundary words.
// Empty result means the signature is valid.
std::vector<Diagnostic> validate(const Signature& sig);

}  // namespace wirecat
