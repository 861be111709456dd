#pragma once

#include <map>
#include <string>
#include <vector>

#include "wirecat/model.hpp"

namespace wirecat {

// A symmetric monoidal category as explicit tables.
struct SmcMorphism {
  std::string id;
  std::string dom;
  std::string cod;
};

struct SmcTables {
  std::string name;
  std::vector<std::string> objects;
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> tensor;
  std::vector<SmcMorphism> morphisms;
  std::map<std::string, std::string> identity;  // object -> morphism
  std::map<std::pair<std::string, std::string>, std::string> compose;
  // Tensor of morphisms.
  std::map<std::pair<std::string, std::string>, std::string> mtensor;
  // braiding[(A, B)]: A tensor B -> B tensor A.
  std::map<std::pair<std::string, std::string>, std::string> braiding;
};

bool smc_tables_equal(const SmcTables& a, const SmcTables& b);

// Skeletal Picard category P: objects {0,1} with addition mod 2, morphisms
// I and -I per object, Koszul symmetry b_{1,1} = -I.
SmcTables picard_p();

// One-object model with 1-cells the smc objects and the interchangor
// phi_{B,A} := sigma_{A,B}.
FiniteModel deloop(const SmcTables& smc);

// Inverse of deloop on one-object models: sigma_{A,B} := phi_{B,A}.
SmcTables loop(const FiniteModel& m);

enum class SphereVariant : std::uint8_t {
  Literal,        // phi is the Koszul sign on all 1-cell pairs
  // "phi trivial on braiding arguments", closed under whiskering. Braiding
  // components hit every parity class once objects shift, so the closure is
  // the fully trivial interchangor.
  BraidTrivialPhi
};

const char* to_string(SphereVariant v);

// The truncated sphere-spectrum example: objects are integers, materialized
// on a carrier wide enough for all windowed axiom instances; hom(m,m) = P;
// beta_{m,n} = (m+n) mod 2. The checker window is [-window, window].
FiniteModel sphere_q(int window, SphereVariant variant);

// Naming helpers for sphere_q carrier cells.
std::string q_object(int m);
std::string q_cell1(int m, int degree);                // degree in {0,1}
std::string q_cell2(int m, int degree, int sign);      // sign in {+1,-1}

// For sphere_q reports: verifies that every symmetric.iv failure matches the
// parity pattern (deg f = 1, m+n odd => phi = -I) and, if so, appends the
// class to the outcome witness. No-op when symmetric.iv passed.
void annotate_sphere_parity(const FiniteModel& m, Report& symmetric_report);

}  // namespace wirecat
