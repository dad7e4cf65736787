#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvspec/catalog.hpp"
#include "solvspec/equiv.hpp"

namespace solvspec {

struct ParamFamily {
  const CatalogEntry* entry = nullptr;
  FactoredSpectrum symbolic;  // verified against the symbolic characteristic polynomial
};

ParamFamily make_family(const CatalogEntry& e);

enum class RigidityVerdict { Rigid, NotRigid, Inconclusive };
const char* verdict_name(RigidityVerdict v);

struct RigidityReport {
  std::string param;
  size_t i0 = 0;
  std::vector<Scalar> triple;
  bool shape = false;      // chosen factors have parameter-free z0 part
  bool single_var = false; // chosen factors involve only z_{i0} besides z0
  bool distinct = false;   // nonvanishing and pairwise distinct off a finite set
  bool injective = false;  // b -> (c1 : c2 : c3) is injective
  RigidityVerdict verdict = RigidityVerdict::Inconclusive;
  std::vector<Scalar> excluded;  // sorted, restricted to the declared domain when it is a simple inequality
  std::vector<std::string> notes;
  std::optional<size_t> witness;  // index into the entry's witnesses backing a NotRigid verdict
};

// Checks the four conditions with the given i0 (1-based z index) and triple; an empty triple selects one.
RigidityReport rigidity_check(const ParamFamily& fam, size_t i0, const std::vector<Scalar>& triple = {});
// Uses the entry's hint, otherwise every extension variable in turn; falls back to witnesses.
RigidityReport rigidity_check(const ParamFamily& fam);

// Q at p' under B equals Q at p; B may mention parameters and primed parameters.
bool verify_nonrigidity_witness(const ParamFamily& fam, const Assignment& p, const Assignment& p_prime, const Matrix& b);
// Identity over the parameter field with p' given by the witness map.
bool verify_witness_symbolic(const ParamFamily& fam, const Witness& w);
// Parameter values where the symbolic witness B is singular or undefined, one list per parameter.
std::map<std::string, std::vector<Scalar>> witness_singular_locus(const ParamFamily& fam, const Witness& w);

Scalar mobius(const Scalar& c);
struct MobiusOrbit {
  std::vector<Scalar> orbit;
  bool fixed = false;
};
MobiusOrbit mobius_classify(const Scalar& c);
std::vector<Scalar> mobius_fixed_points();

enum class FamilyClass { ContinuumRigid, SingleClass, TwoClass, OrbitContinuum };
const char* family_class_name(FamilyClass c);

struct Classification {
  FamilyClass kind = FamilyClass::ContinuumRigid;
  std::vector<std::string> certificates;
  std::map<std::string, std::vector<Scalar>> distinguished;  // TwoClass: the special parameter values
  std::string orbit_map;                                     // OrbitContinuum: the parameter involution
  std::vector<std::string> redundant;                        // parameters that do not affect the class
};

Classification classify_family(const ParamFamily& fam);

}  // namespace solvspec
