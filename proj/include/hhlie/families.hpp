#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hhlie/algebra.hpp"

namespace hhlie {

enum class Family { D1A2, SD1A1, SD1A2, SD2B1, SD2B2, Q1A1, Q1A2, Q2B1 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
bool is_local(Family f);
bool is_quaternion(Family f);
// which parameters the family takes besides k
bool uses_s(Family f);
bool uses_c(Family f);
bool uses_d(Family f);
bool uses_a(Family f);

struct FamilyParams {
  Family family = Family::D1A2;
  int k = 2;
  int s = 0;
  Scalar c = 0, d = 0, a = 0;
};

// "D1A2:k=2,d=0" style
std::string describe(const FamilyParams& p, const Field& F);
FamilyParams parse_instance(const std::string& text, const Field& F);

class InvalidParameters : public Error {
 public:
  using Error::Error;
};
class WrongCharacteristic : public InvalidParameters {
 public:
  using InvalidParameters::InvalidParameters;
};

void check_parameters(const FamilyParams& p, const Field& F);

// the .qalg text the instance is built from
std::string family_dsl(const FamilyParams& p, const Field& F);

struct ResolutionSpec;

struct FamilyInstance {
  FamilyParams params;
  const Field* field;
  std::shared_ptr<const AlgebraSpec> algebra;
  std::shared_ptr<const ResolutionSpec> resolution;  // null when none is known
  std::string dsl;
};

FamilyInstance make_family(const FamilyParams& p, const Field& F);

// closed forms for dim HH^n where known; nullopt otherwise
std::optional<std::size_t> expected_hh_dim(const FamilyParams& p, const Field& F, int degree);

// eigenvalue on the top generator of the six-dimensional quotient of HH^1
// for the semidihedral 2B families: 2ks-k-s, resp. 2ks/3
Scalar g_lambda_parameter(const FamilyParams& p, const Field& F);

}  // namespace hhlie
