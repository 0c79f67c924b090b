#pragma once

// End-to-end verification pipeline for Enriques involutions on supersingular
// K3 surfaces.
//
// A (sigma, d) case embeds one of the diagonal lattices
//   sigma = 2: diag(4d, -4)            f1 -> x + d y, f2 -> e1
//   sigma = 3: diag(4d, -4, -4, -4)    f1 -> x + d y, f2..f4 -> e1, e3, e6
//   sigma = 4: diag(-4d, -4, -4, -4)   f1 -> x - d y, f2..f4 -> e1, e3, e6
//   sigma = 5: diag(-4d, -4)           f1 -> x - d y, f2 -> e1
// into U(2) + E8(2) and checks every finitely computable property the
// construction needs. The negative-definite root-free side N is the
// orthogonal complement for sigma in {2,3} and the embedded lattice itself for
// sigma in {4,5}; the other side M gives the transcendental lattice U + M.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3lat/embedding.hpp"
#include "k3lat/int_matrix.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

using WitnessValue = std::variant<bool, Integer, IntVector, std::string>;

struct WitnessEntry {
  std::string key;
  WitnessValue value;
  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};
using Witness = std::vector<WitnessEntry>;

struct Check {
  std::string name;
  bool passed = false;
  Witness witness;
  friend bool operator==(const Check&, const Check&) = default;
};

const WitnessValue* find_witness(const Check& check, const std::string& key);

// U(2) + E8(2); basis x, y, e1, ..., e8.
IntegralLattice case_ambient();
IntMatrix case_embedding_basis(int sigma, const Integer& d);
std::vector<std::string> case_embedding_images(int sigma, const Integer& d);
IntVector case_sublattice_diagonal(int sigma, const Integer& d);
// Cyclic orders of l(N_{sigma,d}) as displayed: (4d, 4, 2^6), (4d, 4^3, 2^2),
// (4d, 4^3), (4d, 4).
IntVector displayed_divisor_formula(int sigma, const Integer& d);
// 4^a d with a = 2, 4, 5, 5 for sigma = 2, 3, 4, 5.
Integer expected_t_discriminant(int sigma, const Integer& d);

// Embedding of U(2) + E8(2) into LambdaK3 whose image is the orthogonal
// complement of U + (diagonal Gamma(2)): x -> u1 - u2, y -> v1 - v2,
// e_i -> (e_i, -e_i).
IntMatrix ambient_into_k3();
// Diagonal Gamma(2) in LambdaK3: x -> u1 + u2, y -> v1 + v2, e_i -> (e_i, e_i).
IntMatrix gamma2_into_k3();

struct CaseCertificate {
  int sigma = 0;
  Integer d;
  IntegralLattice ambient;
  IntMatrix embedding_basis;
  std::vector<std::string> images;
  IntMatrix complement_basis;
  IntMatrix complement_gram;
  std::vector<Check> checks;
  std::vector<std::string> cited;
  std::vector<std::string> notes;

  bool passed() const;
};

// Throws std::invalid_argument unless sigma in 2..5 and d >= 1.
CaseCertificate build_case(int sigma, const Integer& d);

struct VerificationResult {
  bool ok = false;
  std::vector<std::string> failures;
};

// Re-derives every check from the stored matrices alone and compares it with
// the stored witness data.
VerificationResult verify_certificate(const CaseCertificate& cert);

struct Gamma2Report {
  IntMatrix embedding;   // rows in LambdaK3 coordinates
  IntMatrix complement;  // rows in LambdaK3 coordinates
  IntMatrix complement_gram;
  std::vector<Check> checks;
  bool passed() const;
};

Gamma2Report gamma2_in_k3();

enum class Answer { Yes, No, Unknown };
enum class Reason { KummerSigma1, ConstructedCase, SigmaBoundExceeded, NoValidD };

std::string to_string(Answer a);
std::string to_string(Reason r);

struct ArthCrosscheck {
  std::int64_t d = 0;
  bool residue_rule = false;   // (-d/p) = +1 for even sigma, -1 for odd
  Integer ns_discriminant;     // -4^a d
  bool arth_on_ns = false;     // arth(p, sigma, ns_discriminant)
  bool agree() const { return residue_rule == arth_on_ns; }
};

struct Verdict {
  std::int64_t p = 0;
  int sigma = 0;
  Answer answer = Answer::Unknown;
  Reason reason = Reason::NoValidD;
  std::optional<std::int64_t> d;
  std::optional<CaseCertificate> certificate;
  std::optional<ArthCrosscheck> arth_crosscheck;
  // arth(p, 6, -2^10) for sigma = 6.
  std::optional<bool> sigma6_arth;
  std::string note;
};

using CaseBuilder = std::function<CaseCertificate(int, const Integer&)>;

// Throws std::invalid_argument unless p is an odd prime and sigma in 1..10.
Verdict decide_enriques(std::int64_t p, int sigma);
Verdict decide_enriques(std::int64_t p, int sigma, const CaseBuilder& build);

struct SurveyReport {
  std::int64_t pmax = 0;
  std::vector<Verdict> rows;  // ascending (p, sigma)
  std::vector<std::string> pattern_violations;
  bool pattern_holds() const { return pattern_violations.empty(); }
};

// Verdicts for every odd prime p <= pmax and sigma in 1..10, with the
// "Yes iff sigma <= 5" pattern checked for p = 19 and 23 < p <= pmax.
SurveyReport survey(std::int64_t pmax);

}  // namespace k3lat
