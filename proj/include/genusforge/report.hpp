#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "genusforge/exact.hpp"

namespace genusforge {

enum class Verdict { RuledOut, SolvableNecessary, Realizable, Candidate, Inconclusive };

/// "ruled-out", "solvable-necessary-conditions", "realizable", "candidate", "inconclusive"
std::string to_string(Verdict v);

// Certificates are self-contained claims that can be re-checked from the
// stored numbers alone (together with the quantity named in `what`).

/// `value` is not a square modulo prime^exponent.
struct NonSquareCert {
  BigInt value;
  BigInt prime;
  unsigned exponent = 1;
};

/// `what` = value, and value == residue (mod modulus).
struct ResidueCert {
  std::string what;
  ExactRat value;
  BigInt modulus;
  BigInt residue;
};

/// nu_prime(value) == valuation, where `what` names the value.
struct ValuationCert {
  std::string what;
  ExactRat value;
  BigInt prime;
  long valuation = 0;
};

/// prime | numer(B_index) (or does not, when `divides` is false), as
/// answered by `source` ("computed" or a table provenance string).
struct BernoulliDivisibilityCert {
  BigInt prime;
  unsigned long index = 0;
  bool divides = true;
  std::string source;
};

/// `what` = value, and value is not an integer.
struct NonIntegerCert {
  std::string what;
  ExactRat value;
};

/// lhs evaluates exactly to rhs.
struct IdentityCert {
  std::string what;
  ExactRat lhs;
  ExactRat rhs;
};

/// (base^exponent + offset) mod modulus == residue.
struct PowerResidueCert {
  BigInt base;
  BigInt exponent;
  BigInt offset;
  BigInt modulus;
  BigInt residue;
};

/// hamming_weight(k) == weight.
struct HammingCert {
  BigInt k;
  unsigned long weight = 0;
};

using Certificate = std::variant<NonSquareCert, ResidueCert, ValuationCert, BernoulliDivisibilityCert,
                                 NonIntegerCert, IdentityCert, PowerResidueCert, HammingCert>;

struct Evidence {
  std::string rule;
  std::string summary;
  std::vector<Certificate> certificates;
};

struct ObstructionReport {
  std::string subject;  // "rpp 64", "spin32", "e8 504", ...
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;

  /// First line is "<subject>: <verdict>[; <headline>]", then one line per rule.
  std::string render_text() const;
  nlohmann::json to_json() const;
  std::size_t certificate_count() const;
};

nlohmann::json to_json(const Certificate& c);

}  // namespace genusforge
