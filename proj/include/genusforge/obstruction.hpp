#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "genusforge/exact.hpp"
#include "genusforge/report.hpp"
#include "genusforge/tables.hpp"

namespace genusforge {

// ---------------------------------------------------------------------------
// Context shared by the decision procedures

struct WitnessEntry {
  unsigned long dimension = 0;
  bool is_double = false;
  BigInt p;
  BigInt q;  // only for double entries
};

struct EngineContext {
  std::vector<IrregularPairTable> tables;
  FactorBudget factor_budget;
  std::vector<WitnessEntry> witnesses;
};

/// Bundled irregular-pair table and witness file, loaded once; every witness
/// entry is re-checked on load.
const EngineContext& default_context();

/// Lines "dim<TAB>single<TAB>p" or "dim<TAB>double<TAB>p<TAB>q"; '#' starts a
/// comment. With `verify`, each entry is re-checked against the witness rules
/// and a failing entry throws TableError.
std::vector<WitnessEntry> load_witnesses(const std::filesystem::path& path, const EngineContext& ctx,
                                         bool verify = true);
std::vector<WitnessEntry> parse_witnesses(std::string_view text, const EngineContext& ctx, bool verify = true);

// ---------------------------------------------------------------------------
// Signature equation  A x^2 + B y = rhs

struct SignatureEquation {
  unsigned k = 0;
  long sigma = 1;
  BigInt quad_coeff;               // A
  BigInt lin_coeff;                // B
  std::vector<BigInt> rhs_values;  // +|sigma|*D, -|sigma|*D
  ExactRat quad_source;            // s_{k,k}
  ExactRat lin_source;             // s_{2k}
  BigInt clearing_denominator;     // D
  /// When false the first unknown is an arbitrary integer rather than a square.
  bool square_unknown = true;

  std::string str() const;
};

/// s_{k,k} x^2 + s_{2k} y = sigma, cleared by D = lcm of the two denominators.
SignatureEquation build_signature_equation(unsigned k, long sigma);

enum class Solvability { Solvable, Unsolvable, InconclusiveUnfactored };
std::string to_string(Solvability s);

struct RhsVerdict {
  BigInt rhs;
  Solvability result = Solvability::InconclusiveUnfactored;
  std::string reason;
  /// After dividing by g = gcd(A, B): x^2 == target (mod modulus).
  BigInt modulus;
  std::optional<BigInt> target;
  std::vector<PrimePowerSquareVerdict> local;
  std::optional<BigInt> x;  // explicit solution when solvable
  std::optional<BigInt> y;
  std::vector<Certificate> certificates;
};

struct SolvabilityReport {
  std::vector<RhsVerdict> per_rhs;
  /// Solvable if some sign is; unsolvable only if every sign is.
  Solvability overall() const;
};

/// Decides integer solvability for every rhs sign. `modulus_factorization`
/// must factor the reduced modulus |B / gcd(A, B)| when supplied.
SolvabilityReport solvable(const SignatureEquation& eq,
                           const std::optional<Factorization>& modulus_factorization = std::nullopt,
                           const FactorBudget& budget = {});

// ---------------------------------------------------------------------------
// Individual rules

enum class RuleStatus { RuledOut, NotRuledOut, Inapplicable, Inconclusive };
std::string to_string(RuleStatus s);

struct RuleResult {
  RuleStatus status = RuleStatus::Inapplicable;
  Evidence evidence;
};

/// Rules out sigma = +-1 when wt(k) > 2 and sigma = +-8 when wt(k) > 5.
RuleResult two_adic_rule(unsigned long k, long sigma);

/// Single-prime rule for dimension 8n: 2 and -2 nonresidues mod p,
/// nu_p(s_2n) > 0 and nu_p(s_n) = 0. Exact when B_4n is inside the direct
/// budget; otherwise the Bernoulli facts come from the tables.
RuleResult witness_rule_single(unsigned long n, const BigInt& p, const EngineContext& ctx = default_context());

/// Two-prime rule: p, q divide s_2n, 1/s_{n,n} nonresidue mod p (rules out +1)
/// and -1/s_{n,n} nonresidue mod q (rules out -1).
RuleResult witness_rule_double(unsigned long n, const BigInt& p, const BigInt& q);

enum class PrimeSource { Computed, Table };

struct WitnessSearchResult {
  std::optional<BigInt> prime;
  /// True when every candidate up to the bound was examined.
  bool exhaustive = false;
  std::vector<BigInt> candidates_checked;
  std::string note;
};

/// First prime p = 5 (mod 8), p > 4n, p <= bound, dividing numer(B_4n) that
/// satisfies the single-prime rule, in increasing order of p. bound <= 0 means no bound.
WitnessSearchResult witness_search(unsigned long n, PrimeSource source, const BigInt& bound,
                                   const EngineContext& ctx = default_context());

// ---------------------------------------------------------------------------
// Reports

ObstructionReport rpp_check(unsigned long dimension, const EngineContext& ctx = default_context());

struct LatticeCongruence {
  std::string label;  // basis row it came from
  BigInt modulus;     // modulus | x2_coeff * x^2 + y_coeff * y
  BigInt x2_coeff;
  BigInt y_coeff;

  std::string str() const;
  friend bool operator==(const LatticeCongruence&, const LatticeCongruence&) = default;
};

/// Integrality conditions from the dim-32 Spin lattice rows, with x^2 =
/// <p4^2,[M]> and y = <p8,[M]>. Single-unknown rows are reduced so the
/// coefficient is 1; trivial rows are dropped.
std::vector<LatticeCongruence> spin32_congruences();

ObstructionReport spin32_check(const EngineContext& ctx = default_context());

/// Throws std::invalid_argument unless dimension = 0 (mod 4) and dimension > 4.
ObstructionReport e8_check(unsigned long dimension, const EngineContext& ctx = default_context());

/// Throws std::invalid_argument for m < 3. For even m, `candidate` holds the
/// values of p_2, p_4, ..., p_{2m} on x, x^2, ..., x^m.
ObstructionReport opm_check(unsigned long m, const std::optional<std::vector<BigInt>>& candidate = std::nullopt);

/// Sum over partitions J of m of s_{2J} * prod candidate[j - 1].
ExactRat opm_signature_value(unsigned long m, const std::vector<BigInt>& candidate);

}  // namespace genusforge
