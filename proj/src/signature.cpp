#include "genusforge/bernoulli.hpp"
#include "genusforge/genus.hpp"
#include "genusforge/obstruction.hpp"

namespace genusforge {

std::string SignatureEquation::str() const {
  std::string out = to_string(quad_coeff) + (square_unknown ? " x^2 " : " x ");
  out += (sgn(lin_coeff) < 0 ? "- " : "+ ") + to_string(BigInt(abs(lin_coeff))) + " y = ";
  if (rhs_values.empty()) return out + "?";
  return out + "+-" + to_string(BigInt(abs(rhs_values.front())));
}

SignatureEquation build_signature_equation(unsigned k, long sigma) {
  if (k == 0) throw std::invalid_argument("signature equation needs k >= 1");
  if (sigma == 0) throw std::invalid_argument("signature must be nonzero");
  const GenusSpec l = GenusSpec::l_genus();
  SignatureEquation eq;
  eq.k = k;
  eq.sigma = sigma;
  eq.quad_source = genus_coefficient(l, Partition{k, k});
  eq.lin_source = genus_coefficient(l, Partition{2 * k});
  eq.clearing_denominator = lcm(eq.quad_source.denom(), eq.lin_source.denom());
  const ExactRat d(eq.clearing_denominator);
  eq.quad_coeff = (eq.quad_source * d).numer();
  eq.lin_coeff = (eq.lin_source * d).numer();
  const BigInt rhs = BigInt(std::abs(sigma)) * eq.clearing_denominator;
  eq.rhs_values = {rhs, BigInt(-rhs)};
  return eq;
}

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::Solvable: return "solvable";
    case Solvability::Unsolvable: return "unsolvable";
    case Solvability::InconclusiveUnfactored: return "inconclusive-unfactored";
  }
  return "inconclusive-unfactored";
}

Solvability SolvabilityReport::overall() const {
  bool all_unsolvable = true;
  for (const RhsVerdict& v : per_rhs) {
    if (v.result == Solvability::Solvable) return Solvability::Solvable;
    if (v.result != Solvability::Unsolvable) all_unsolvable = false;
  }
  return all_unsolvable ? Solvability::Unsolvable : Solvability::InconclusiveUnfactored;
}

namespace {

RhsVerdict solve_one(const SignatureEquation& eq, const BigInt& rhs,
                     const std::optional<Factorization>& supplied, const FactorBudget& budget) {
  RhsVerdict v;
  v.rhs = rhs;
  const BigInt& a = eq.quad_coeff;
  const BigInt& b = eq.lin_coeff;
  if (a == 0 || b == 0) throw std::invalid_argument("degenerate signature equation");

  const BigInt g = gcd(a, b);
  if (mod(rhs, g) != 0) {
    v.result = Solvability::Unsolvable;
    v.reason = "gcd(A, B) = " + to_string(g) + " does not divide the right-hand side";
    v.certificates.push_back(ResidueCert{"rhs", ExactRat(rhs), g, mod(rhs, g)});
    return v;
  }
  const BigInt a1 = a / g;
  const BigInt b1 = b / g;
  const BigInt r1 = rhs / g;
  v.modulus = abs(b1);

  if (!eq.square_unknown) {
    // A' x + B' y = r' with gcd(A', B') = 1 always has a solution.
    const BigInt x = v.modulus == 1 ? BigInt(0) : mod(r1 * *inverse_mod(a1, v.modulus), v.modulus);
    v.result = Solvability::Solvable;
    v.reason = "linear in both unknowns with coprime reduced coefficients";
    v.x = x;
    v.y = (r1 - a1 * x) / b1;
    return v;
  }
  if (v.modulus == 1) {
    v.result = Solvability::Solvable;
    v.reason = "reduced modulus is 1";
    v.target = BigInt(0);
    v.x = BigInt(0);
    v.y = r1 / b1;
    return v;
  }

  v.target = mod(r1 * *inverse_mod(a1, v.modulus), v.modulus);
  v.certificates.push_back(ResidueCert{"(rhs/g)/(A/g)", ExactRat(r1, a1), v.modulus, *v.target});
  Factorization f;
  if (supplied) {
    if (!supplied->complete || supplied->value() != v.modulus) {
      throw std::invalid_argument("supplied factorization does not factor " + to_string(v.modulus));
    }
    f = *supplied;
  } else {
    f = factor(v.modulus, budget);
  }
  if (!f.complete) {
    v.result = Solvability::InconclusiveUnfactored;
    v.reason = "cofactor " + to_string(f.cofactor) + " of the modulus was not factored within budget";
    return v;
  }
  const SquareModVerdict sq = solve_square_mod(*v.target, f);
  v.local = sq.local;
  if (sq.solvable) {
    v.result = Solvability::Solvable;
    v.reason = "target is a square modulo every prime power of the modulus";
    v.x = *sq.root;
    v.y = (r1 - a1 * *v.x * *v.x) / b1;
    return v;
  }
  v.result = Solvability::Unsolvable;
  for (const PrimePowerSquareVerdict& local : sq.local) {
    if (local.solvable) continue;
    v.certificates.push_back(NonSquareCert{local.residue, local.prime, local.exponent});
  }
  const NonSquareCert& first = std::get<NonSquareCert>(v.certificates.at(1));
  v.reason = "target " + to_string(*v.target) + " is not a square modulo " + to_string(first.prime) +
             (first.exponent > 1 ? "^" + std::to_string(first.exponent) : "");
  return v;
}

}  // namespace

SolvabilityReport solvable(const SignatureEquation& eq, const std::optional<Factorization>& modulus_factorization,
                           const FactorBudget& budget) {
  SolvabilityReport report;
  for (const BigInt& rhs : eq.rhs_values) report.per_rhs.push_back(solve_one(eq, rhs, modulus_factorization, budget));
  return report;
}

std::string to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::RuledOut: return "ruled-out";
    case RuleStatus::NotRuledOut: return "not-ruled-out";
    case RuleStatus::Inapplicable: return "inapplicable";
    case RuleStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RuleResult two_adic_rule(unsigned long k, long sigma) {
  if (k == 0) throw std::invalid_argument("two-adic rule needs k >= 1");
  if (sigma == 0) throw std::invalid_argument("signature must be nonzero");
  RuleResult r;
  r.evidence.rule = "two-adic";
  const unsigned long w = hamming_weight(BigInt(k));
  const long sigma_val = nu(BigInt(2), BigInt(std::abs(sigma)));
  const unsigned long threshold = static_cast<unsigned long>(sigma_val) + 2;
  r.evidence.certificates.push_back(HammingCert{BigInt(k), w});
  if (w <= threshold) {
    r.status = RuleStatus::Inapplicable;
    r.evidence.summary = "wt(" + std::to_string(k) + ")=" + std::to_string(w) + " <= " + std::to_string(threshold);
    return r;
  }
  if (4 * k > kBernoulliDirectBudget) {
    // The bound nu_2 >= wt(k) - 2 is proven; the valuations themselves are out of reach.
    r.status = RuleStatus::RuledOut;
    r.evidence.summary = "wt(" + std::to_string(k) + ")=" + std::to_string(w) + " > " + std::to_string(threshold) +
                         "; both coefficients have nu_2 >= wt-2 > nu_2(" + std::to_string(sigma) + ")";
    return r;
  }
  const GenusSpec l = GenusSpec::l_genus();
  const ExactRat skk = genus_coefficient(l, Partition{static_cast<unsigned>(k), static_cast<unsigned>(k)});
  const ExactRat s2k = genus_coefficient(l, Partition{static_cast<unsigned>(2 * k)});
  const long v_kk = nu(BigInt(2), skk);
  const long v_2k = nu(BigInt(2), s2k);
  const std::string ks = std::to_string(k);
  r.evidence.certificates.push_back(ValuationCert{"s_{" + ks + "," + ks + "}", skk, BigInt(2), v_kk});
  r.evidence.certificates.push_back(ValuationCert{"s_" + std::to_string(2 * k), s2k, BigInt(2), v_2k});
  if (std::min(v_kk, v_2k) > sigma_val) {
    r.status = RuleStatus::RuledOut;
    r.evidence.summary = "wt(" + ks + ")=" + std::to_string(w) + " > " + std::to_string(threshold) +
                         "; left side divisible by 2^" + std::to_string(std::min(v_kk, v_2k)) +
                         ", right side " + std::to_string(sigma) + " is not";
  } else {
    r.status = RuleStatus::NotRuledOut;
    r.evidence.summary = "valuations do not exceed nu_2(" + std::to_string(sigma) + ")";
  }
  return r;
}

}  // namespace genusforge
