#include "genusforge/obstruction.hpp"

#include <algorithm>

#include "genusforge/bernoulli.hpp"
#include "genusforge/genus.hpp"
#include "genusforge/symmetric.hpp"

namespace genusforge {

namespace {

std::string sub(unsigned long n) { return std::to_string(n); }

void add_rule(ObstructionReport& report, const RuleResult& r) { report.evidence.push_back(r.evidence); }

// Evidence for the signature-equation verdicts, one entry per sign.
void add_solvability(ObstructionReport& report, const SignatureEquation& eq, const SolvabilityReport& sol,
                     const std::string& rule) {
  for (const RhsVerdict& v : sol.per_rhs) {
    Evidence e;
    e.rule = rule;
    e.certificates = v.certificates;
    e.summary = "rhs " + to_string(v.rhs) + ": " + to_string(v.result) + " (" + v.reason + ")";
    if (v.result == Solvability::Solvable && v.x && v.y) {
      const BigInt lhs = eq.square_unknown ? BigInt(eq.quad_coeff * *v.x * *v.x + eq.lin_coeff * *v.y)
                                           : BigInt(eq.quad_coeff * *v.x + eq.lin_coeff * *v.y);
      e.certificates.push_back(IdentityCert{"A*" + std::string(eq.square_unknown ? "x^2" : "x") +
                                                " + B*y at x=" + to_string(*v.x) + ", y=" + to_string(*v.y),
                                            ExactRat(lhs), ExactRat(v.rhs)});
    }
    report.evidence.push_back(std::move(e));
  }
}

const WitnessEntry* find_witness(const EngineContext& ctx, unsigned long dim, bool is_double) {
  for (const WitnessEntry& w : ctx.witnesses) {
    if (w.dimension == dim && w.is_double == is_double) return &w;
  }
  return nullptr;
}

ObstructionReport finish(ObstructionReport report, Verdict v) {
  report.verdict = v;
  return report;
}

}  // namespace

ObstructionReport rpp_check(unsigned long dimension, const EngineContext& ctx) {
  if (dimension == 0) throw std::invalid_argument("dimension must be positive");
  ObstructionReport report;
  report.subject = "rpp " + sub(dimension);
  if (dimension == 4 || dimension == 8 || dimension == 16) {
    const char* model = dimension == 4 ? "CP^2" : (dimension == 8 ? "HP^2" : "OP^2");
    report.notes.push_back(std::string("classical dimension: ") + model + " has this rational cohomology");
  }
  report.notes.push_back("only necessary conditions are checked; realizing Pontryagin numbers is out of scope");

  if (dimension == 4) {
    Evidence e{"classical", "dimension 4 is below the signature-equation range", {}};
    report.evidence.push_back(e);
    return finish(report, Verdict::SolvableNecessary);
  }
  if (dimension % 8 != 0) {
    Evidence e{"dimension", "dimension " + sub(dimension) + " is not of the form 8k",
               {ResidueCert{"dimension", ExactRat(static_cast<long>(dimension)), BigInt(8), BigInt(static_cast<unsigned long>(dimension % 8))}}};
    report.evidence.push_back(e);
    return finish(report, Verdict::RuledOut);
  }
  const unsigned long k = dimension / 8;

  const RuleResult two = two_adic_rule(k, 1);
  if (two.status == RuleStatus::RuledOut) {
    add_rule(report, two);
    return finish(report, Verdict::RuledOut);
  }

  if (const WitnessEntry* w = find_witness(ctx, dimension, false)) {
    const RuleResult r = witness_rule_single(k, w->p, ctx);
    if (r.status == RuleStatus::RuledOut) {
      add_rule(report, r);
      return finish(report, Verdict::RuledOut);
    }
  }
  if (k >= 2) {
    WitnessSearchResult found;
    if (4 * k <= kBernoulliDirectBudget) {
      EngineContext quick = ctx;
      quick.factor_budget.rho_iterations = 0;
      found = witness_search(k, PrimeSource::Computed, BigInt(quick.factor_budget.trial_bound), quick);
    } else {
      found = witness_search(k, PrimeSource::Table, BigInt(0), ctx);
    }
    if (found.prime) {
      add_rule(report, witness_rule_single(k, *found.prime, ctx));
      return finish(report, Verdict::RuledOut);
    }
  }
  if (const WitnessEntry* w = find_witness(ctx, dimension, true)) {
    const RuleResult r = witness_rule_double(k, w->p, w->q);
    if (r.status == RuleStatus::RuledOut) {
      add_rule(report, r);
      return finish(report, Verdict::RuledOut);
    }
  }

  if (4 * k > kBernoulliDirectBudget) {
    report.evidence.push_back({"signature-equation", "s_" + sub(2 * k) + " needs B_" + sub(4 * k) +
                                                         ", beyond the direct budget and no witness is known",
                               {}});
    return finish(report, Verdict::Inconclusive);
  }
  const SignatureEquation eq = build_signature_equation(static_cast<unsigned>(k), 1);
  const SolvabilityReport sol = solvable(eq, std::nullopt, ctx.factor_budget);
  add_solvability(report, eq, sol, "signature-equation");
  switch (sol.overall()) {
    case Solvability::Unsolvable:
      report.evidence.push_back({"signature-equation", eq.str() + " has no integer solution for either sign", {}});
      return finish(report, Verdict::RuledOut);
    case Solvability::Solvable:
      report.evidence.push_back({"signature-equation", eq.str() + " has an integer solution", {}});
      return finish(report, Verdict::SolvableNecessary);
    case Solvability::InconclusiveUnfactored:
      report.evidence.push_back({"signature-equation", "modulus could not be factored within budget", {}});
      return finish(report, Verdict::Inconclusive);
  }
  return report;
}

std::string LatticeCongruence::str() const {
  std::string expr;
  if (x2_coeff != 0) expr += (x2_coeff == 1 ? "" : to_string(x2_coeff) + " ") + "x^2";
  if (y_coeff != 0) {
    const BigInt mag = abs(y_coeff);
    if (!expr.empty()) expr += sgn(y_coeff) < 0 ? " - " : " + ";
    else if (sgn(y_coeff) < 0) expr += "-";
    expr += (mag == 1 ? "" : to_string(mag) + " ") + "y";
  }
  return to_string(modulus) + " | " + expr;
}

std::vector<LatticeCongruence> spin32_congruences() {
  const Partition p44{4, 4};
  const Partition p8{8};
  std::vector<LatticeCongruence> out;
  for (const LatticeRow& row : spin_lattice_basis(32)) {
    if (row.value.is_zero()) continue;
    const ExactRat c1 = row.value.coefficient(p44);
    const ExactRat c2 = row.value.coefficient(p8);
    LatticeCongruence c;
    c.label = row.label;
    c.modulus = lcm(c1.denom(), c2.denom());
    c.x2_coeff = (c1 * ExactRat(c.modulus)).numer();
    c.y_coeff = (c2 * ExactRat(c.modulus)).numer();
    if (c.x2_coeff == 0 || c.y_coeff == 0) {
      BigInt& coeff = c.x2_coeff == 0 ? c.y_coeff : c.x2_coeff;
      c.modulus /= gcd(coeff, c.modulus);
      coeff = 1;
    }
    if (c.modulus == 1) continue;
    out.push_back(c);
  }
  return out;
}

ObstructionReport spin32_check(const EngineContext& ctx) {
  ObstructionReport report;
  report.subject = "spin32";
  const std::vector<LatticeCongruence> conds = spin32_congruences();
  BigInt y_modulus = 1;
  for (const LatticeCongruence& c : conds) {
    if (c.x2_coeff == 0) y_modulus = lcm(y_modulus, c.modulus);
  }
  report.evidence.push_back({"spin-lattice",
                             sub(conds.size()) + " integrality conditions from the Spin lattice; combined: " +
                                 to_string(y_modulus) + " | y",
                             {}});
  for (const LatticeCongruence& c : conds) report.notes.push_back("[" + c.label + "] " + c.str());

  SignatureEquation eq = build_signature_equation(4, 1);
  const BigInt g = gcd(gcd(eq.quad_coeff, eq.lin_coeff), eq.rhs_values.front());
  eq.quad_coeff /= g;
  eq.lin_coeff /= g;
  for (BigInt& r : eq.rhs_values) r /= g;
  report.notes.push_back("signature equation " + eq.str());
  eq.lin_coeff *= y_modulus;  // y = y_modulus * y'
  const SolvabilityReport sol = solvable(eq, std::nullopt, ctx.factor_budget);
  add_solvability(report, eq, sol, "signature-mod");
  for (const RhsVerdict& v : sol.per_rhs) {
    if (v.target) {
      report.notes.push_back("rhs " + to_string(v.rhs) + ": x^2 == " + to_string(*v.target) + " (mod " +
                             to_string(v.modulus) + ")");
    }
  }
  if (sol.overall() == Solvability::Unsolvable) {
    report.evidence.push_back({"spin-lattice", "no Spin rational projective plane in dim 32", {}});
    return finish(report, Verdict::RuledOut);
  }
  if (sol.overall() == Solvability::Solvable) {
    report.evidence.push_back({"spin-lattice", "the reduced equation has a solution", {}});
    return finish(report, Verdict::SolvableNecessary);
  }
  return finish(report, Verdict::Inconclusive);
}

ObstructionReport e8_check(unsigned long dimension, const EngineContext& ctx) {
  if (dimension % 4 != 0 || dimension <= 4) {
    throw std::invalid_argument("E8 dimension must be a multiple of 4 greater than 4");
  }
  ObstructionReport report;
  report.subject = "e8 " + sub(dimension);
  const unsigned long k = dimension / 4;
  const GenusSpec l = GenusSpec::l_genus();

  if (k % 2 == 1) {
    if (2 * k <= kBernoulliDirectBudget) {
      const ExactRat sk = genus_coefficient(l, Partition{static_cast<unsigned>(k)});
      const ExactRat x = ExactRat(8) / sk;
      Evidence e;
      e.rule = (k == 3 || k == 5 || k == 7) ? "e8-direct" : "e8-irregular-prime";
      e.certificates.push_back(NonIntegerCert{"8/s_" + sub(k), x});
      if (e.rule == "e8-irregular-prime") {
        const ExactRat ratio = bernoulli(2 * k) / ExactRat(static_cast<long>(2 * k));
        FactorBudget trial_only;
        trial_only.rho_iterations = 0;
        const Factorization f = factor(abs(ratio.numer()), trial_only);
        if (!f.factors.empty()) {
          const BigInt p = f.factors.begin()->first;
          e.certificates.push_back(BernoulliDivisibilityCert{p, 2 * k, true, "computed"});
          e.summary = "irregular prime " + to_string(p) + " > " + sub(2 * k + 1) + " divides numer(B_" +
                      sub(2 * k) + "/" + sub(2 * k) + ") but not 8*(2k-1)!*denom; ";
        }
      }
      if (x.is_integer()) {
        e.summary += "s_" + sub(k) + " x = 8 has the integer solution " + x.str();
        report.evidence.push_back(e);
        return finish(report, Verdict::Candidate);
      }
      e.summary += "s_" + sub(k) + " = " + sk.str() + ", so s_" + sub(k) + " x = 8 has no integer solution";
      report.evidence.push_back(e);
      return finish(report, Verdict::RuledOut);
    }
    for (const IrregularPairTable& t : ctx.tables) {
      for (const auto& [p, idx] : t.pairs()) {
        if (idx == 2 * k && p > BigInt(2 * k + 1)) {
          report.evidence.push_back({"e8-irregular-prime",
                                     "irregular prime " + to_string(p) + " divides numer(B_" + sub(2 * k) +
                                         ") and exceeds 2k+1, so 8/s_" + sub(k) + " is not an integer",
                                     {BernoulliDivisibilityCert{p, 2 * k, true, t.source()}}});
          return finish(report, Verdict::RuledOut);
        }
      }
    }
    report.evidence.push_back({"e8-irregular-prime", "no irregular prime known for B_" + sub(2 * k), {}});
    return finish(report, Verdict::Inconclusive);
  }

  const unsigned long m = k / 2;
  if (m == 1) {
    const ExactRat s11 = genus_coefficient(l, Partition{1, 1});
    const ExactRat s2 = genus_coefficient(l, Partition{2});
    const ExactRat lhs = s11 * ExactRat(200) + s2 * ExactRat(80);
    report.evidence.push_back({"e8-dim8",
                               "p1 = 10 a1, p2 = 40 a1^2 gives <p1^2,mu> = 200, <p2,mu> = 80, both 8 times the CP^4 "
                               "numbers",
                               {IdentityCert{"s_{1,1}*200 + s_2*80", lhs, ExactRat(8)}}});
    return finish(report, lhs == ExactRat(8) ? Verdict::Realizable : Verdict::Inconclusive);
  }

  report.notes.push_back("2-adic bound used: nu_2 >= wt(m) - 2 for both coefficients (not 2^wt(m) - 2)");
  const RuleResult two = two_adic_rule(m, 8);
  if (two.status == RuleStatus::RuledOut) {
    add_rule(report, two);
    return finish(report, Verdict::RuledOut);
  }
  report.notes.push_back("<p_m^2, mu> is treated as an arbitrary integer; values of the E8 form are not imposed");
  if (4 * m > kBernoulliDirectBudget) {
    report.evidence.push_back({"e8-signature", "s_" + sub(2 * m) + " is beyond the direct budget", {}});
    return finish(report, Verdict::Inconclusive);
  }
  SignatureEquation eq = build_signature_equation(static_cast<unsigned>(m), 8);
  eq.square_unknown = false;
  const SolvabilityReport sol = solvable(eq, std::nullopt, ctx.factor_budget);
  add_solvability(report, eq, sol, "e8-signature");
  if (sol.overall() == Solvability::Unsolvable) {
    report.evidence.push_back({"e8-signature", eq.str() + " has no integer solution", {}});
    return finish(report, Verdict::RuledOut);
  }
  report.evidence.push_back({"e8-signature", eq.str() + " is solvable; realizability not established", {}});
  return finish(report, Verdict::Candidate);
}

ExactRat opm_signature_value(unsigned long m, const std::vector<BigInt>& candidate) {
  if (candidate.size() != m) throw std::invalid_argument("candidate needs exactly " + sub(m) + " values");
  const GenusSpec l = GenusSpec::l_genus();
  ExactRat total;
  for (const Partition& j : partitions_of(static_cast<unsigned>(m))) {
    std::vector<unsigned> doubled;
    BigInt product = 1;
    for (unsigned part : j.parts()) {
      doubled.push_back(2 * part);
      product *= candidate[part - 1];
    }
    if (product == 0) continue;
    total += genus_coefficient(l, Partition(doubled)) * ExactRat(product);
  }
  return total;
}

ObstructionReport opm_check(unsigned long m, const std::optional<std::vector<BigInt>>& candidate) {
  if (m < 3) throw std::invalid_argument("rational OP^m check needs m >= 3");
  ObstructionReport report;
  report.subject = "opm " + sub(m);
  if (m % 2 == 1) {
    report.evidence.push_back(
        {"opm-odd",
         "all Pontryagin classes zero; signature 0 and the middle cohomology vanishes",
         {ResidueCert{"middle degree 4m", ExactRat(static_cast<long>(4 * m)), BigInt(8), BigInt(4)},
          IdentityCert{"L-polynomial at p = 0", ExactRat(0), ExactRat(0)}}});
    return finish(report, Verdict::Realizable);
  }
  report.notes.push_back("whether the Pontryagin numbers are those of a genuine manifold remains open");
  if (!candidate) {
    report.evidence.push_back({"opm-even", "no candidate supplied", {}});
    return finish(report, Verdict::Inconclusive);
  }
  const ExactRat value = opm_signature_value(m, *candidate);
  const bool unit = value == ExactRat(1) || value == ExactRat(-1);
  const ExactRat expected = unit ? value : ExactRat(1);
  report.evidence.push_back({"opm-even",
                             "signature polynomial evaluates to " + value.str() + (unit ? "" : ", not +-1"),
                             {IdentityCert{"L_" + sub(2 * m) + " at candidate", value, expected}}});
  if (!unit) report.evidence.back().certificates.clear();
  return finish(report, unit ? Verdict::Candidate : Verdict::Inconclusive);
}

}  // namespace genusforge
