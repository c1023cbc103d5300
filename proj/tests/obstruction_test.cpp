#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "certcheck.hpp"
#include "genusforge/genus.hpp"
#include "genusforge/obstruction.hpp"
#include "oracles.hpp"

using namespace genusforge;

namespace {

void require_certificates(const ObstructionReport& r) {
  std::string why;
  CHECK_MESSAGE(certcheck::failures(r, &why) == 0, r.subject << ": " << why);
}

bool has_cert(const ObstructionReport& r, const std::function<bool(const Certificate&)>& pred) {
  for (const Evidence& e : r.evidence) {
    if (std::any_of(e.certificates.begin(), e.certificates.end(), pred)) return true;
  }
  return false;
}

bool residue_cert(const Certificate& c, long modulus, long residue) {
  const auto* x = std::get_if<ResidueCert>(&c);
  return x && x->modulus == modulus && x->residue == residue;
}

// Exists x in [0, |B|) with A x^2 (or A x) == rhs (mod |B|)?
bool brute_solvable(long a, long b, long rhs, bool square) {
  const long m = std::labs(b);
  for (long x = 0; x < m; ++x) {
    const long t = square ? (x * x) % m : x;
    if (((a % m) * t - rhs) % m == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("signature equation in dimension 32 is a multiple of the published triple") {
  for (const long sigma : {1L, -1L}) {
    const SignatureEquation eq = build_signature_equation(4, sigma);
    REQUIRE(eq.quad_coeff % 444721 == 0);
    const BigInt mult = eq.quad_coeff / -444721;
    CHECK(mult != 0);
    CHECK(eq.lin_coeff == mult * 118518239);
    REQUIRE(eq.rhs_values.size() == 2);
    CHECK(abs(eq.rhs_values[0]) == abs(mult * BigInt(162820783125L)));
    CHECK(eq.rhs_values[1] == -eq.rhs_values[0]);
  }
}

TEST_CASE("solvable agrees with exhaustion") {
  auto gen = oracle::rng(4242);
  for (int i = 0; i < 400; ++i) {
    const long bmax = i < 380 ? 20'000 : 1'000'000;
    SignatureEquation eq;
    eq.quad_coeff = static_cast<long>(gen() % 2001) - 1000;
    if (eq.quad_coeff == 0) eq.quad_coeff = 1;
    long b = static_cast<long>(gen() % bmax) + 1;
    if (gen() % 2) b = -b;
    // shared factors exercise the gcd reduction
    if (i % 7 == 0) {
      eq.quad_coeff *= 6;
      b = (b % (bmax / 6)) * 6;
      if (b == 0) b = 6;
    }
    eq.lin_coeff = b;
    const long rhs = static_cast<long>(gen() % 200'000) - 100'000;
    eq.rhs_values = {BigInt(rhs), BigInt(-rhs)};
    eq.square_unknown = i % 5 != 0;
    const SolvabilityReport rep = solvable(eq);
    REQUIRE(rep.per_rhs.size() == 2);
    for (const RhsVerdict& v : rep.per_rhs) {
      const bool truth = brute_solvable(eq.quad_coeff.get_si(), b, v.rhs.get_si(), eq.square_unknown);
      CHECK_MESSAGE((v.result == Solvability::Solvable) == truth,
                    eq.quad_coeff << " x^2 + " << b << " y = " << v.rhs << " (square=" << eq.square_unknown << ")");
      CHECK(v.result != Solvability::InconclusiveUnfactored);
      if (v.result == Solvability::Solvable) {
        REQUIRE(v.x.has_value());
        REQUIRE(v.y.has_value());
        const BigInt xx = eq.square_unknown ? BigInt(*v.x * *v.x) : *v.x;
        CHECK(eq.quad_coeff * xx + eq.lin_coeff * *v.y == v.rhs);
      }
      for (const Certificate& c : v.certificates) CHECK(certcheck::verify(c).empty());
    }
  }
}

TEST_CASE("unfactorable moduli are inconclusive") {
  SignatureEquation eq;
  eq.quad_coeff = 3;
  eq.lin_coeff = parse_bigint("1000000000000000000117") * parse_bigint("1000000000000000000129");
  eq.rhs_values = {BigInt(5), BigInt(-5)};
  FactorBudget tiny;
  tiny.rho_iterations = 10;
  const SolvabilityReport r = solvable(eq, std::nullopt, tiny);
  CHECK(r.overall() == Solvability::InconclusiveUnfactored);
}

TEST_CASE("two-adic rule") {
  CHECK(two_adic_rule(7, 1).status == RuleStatus::RuledOut);
  CHECK(two_adic_rule(6, 1).status == RuleStatus::Inapplicable);
  CHECK(two_adic_rule(63, 8).status == RuleStatus::RuledOut);
  CHECK(two_adic_rule(31, 8).status == RuleStatus::Inapplicable);
  CHECK(two_adic_rule(1000, 1).status == RuleStatus::RuledOut);
  CHECK_THROWS_AS(two_adic_rule(3, 0), std::invalid_argument);
}

TEST_CASE("published single-prime witnesses") {
  const std::vector<std::pair<unsigned long, const char*>> rows = {
      {48, "2294797"}, {64, "37"}, {72, "26315271553053477373"}, {96, "653"}, {136, "101"}, {160, "10589"}};
  for (const auto& [dim, p] : rows) {
    const RuleResult r = witness_rule_single(dim / 8, parse_bigint(p));
    CHECK_MESSAGE(r.status == RuleStatus::RuledOut, dim);
    for (const Certificate& c : r.evidence.certificates) CHECK(certcheck::verify(c).empty());
  }
  CHECK(witness_rule_single(8, BigInt(41)).status == RuleStatus::Inapplicable);
}

TEST_CASE("published two-prime witnesses") {
  const std::vector<std::tuple<unsigned long, const char*, const char*>> rows = {
      {40, "283", "524287"},
      {80, "1897170067619", "79"},
      {144, "1872341908760688976794226499636304357567811", "228479"},
      {192, "4155593423131", "191"}};
  for (const auto& [dim, p, q] : rows) {
    const RuleResult r = witness_rule_double(dim / 8, parse_bigint(p), parse_bigint(q));
    CHECK_MESSAGE(r.status == RuleStatus::RuledOut, dim);
    for (const Certificate& c : r.evidence.certificates) CHECK(certcheck::verify(c).empty());
  }
}

TEST_CASE("witness search") {
  const WitnessSearchResult w = witness_search(8, PrimeSource::Computed, BigInt(0));
  REQUIRE(w.prime.has_value());
  CHECK(*w.prime == 37);
  const WitnessSearchResult t = witness_search(2048, PrimeSource::Table, BigInt(0));
  REQUIRE(t.prime.has_value());
  CHECK(*t.prime == 502261);
  CHECK_FALSE(witness_search(8, PrimeSource::Computed, BigInt(30)).prime.has_value());
}

TEST_CASE("rational projective planes between 16 and 128 are ruled out") {
  for (unsigned long n = 17; n < 128; ++n) {
    const ObstructionReport r = rpp_check(n);
    const Verdict want = n == 32 ? Verdict::SolvableNecessary : Verdict::RuledOut;
    CHECK_MESSAGE(r.verdict == want, n);
    CHECK_MESSAGE(r.certificate_count() > 0, n);
    require_certificates(r);
  }
}

TEST_CASE("dimension 40 and 64 details") {
  const ObstructionReport r40 = rpp_check(40);
  CHECK(has_cert(r40, [](const Certificate& c) { return residue_cert(c, 283, 146); }));
  CHECK(has_cert(r40, [](const Certificate& c) { return residue_cert(c, 524287, 318975); }));
  const ObstructionReport r64 = rpp_check(64);
  CHECK(r64.verdict == Verdict::RuledOut);
  CHECK(r64.render_text().find("witness prime 37") != std::string::npos);
  CHECK(has_cert(r64, [](const Certificate& c) {
    const auto* x = std::get_if<ResidueCert>(&c);
    return x && x->modulus == 37 && x->residue == 0 && x->what.find("s_8^2/2") != std::string::npos;
  }));
}

TEST_CASE("dimension 128") {
  const ObstructionReport r = rpp_check(128);
  CHECK(r.verdict == Verdict::SolvableNecessary);
  const BigInt a = parse_bigint("98719348515711444512355076910350678632922916684640405411745");
  const BigInt m = parse_bigint("100500713568783890959555031913261799931478908397894537794155");
  CHECK(has_cert(r, [&](const Certificate& c) {
    const auto* x = std::get_if<ResidueCert>(&c);
    return x && x->modulus == m && x->residue == a;
  }));
  CHECK(has_cert(r, [&](const Certificate& c) {
    const auto* x = std::get_if<ResidueCert>(&c);
    return x && x->modulus == m && x->residue == m - a;
  }));
  require_certificates(r);
}

TEST_CASE("wt(k) > 2 rules out every dimension 8k up to 512") {
  for (unsigned long k = 1; k <= 64; ++k) {
    if (hamming_weight(BigInt(k)) <= 2) continue;
    const ObstructionReport r = rpp_check(8 * k);
    CHECK_MESSAGE(r.verdict == Verdict::RuledOut, 8 * k);
    require_certificates(r);
  }
}

TEST_CASE("Spin in dimension 32") {
  const auto cs = spin32_congruences();
  const std::vector<LatticeCongruence> published = {
      {"", parse_bigint("85364982743040000"), BigInt(14527), BigInt(-14468)},
      {"", parse_bigint("5230697472000"), BigInt(431), BigInt(-4)},
      {"", parse_bigint("871782912000"), BigInt(-2771), BigInt(21844)},
      {"", BigInt(11404800), BigInt(7), BigInt(-124)},
      {"", BigInt(2419200), BigInt(1), BigInt(1828)},
      {"", BigInt(25401600), BigInt(1), BigInt(0)},
      {"", BigInt(2520), BigInt(0), BigInt(1)}};
  for (const auto& want : published) {
    const bool found = std::any_of(cs.begin(), cs.end(), [&](const LatticeCongruence& c) {
      return c.modulus == want.modulus && c.x2_coeff == want.x2_coeff && c.y_coeff == want.y_coeff;
    });
    CHECK_MESSAGE(found, want.str());
  }
  const ObstructionReport r = spin32_check();
  CHECK(r.verdict == Verdict::RuledOut);
  CHECK(r.render_text().find("no Spin rational projective plane in dim 32") != std::string::npos);
  CHECK(has_cert(r, [](const Certificate& c) {
    const auto* x = std::get_if<ResidueCert>(&c);
    return x && x->modulus == 298665962280 && x->residue == 11010868155;
  }));
  for (const long v : {3L, 5L}) {
    CHECK(has_cert(r, [v](const Certificate& c) {
      const auto* x = std::get_if<NonSquareCert>(&c);
      return x && x->prime == 2 && x->exponent == 3 && x->value == v;
    }));
  }
  require_certificates(r);
}

TEST_CASE("E8 manifolds") {
  const ObstructionReport r8 = e8_check(8);
  CHECK(r8.verdict == Verdict::Realizable);
  require_certificates(r8);
  for (const unsigned long d : {12UL, 20UL, 28UL, 36UL, 44UL}) {
    const ObstructionReport r = e8_check(d);
    CHECK_MESSAGE(r.verdict == Verdict::RuledOut, d);
    require_certificates(r);
  }
  const ObstructionReport r504 = e8_check(504);
  CHECK(r504.verdict == Verdict::RuledOut);
  require_certificates(r504);
  CHECK_THROWS_AS(e8_check(4), std::invalid_argument);
  CHECK_THROWS_AS(e8_check(10), std::invalid_argument);
}

TEST_CASE("E8 even case against exhaustion") {
  for (unsigned long m = 2; m <= 16; ++m) {
    const ObstructionReport r = e8_check(8 * m);
    if (hamming_weight(BigInt(m)) > 5) {
      CHECK(r.verdict == Verdict::RuledOut);
      continue;
    }
    // s_{m,m} x + s_{2m} y = +-8 over the integers, x unconstrained
    const ExactRat a = genus_coefficient(GenusSpec::l_genus(), Partition{static_cast<unsigned>(m), static_cast<unsigned>(m)});
    const ExactRat b = genus_coefficient(GenusSpec::l_genus(), Partition{static_cast<unsigned>(2 * m)});
    const BigInt d = lcm(a.denom(), b.denom());
    const BigInt ai = a.numer() * (d / a.denom());
    const BigInt bi = b.numer() * (d / b.denom());
    const BigInt g = gcd(ai, bi);
    const bool truth = (8 * d) % g == 0;
    CHECK_MESSAGE((r.verdict == Verdict::Candidate) == truth, m);
    CHECK_MESSAGE((r.verdict == Verdict::RuledOut) == !truth, m);
    require_certificates(r);
  }
}

TEST_CASE("rational OP^m") {
  const ObstructionReport r3 = opm_check(3);
  CHECK(r3.verdict == Verdict::Realizable);
  require_certificates(r3);
  const std::vector<BigInt> cand = {BigInt(0), parse_bigint("20688922800"), BigInt(0),
                                    parse_bigint("1606120797592276875")};
  const ExactRat v = opm_signature_value(4, cand);
  CHECK((v == ExactRat(1) || v == ExactRat(-1)));
  CHECK(opm_check(4, cand).verdict == Verdict::Candidate);
  CHECK(opm_signature_value(4, {BigInt(0), BigInt(0), BigInt(0), BigInt(0)}) == ExactRat(0));
  CHECK(opm_check(4, std::vector<BigInt>{0, 0, 0, 0}).verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(opm_check(2), std::invalid_argument);
  CHECK_THROWS_AS(opm_signature_value(4, {BigInt(1)}), std::invalid_argument);
}

TEST_CASE("witness file validation") {
  const EngineContext& ctx = default_context();
  CHECK(ctx.witnesses.size() == 12);
  CHECK_NOTHROW(parse_witnesses("64\tsingle\t37\n", ctx));
  CHECK_THROWS_AS(parse_witnesses("64\tsingle\t41\n", ctx), TableError);
  CHECK_THROWS_AS(parse_witnesses("63\tsingle\t37\n", ctx), TableError);
  CHECK_THROWS_AS(parse_witnesses("64\ttriple\t37\n", ctx), TableError);
  CHECK(parse_witnesses("# c\n40\tdouble\t283\t524287\n", ctx).front().is_double);
}
