#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "genusforge/exact.hpp"
#include "oracles.hpp"

using namespace genusforge;

TEST_CASE("rationals stay reduced") {
  const ExactRat q(BigInt(-6), BigInt(4));
  CHECK(q.numer() == -3);
  CHECK(q.denom() == 2);
  CHECK(ExactRat(BigInt(3), BigInt(-9)).str() == "-1/3");
  CHECK(ExactRat::parse("-174611/330") == ExactRat(BigInt(-174611), BigInt(330)));
  CHECK(ExactRat::parse("+12") == ExactRat(12));
  CHECK_THROWS_AS(ExactRat::parse("1/0"), MathError);
  CHECK_THROWS_AS(ExactRat::parse("x"), std::invalid_argument);
  CHECK_THROWS(ExactRat(BigInt(1), BigInt(0)));
  CHECK_THROWS_AS(ExactRat(0).inverse(), MathError);
  CHECK(pow(ExactRat(BigInt(2), BigInt(3)), 3) == ExactRat(BigInt(8), BigInt(27)));
}

TEST_CASE("valuations") {
  CHECK(nu(BigInt(2), BigInt(96)) == 5);
  CHECK(nu(BigInt(3), ExactRat(BigInt(2), BigInt(27))) == -3);
  CHECK_THROWS_AS(nu(BigInt(5), BigInt(0)), MathError);
  CHECK(hamming_weight(BigInt(63)) == 6);
  CHECK(hamming_weight(BigInt(0)) == 0);
}

TEST_CASE("modular helpers") {
  CHECK(mod(BigInt(-1), BigInt(7)) == 6);
  CHECK(*inverse_mod(BigInt(3), BigInt(7)) == 5);
  CHECK_FALSE(inverse_mod(BigInt(6), BigInt(9)).has_value());
  CHECK(*residue_mod(ExactRat(BigInt(1), BigInt(2)), BigInt(7)) == 4);
  CHECK_FALSE(residue_mod(ExactRat(BigInt(1), BigInt(7)), BigInt(7)).has_value());
  // 1/s_{5,5} mod 283 and -1/s_{5,5} mod 524287
  const ExactRat inv55(BigInt(-4593988395871875), BigInt(527062321));
  CHECK(*residue_mod(inv55, BigInt(283)) == 146);
  CHECK(*residue_mod(-inv55, BigInt(524287)) == 318975);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(20) == parse_bigint("2432902008176640000"));
}

TEST_CASE("jacobi agrees with Euler's criterion") {
  for (const long p : {3L, 5L, 7L, 37L, 283L, 524287L}) {
    for (long a = -20; a <= 20; ++a) {
      CHECK(jacobi(BigInt(a), BigInt(p)) == oracle::euler_symbol(BigInt(a), BigInt(p)));
    }
  }
}

TEST_CASE("primality and factorization") {
  const auto small = primes_below(1000);
  CHECK(small.size() == 168);
  for (unsigned long n = 0; n < 1000; ++n) {
    const bool listed = std::binary_search(small.begin(), small.end(), n);
    CHECK(is_prime(BigInt(n)) == listed);
  }
  CHECK(is_prime(parse_bigint("26315271553053477373")));
  CHECK(is_prime(parse_bigint("1872341908760688976794226499636304357567811")));
  CHECK_FALSE(is_prime(parse_bigint("87057315354522179184989699791727") * 73));

  const BigInt m = parse_bigint("100500713568783890959555031913261799931478908397894537794155");
  const Factorization f = factor(m);
  REQUIRE(f.complete);
  CHECK(f.value() == m);
  CHECK(f.factors.size() == 8);
  CHECK(f.factors.count(parse_bigint("87057315354522179184989699791727")) == 1);
  CHECK(f.factors.count(BigInt(1226592271)) == 1);

  const Factorization g = factor(BigInt(298665962280));
  CHECK(g.str() == "2^3 * 3^2 * 5 * 7^2 * 31 * 151 * 3617");

  FactorBudget none;
  none.trial_bound = 100;
  none.rho_iterations = 0;
  const Factorization h = factor(BigInt(1000003) * 1000033, none);
  CHECK_FALSE(h.complete);
  CHECK(h.value() == BigInt(1000003) * 1000033);
}

TEST_CASE("Tonelli-Shanks roots square back") {
  auto gen = oracle::rng(11);
  for (const unsigned long p : primes_below(3000)) {
    if (p == 2) continue;
    for (int i = 0; i < 5; ++i) {
      const BigInt a = BigInt(static_cast<unsigned long>(gen() % (p - 1) + 1));
      if (jacobi(a, BigInt(p)) != 1) continue;
      const BigInt r = sqrt_mod_prime(a, BigInt(p));
      CHECK(mod(r * r - a, BigInt(p)) == 0);
    }
  }
}

TEST_CASE("solve_square_mod matches exhaustion for moduli up to 10^6") {
  auto gen = oracle::rng(20240601);
  int solvable = 0;
  for (int i = 0; i < 1000; ++i) {
    // Bias toward smooth moduli and prime powers so Hensel lifting and the
    // 2-adic branch are exercised, not just large primes.
    std::uint64_t m;
    switch (i % 4) {
      case 0: m = gen() % 1'000'000 + 1; break;
      case 1: m = (std::uint64_t{1} << (gen() % 19 + 1)) * (gen() % 3 + 1); break;
      case 2: {
        static const std::uint64_t bases[] = {3, 5, 7, 11, 13};
        const std::uint64_t b = bases[gen() % 5];
        m = b;
        while (m * b <= 1'000'000 && gen() % 4 != 0) m *= b;
        m *= (gen() % 8 + 1);
        break;
      }
      default: m = (gen() % 999 + 1) * (gen() % 999 + 1); break;
    }
    if (m > 1'000'000) m = m % 1'000'000 + 1;
    std::uint64_t c = gen() % m;
    if (i % 5 == 0) {
      const std::uint64_t x = gen() % m;
      c = (x * x) % m;
    }
    const Factorization f = factor(BigInt(static_cast<unsigned long>(m)));
    const SquareModVerdict v = solve_square_mod(BigInt(static_cast<unsigned long>(c)), f);
    const bool truth = oracle::brute_is_square(c, m);
    CHECK_MESSAGE(v.solvable == truth, "c=" << c << " m=" << m);
    if (v.solvable) {
      ++solvable;
      REQUIRE(v.root.has_value());
      const BigInt r = *v.root;
      CHECK(mod(r * r - BigInt(static_cast<unsigned long>(c)), BigInt(static_cast<unsigned long>(m))) == 0);
    }
  }
  CHECK(solvable > 100);
  CHECK(solvable < 1000);
}

TEST_CASE("prime-power verdicts") {
  CHECK_FALSE(solve_square_mod_prime_power(BigInt(3), BigInt(2), 3).solvable);
  CHECK_FALSE(solve_square_mod_prime_power(BigInt(5), BigInt(2), 3).solvable);
  CHECK(solve_square_mod_prime_power(BigInt(1), BigInt(2), 3).solvable);
  CHECK(solve_square_mod_prime_power(BigInt(0), BigInt(7), 4).solvable);
  CHECK_FALSE(solve_square_mod_prime_power(BigInt(7), BigInt(7), 2).solvable);
  CHECK(solve_square_mod_prime_power(BigInt(49), BigInt(7), 3).solvable);
  CHECK_THROWS_AS(solve_square_mod_prime_power(BigInt(1), BigInt(9), 1), MathError);
}
