#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "genusforge/bernoulli.hpp"
#include "oracles.hpp"

using namespace genusforge;

TEST_CASE("small values") {
  CHECK(bernoulli(0) == ExactRat(1));
  CHECK(bernoulli(1) == ExactRat(BigInt(-1), BigInt(2)));
  CHECK(bernoulli(2) == ExactRat(BigInt(1), BigInt(6)));
  CHECK(bernoulli(3) == ExactRat(0));
  CHECK(bernoulli(20) == ExactRat(BigInt(-174611), BigInt(330)));
  CHECK(bernoulli(32).numer() % 37 == 0);
}

TEST_CASE("tangent recurrence agrees with the convolution recurrence") {
  const auto ref = oracle::bernoulli_convolution(200);
  for (unsigned n = 0; n <= 200; ++n) {
    CHECK_MESSAGE(bernoulli(n).raw() == ref[n], "n=" << n);
  }
}

TEST_CASE("von Staudt-Clausen denominators and 2-adic valuation") {
  for (unsigned n = 2; n <= 128; n += 2) {
    CHECK(bernoulli(n).denom() == oracle::staudt_denominator(n));
    CHECK(bernoulli_denominator(n) == oracle::staudt_denominator(n));
    CHECK(nu(BigInt(2), bernoulli(n)) == -1);
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(bernoulli(kBernoulliDirectBudget + 2), BudgetExceeded);
  BernoulliCache small(40);
  CHECK(small.get(40) == bernoulli(40));
  CHECK_THROWS_AS(small.get(42), BudgetExceeded);
}

TEST_CASE("cache round trip and rejection") {
  const auto dir = std::filesystem::temp_directory_path() / "genusforge_bernoulli_test";
  std::filesystem::create_directories(dir);
  BernoulliCache a;
  a.get(60);
  a.save(dir / "b.tsv");
  BernoulliCache b;
  b.load(dir / "b.tsv", true);
  CHECK(b.max_cached() == a.max_cached());
  CHECK(b.get(58) == bernoulli(58));

  {
    std::ofstream out(dir / "bad.tsv");
    out << "0\t1\t1\n1\t-1\t2\n2\t1\t7\n";
  }
  BernoulliCache c;
  CHECK_THROWS_AS(c.load(dir / "bad.tsv", true), TableError);
  {
    std::ofstream out(dir / "odd.tsv");
    out << "0\t1\t1\n1\t-1\t2\n3\t0\t1\n";
  }
  CHECK_THROWS_AS(c.load(dir / "odd.tsv", false), TableError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("numerator divisibility") {
  CHECK(numerator_divisibility(BigInt(283), 20) == Divisibility::Divides);
  CHECK(numerator_divisibility(BigInt(617), 20) == Divisibility::Divides);
  CHECK(numerator_divisibility(BigInt(37), 32) == Divisibility::Divides);
  CHECK(numerator_divisibility(BigInt(37), 30) == Divisibility::DoesNotDivide);
  // p - 1 | n: p sits in the denominator
  CHECK(numerator_divisibility(BigInt(11), 20) == Divisibility::DoesNotDivide);
  CHECK(numerator_divisibility(BigInt(502261), 8192) == Divisibility::Unknown);
  CHECK(numerator_divisibility(BigInt(502261), 8192, {load_bundled_table()}) == Divisibility::Divides);
}
