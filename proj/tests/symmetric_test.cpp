#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "genusforge/genus.hpp"
#include "genusforge/symmetric.hpp"
#include "oracles.hpp"
#include "published.hpp"

using namespace genusforge;

namespace {

PontryaginPoly random_poly(std::mt19937_64& gen, unsigned max_weight) {
  PontryaginPoly p;
  for (unsigned w = 0; w <= max_weight; ++w) {
    for (const Partition& index : w == 0 ? std::vector<Partition>{Partition{}} : partitions_of(w)) {
      if (gen() % 3 == 0) continue;
      const long num = static_cast<long>(gen() % 41) - 20;
      const long den = static_cast<long>(gen() % 9) + 1;
      p.add(index, ExactRat(BigInt(num), BigInt(den)));
    }
  }
  return p;
}

}  // namespace

TEST_CASE("elementary polynomials expand and decompose") {
  const SymSeries e2 = SymSeries::elementary(2, 4, 6);
  CHECK(e2.is_symmetric());
  CHECK(e2.terms().size() == 6);
  CHECK(elementary_decompose(e2) == PontryaginPoly::monomial(Partition{2}));

  SymSeries lopsided(3, 4);
  lopsided.add({1, 0, 0}, ExactRat(1));
  CHECK_FALSE(lopsided.is_symmetric());
  CHECK_THROWS_AS(elementary_decompose(lopsided), MathError);

  // power sum u1^2 + u2^2 + u3^2 = e1^2 - 2 e2
  SymSeries p2(3, 4);
  p2.add({2, 0, 0}, ExactRat(1));
  p2.add({0, 2, 0}, ExactRat(1));
  p2.add({0, 0, 2}, ExactRat(1));
  PontryaginPoly expect;
  expect.add(Partition{1, 1}, ExactRat(1));
  expect.add(Partition{2}, ExactRat(-2));
  CHECK(elementary_decompose(p2) == expect);
}

TEST_CASE("decompose round trip up to degree 6") {
  auto gen = oracle::rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned degree = trial % 6 + 1;
    const PontryaginPoly p = random_poly(gen, degree);
    const SymSeries s = expand_in_variables(p, degree, degree);
    CHECK(s.is_symmetric());
    CHECK(elementary_decompose(s) == p);
    CHECK(expand_in_variables(elementary_decompose(s), degree, degree) == s);
  }
}

TEST_CASE("symmetrized monomials round trip") {
  auto gen = oracle::rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = trial % 4 + 2;
    SymSeries s(n, 6);
    // orbit sum of a random exponent vector under all permutations
    SymSeries::Exponent e(n, 0);
    unsigned left = gen() % 6 + 1;
    for (unsigned i = 0; i < n && left > 0; ++i) {
      e[i] = static_cast<std::uint8_t>(gen() % (left + 1));
      left -= e[i];
    }
    std::sort(e.begin(), e.end());
    do {
      s.add(e, ExactRat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    REQUIRE(s.is_symmetric());
    CHECK(expand_in_variables(elementary_decompose(s), n, 6) == s);
  }
}

TEST_CASE("KO Pontryagin classes in dimension 32 (e_i in p4, p8)") {
  for (const auto& [label, expected] : published::e_classes()) {
    CHECK_MESSAGE(ko_product(published::ko_of(label), 8, {4, 8}) == expected, label);
  }
}

TEST_CASE("total A-hat up to dimension 32 in p4, p8") {
  CHECK(ahat_total(8, {4, 8}) == published::ahat_total());
  CHECK(ahat_total(2) == PontryaginPoly::constant(ExactRat(1)) + genus_polynomial(GenusSpec::a_hat(), 1) +
                              genus_polynomial(GenusSpec::a_hat(), 2));
}

TEST_CASE("Spin lattice basis in dimension 32") {
  const auto table = published::lattice_rows();
  std::map<std::string, PontryaginPoly> got;
  for (const auto& row : spin_lattice_basis(32)) got[row.label] = row.value;
  for (const auto& [label, expected] : table) {
    REQUIRE_MESSAGE(got.count(label) == 1, label);
    CHECK_MESSAGE(got.at(label) == expected, label);
  }
  // every other row vanishes
  for (const auto& [label, value] : got) {
    if (table.count(label) == 0) CHECK_MESSAGE(value.is_zero(), label);
  }
  CHECK(ko_label(Partition{7, 1}) == "e1e7");
  CHECK_THROWS_AS(spin_lattice_basis(64), MathError);
}
