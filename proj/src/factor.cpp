#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

#include "genusforge/exact.hpp"

namespace genusforge {
namespace {

std::shared_ptr<const std::vector<unsigned long>> trial_primes(unsigned long bound) {
  static std::mutex mu;
  static unsigned long cached_bound = 0;
  static std::shared_ptr<const std::vector<unsigned long>> cached;
  std::lock_guard lock(mu);
  if (bound > cached_bound) {
    cached = std::make_shared<const std::vector<unsigned long>>(primes_below(bound));
    cached_bound = bound;
  }
  return cached;
}

// Brent's cycle finding with batched gcds. Returns a nontrivial factor or
// nothing once `budget` iterations are spent.
std::optional<BigInt> brent_rho(const BigInt& n, unsigned long& budget) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = 1; budget > 0; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const unsigned long todo = std::min({kBatch, r - k, budget});
        for (unsigned long i = 0; i < todo; ++i) {
          step(y);
          BigInt diff = x - y;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget -= todo;
        g = gcd(q, n);
        k += todo;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; replay one step at a time from the saved point.
      do {
        step(ys);
        g = gcd(BigInt(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return std::nullopt;
}

void split(const BigInt& n, Factorization& out, unsigned long& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.factors[n] += 1;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    Factorization half;
    split(root, half, budget);
    for (const auto& [p, e] : half.factors) out.factors[p] += 2 * e;
    if (half.cofactor != 1) {
      out.cofactor *= half.cofactor * half.cofactor;
      out.complete = false;
    }
    return;
  }
  auto d = brent_rho(n, budget);
  if (!d) {
    out.cofactor *= n;
    out.complete = false;
    return;
  }
  split(*d, out, budget);
  split(BigInt(n / *d), out, budget);
}

}  // namespace

BigInt Factorization::value() const {
  BigInt v = cofactor;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

std::string Factorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << '^' << e;
  }
  if (cofactor != 1 || first) {
    if (!first) os << " * ";
    os << cofactor.get_str();
    if (!complete) os << " (unfactored)";
  }
  return os.str();
}

Factorization factor(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw MathError("factor expects a positive integer");
  Factorization out;
  BigInt rest = n;
  const auto primes = trial_primes(budget.trial_bound);
  for (unsigned long p : *primes) {
    if (p >= budget.trial_bound) break;
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.factors[BigInt(p)] = e;
    }
  }
  unsigned long rho_budget = budget.rho_iterations;
  split(rest, out, rho_budget);
  return out;
}

}  // namespace genusforge
