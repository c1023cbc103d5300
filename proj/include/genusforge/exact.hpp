#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace genusforge {

using BigInt = mpz_class;

/// Raised for mathematically undefined requests (zero valuation, bad moduli, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reduced fraction numer/denom with denom >= 1. Zero is 0/1.
class ExactRat {
 public:
  ExactRat() = default;
  ExactRat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRat(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRat(const BigInt& numer, const BigInt& denom);
  explicit ExactRat(const mpq_class& q);

  /// Accepts "a", "a/b", with optional leading sign.
  static ExactRat parse(std::string_view text);

  BigInt numer() const { return q_.get_num(); }
  BigInt denom() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  ExactRat abs() const;
  ExactRat inverse() const;

  std::string str() const;

  ExactRat& operator+=(const ExactRat& o);
  ExactRat& operator-=(const ExactRat& o);
  ExactRat& operator*=(const ExactRat& o);
  ExactRat& operator/=(const ExactRat& o);

  friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
  friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
  friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
  friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }
  friend ExactRat operator-(const ExactRat& a) { return ExactRat(mpq_class(-a.q_)); }

  friend bool operator==(const ExactRat& a, const ExactRat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

ExactRat pow(const ExactRat& base, unsigned exponent);
std::ostream& operator<<(std::ostream& os, const ExactRat& q);

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& n);

/// Least nonnegative residue of a modulo m (m > 0).
BigInt mod(const BigInt& a, const BigInt& m);
std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m);
/// Image of q in Z/m; empty when denom(q) is not invertible mod m.
std::optional<BigInt> residue_mod(const ExactRat& q, const BigInt& m);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow_mod(const BigInt& base, const BigInt& exponent, const BigInt& m);

/// Number of set bits of x >= 0.
unsigned long hamming_weight(const BigInt& x);

/// p-adic valuation; throws MathError on zero.
long nu(const BigInt& p, const BigInt& n);
long nu(const BigInt& p, const ExactRat& q);

/// Jacobi symbol (a | n) for odd n >= 1.
int jacobi(const BigInt& a, const BigInt& n);

/// Deterministic below 2^64 (BPSW), probabilistic with error < 2^-128 above.
bool is_prime(const BigInt& n);

/// Primes below `bound` in increasing order (sieve of Eratosthenes).
std::vector<unsigned long> primes_below(unsigned long bound);

// ---------------------------------------------------------------------------
// Factorization

struct FactorBudget {
  unsigned long trial_bound = 1'000'000;
  unsigned long rho_iterations = 10'000'000;
};

struct Factorization {
  std::map<BigInt, unsigned> factors;
  BigInt cofactor = 1;
  bool complete = true;

  /// Product of prime powers times the cofactor.
  BigInt value() const;
  std::string str() const;
};

/// Trial division, then Brent's variant of Pollard rho within the budget.
/// `complete` is false when a composite cofactor could not be split.
Factorization factor(const BigInt& n, const FactorBudget& budget = {});

// ---------------------------------------------------------------------------
// Square roots modulo prime powers and composite moduli

struct PrimePowerSquareVerdict {
  BigInt prime;
  unsigned exponent = 1;
  BigInt residue;  // c mod p^e
  bool solvable = false;
  std::optional<BigInt> root;
};

struct SquareModVerdict {
  bool solvable = false;
  std::optional<BigInt> root;  // CRT-combined witness modulo m
  std::vector<PrimePowerSquareVerdict> local;
};

/// Decides x^2 = c (mod p^e) and returns a root when one exists.
PrimePowerSquareVerdict solve_square_mod_prime_power(const BigInt& c, const BigInt& p, unsigned e);

/// Decides x^2 = c (mod m) from a complete factorization of m.
SquareModVerdict solve_square_mod(const BigInt& c, const Factorization& m);

/// Tonelli-Shanks for odd prime p and quadratic residue a (p does not divide a).
BigInt sqrt_mod_prime(const BigInt& a, const BigInt& p);

}  // namespace genusforge
