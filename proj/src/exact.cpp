#include "genusforge/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace genusforge {

ExactRat::ExactRat(const BigInt& numer, const BigInt& denom) {
  if (denom == 0) throw MathError("zero denominator");
  q_ = mpq_class(numer, denom);
  q_.canonicalize();
}

ExactRat::ExactRat(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw MathError("zero denominator");
  q_.canonicalize();
}

ExactRat ExactRat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(parse_bigint(text));
  return ExactRat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

ExactRat ExactRat::abs() const { return ExactRat(mpq_class(::abs(q_))); }

ExactRat ExactRat::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return ExactRat(q_.get_den(), q_.get_num());
}

std::string ExactRat::str() const { return q_.get_str(); }

ExactRat& ExactRat::operator+=(const ExactRat& o) {
  q_ += o.q_;
  return *this;
}
ExactRat& ExactRat::operator-=(const ExactRat& o) {
  q_ -= o.q_;
  return *this;
}
ExactRat& ExactRat::operator*=(const ExactRat& o) {
  q_ *= o.q_;
  return *this;
}
ExactRat& ExactRat::operator/=(const ExactRat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  q_ /= o.q_;
  return *this;
}

ExactRat pow(const ExactRat& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.numer().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.denom().get_mpz_t(), exponent);
  return ExactRat(n, d);
}

std::ostream& operator<<(std::ostream& os, const ExactRat& q) { return os << q.str(); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<long>(digits_from), s.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(s, 10);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt mod(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw MathError("modulus must be positive");
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<BigInt> inverse_mod(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw MathError("modulus must be positive");
  if (m == 1) return BigInt(0);
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

std::optional<BigInt> residue_mod(const ExactRat& q, const BigInt& m) {
  auto inv = inverse_mod(q.denom(), m);
  if (!inv) return std::nullopt;
  return mod(q.numer() * *inv, m);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt pow_mod(const BigInt& base, const BigInt& exponent, const BigInt& m) {
  if (m <= 0) throw MathError("modulus must be positive");
  if (exponent < 0) throw MathError("negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long hamming_weight(const BigInt& x) {
  if (x < 0) throw MathError("hamming weight of a negative integer");
  return mpz_popcount(x.get_mpz_t());
}

long nu(const BigInt& p, const BigInt& n) {
  if (n == 0) throw MathError("valuation of zero undefined");
  if (p < 2) throw MathError("valuation base must be a prime");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long nu(const BigInt& p, const ExactRat& q) {
  if (q.is_zero()) throw MathError("valuation of zero undefined");
  return nu(p, q.numer()) - nu(p, q.denom());
}

int jacobi(const BigInt& a, const BigInt& n) {
  if (n < 1 || mpz_even_p(n.get_mpz_t())) throw MathError("jacobi symbol needs an odd positive modulus");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  // GMP runs BPSW first; 40 extra Miller-Rabin rounds push the error below 4^-64.
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

std::vector<unsigned long> primes_below(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (unsigned long i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace genusforge
