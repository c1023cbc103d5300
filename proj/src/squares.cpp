#include "genusforge/exact.hpp"

namespace genusforge {
namespace {

BigInt power(const BigInt& p, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// Root of y^2 = u (mod 2^e) for odd u, or nothing.
std::optional<BigInt> sqrt_mod_two_power(const BigInt& u, unsigned e) {
  if (e == 1) return BigInt(1);
  if (e == 2) return mod(u, 4) == 1 ? std::optional<BigInt>(BigInt(1)) : std::nullopt;
  if (mod(u, 8) != 1) return std::nullopt;
  // Invariant: y^2 = u (mod 2^k). Either y or y + 2^(k-1) works mod 2^(k+1).
  BigInt y = 1;
  for (unsigned k = 3; k < e; ++k) {
    const BigInt next = power(2, k + 1);
    if (mod(y * y - u, next) != 0) y += power(2, k - 1);
  }
  return mod(y, power(2, e));
}

// Root of y^2 = u (mod p^e) for odd prime p not dividing u, or nothing.
std::optional<BigInt> sqrt_mod_odd_prime_power(const BigInt& u, const BigInt& p, unsigned e) {
  if (jacobi(u, p) != 1) return std::nullopt;
  const BigInt pe = power(p, e);
  BigInt y = sqrt_mod_prime(mod(u, p), p);
  // Hensel: each Newton step doubles the p-adic precision.
  for (unsigned precision = 1; precision < e; precision *= 2) {
    const BigInt inv = *inverse_mod(2 * y, pe);
    y = mod(y - (y * y - u) * inv, pe);
  }
  return y;
}

}  // namespace

BigInt sqrt_mod_prime(const BigInt& a_in, const BigInt& p) {
  const BigInt a = mod(a_in, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (jacobi(a, p) != 1) throw MathError("not a quadratic residue");
  if (mod(p, 4) == 3) return pow_mod(a, (p + 1) / 4, p);

  BigInt q = p - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (jacobi(z, p) != -1) ++z;

  BigInt c = pow_mod(z, q, p);
  BigInt x = pow_mod(a, (q + 1) / 2, p);
  BigInt t = pow_mod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    BigInt t2 = t;
    while (t2 != 1) {
      t2 = mod(t2 * t2, p);
      ++i;
    }
    BigInt b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    x = mod(x * b, p);
    c = mod(b * b, p);
    t = mod(t * c, p);
    m = i;
  }
  return x;
}

PrimePowerSquareVerdict solve_square_mod_prime_power(const BigInt& c, const BigInt& p, unsigned e) {
  if (e == 0) throw MathError("prime power exponent must be positive");
  if (!is_prime(p)) throw MathError(to_string(p) + " is not prime");
  PrimePowerSquareVerdict out;
  out.prime = p;
  out.exponent = e;
  const BigInt pe = power(p, e);
  out.residue = mod(c, pe);
  if (out.residue == 0) {
    out.solvable = true;
    out.root = BigInt(0);
    return out;
  }
  // c = p^v * u with v < e: need v even and u a square mod p^(e-v).
  const long v = nu(p, out.residue);
  if (v % 2 != 0) return out;
  const BigInt u = out.residue / power(p, static_cast<unsigned>(v));
  const unsigned rest = e - static_cast<unsigned>(v);
  const auto y = (p == 2) ? sqrt_mod_two_power(u, rest) : sqrt_mod_odd_prime_power(u, p, rest);
  if (!y) return out;
  out.solvable = true;
  out.root = mod(*y * power(p, static_cast<unsigned>(v / 2)), pe);
  return out;
}

SquareModVerdict solve_square_mod(const BigInt& c, const Factorization& m) {
  if (!m.complete || m.cofactor != 1) throw MathError("cannot decide without full factorization");
  SquareModVerdict out;
  out.solvable = true;
  BigInt root = 0, modulus = 1;
  for (const auto& [p, e] : m.factors) {
    auto local = solve_square_mod_prime_power(c, p, e);
    if (local.solvable && out.solvable) {
      // CRT merge: root' = root (mod modulus), root' = local.root (mod p^e).
      const BigInt pe = power(p, e);
      const BigInt t = mod((*local.root - root) * *inverse_mod(modulus, pe), pe);
      root += modulus * t;
      modulus *= pe;
    }
    out.solvable = out.solvable && local.solvable;
    out.local.push_back(std::move(local));
  }
  if (out.solvable) out.root = root;
  return out;
}

}  // namespace genusforge
