#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "genusforge/exact.hpp"
#include "genusforge/partition.hpp"
#include "genusforge/pontryagin_poly.hpp"

namespace genusforge {

/// Truncated power series in formal variables u_1..u_N with exact coefficients.
/// Terms of total degree above the truncation are discarded on every operation.
class SymSeries {
 public:
  using Exponent = std::vector<std::uint8_t>;
  using Terms = std::map<Exponent, ExactRat>;

  SymSeries(unsigned var_count, unsigned truncation);

  static SymSeries constant(const ExactRat& c, unsigned var_count, unsigned truncation);
  /// sum_d coeffs[d] u_var^d
  static SymSeries univariate(unsigned var, const std::vector<ExactRat>& coeffs, unsigned var_count,
                              unsigned truncation);
  /// e_i(u_1..u_N)
  static SymSeries elementary(unsigned i, unsigned var_count, unsigned truncation);

  unsigned var_count() const { return var_count_; }
  unsigned truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }

  void add(const Exponent& e, const ExactRat& c);
  ExactRat coefficient(const Exponent& e) const;

  SymSeries& operator+=(const SymSeries& o);
  SymSeries multiply(const SymSeries& o) const;
  SymSeries scaled(const ExactRat& c) const;

  /// Invariant under every adjacent transposition of variables.
  bool is_symmetric() const;

  friend bool operator==(const SymSeries&, const SymSeries&) = default;

 private:
  void check_compatible(const SymSeries& o) const;

  unsigned var_count_;
  unsigned truncation_;
  Terms terms_;
};

/// Rewrites a symmetric series as a polynomial in e_1..e_N, returned with
/// e_i written as p_i. Throws MathError for non-symmetric input.
PontryaginPoly elementary_decompose(const SymSeries& s);

/// Inverse of elementary_decompose: substitutes e_i(u_1..u_N) for p_i.
SymSeries expand_in_variables(const PontryaginPoly& expr, unsigned var_count, unsigned truncation);

/// Pontryagin character of the i-th KO-theory class, truncated at weight w:
/// the coefficient of z^i in prod_j (1 + z g(u_j)) with g(u) = sum_{n>=1} 2 u^n / (2n)!.
PontryaginPoly ko_pontryagin_class(unsigned i, unsigned w);

/// 1 + A_1 + ... + A_w, keeping only monomials whose parts lie in `alive`
/// (all parts when `alive` is empty).
PontryaginPoly ahat_total(unsigned w, const std::set<unsigned>& alive = {});

/// prod_j e_{ko[j]} truncated at weight w, each factor restricted to `alive`.
PontryaginPoly ko_product(const Partition& ko, unsigned w, const std::set<unsigned>& alive = {});

struct LatticeRow {
  std::string label;  // "1", "e5", "e1e7", ...
  Partition ko;       // the e-indices
  PontryaginPoly value;
};

/// Rows e_I * Ahat for every e-monomial of weight <= dim/4, restricted to the
/// classes that survive in dimension `dim`, keeping the top-weight part.
/// Only dim = 32 (alive classes p4, p8) is supported.
std::vector<LatticeRow> spin_lattice_basis(unsigned dim);

/// "1" for the empty partition, else "e" + index per factor in ascending order.
std::string ko_label(const Partition& ko);

}  // namespace genusforge
