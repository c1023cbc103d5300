#pragma once

#include <map>
#include <set>
#include <string>

#include "genusforge/exact.hpp"
#include "genusforge/partition.hpp"

namespace genusforge {

/// Exact polynomial in Pontryagin classes p_1, p_2, ... with p_i of weight i.
/// Terms are keyed by partition (I <-> p_I); zero coefficients are never stored.
class PontryaginPoly {
 public:
  using Terms = std::map<Partition, ExactRat, PartitionOrder>;

  PontryaginPoly() = default;
  static PontryaginPoly constant(const ExactRat& c);
  /// c * p_i
  static PontryaginPoly monomial(const Partition& index, const ExactRat& c = ExactRat(1));

  void add(const Partition& index, const ExactRat& c);
  ExactRat coefficient(const Partition& index) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest weight present (0 for constants and the zero polynomial).
  unsigned max_weight() const;

  /// Weight-w part only.
  PontryaginPoly homogeneous(unsigned w) const;
  /// Drops every term of weight > w.
  PontryaginPoly truncated(unsigned w) const;

  PontryaginPoly& operator+=(const PontryaginPoly& o);
  PontryaginPoly& operator-=(const PontryaginPoly& o);
  friend PontryaginPoly operator+(PontryaginPoly a, const PontryaginPoly& b) { return a += b; }
  friend PontryaginPoly operator-(PontryaginPoly a, const PontryaginPoly& b) { return a -= b; }
  PontryaginPoly scaled(const ExactRat& c) const;
  /// Product truncated at `max_weight`.
  PontryaginPoly multiply(const PontryaginPoly& o, unsigned max_weight) const;

  friend bool operator==(const PontryaginPoly&, const PontryaginPoly&) = default;

  /// "7/45 p2 - 1/45 p1^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  Terms terms_;
};

using PontryaginExpr = PontryaginPoly;

/// Drops every term whose partition uses a part outside `alive`.
PontryaginPoly restrict(const PontryaginPoly& expr, const std::set<unsigned>& alive);

/// "p4^2", "p2 p1^2", "1" for the empty partition.
std::string monomial_str(const Partition& index);

}  // namespace genusforge
