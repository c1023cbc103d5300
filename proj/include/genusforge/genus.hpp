#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string_view>
#include <utility>
#include <vector>

#include "genusforge/exact.hpp"
#include "genusforge/partition.hpp"
#include "genusforge/pontryagin_poly.hpp"

namespace genusforge {

enum class GenusKind { L, AHat };

/// A multiplicative sequence, determined by its single-part coefficients.
class GenusSpec {
 public:
  static GenusSpec l_genus() { return GenusSpec(GenusKind::L); }
  static GenusSpec a_hat() { return GenusSpec(GenusKind::AHat); }
  /// "L", "A", "Ahat" (case-insensitive).
  static GenusSpec from_name(std::string_view name);

  GenusKind kind() const { return kind_; }
  /// "L" or "Ahat"; used as the cache-file label.
  std::string_view name() const;

  /// Coefficient of p_k in the k-th polynomial:
  ///   L:    2^(2k) (2^(2k-1) - 1) |B_2k| / (2k)!
  ///   Ahat: -|B_2k| / (2 (2k)!)
  ExactRat single(unsigned k) const;

  friend bool operator==(const GenusSpec&, const GenusSpec&) = default;

 private:
  explicit GenusSpec(GenusKind kind) : kind_(kind) {}
  GenusKind kind_;
};

/// Coefficients of the characteristic power series Q(t) up to t^degree,
/// obtained by exact series division, independently of Bernoulli numbers:
///   L:    sqrt(t) / tanh(sqrt(t))
///   Ahat: (sqrt(t)/2) / sinh(sqrt(t)/2)
std::vector<ExactRat> characteristic_series(const GenusSpec& g, unsigned degree);

using CoarseningCounts = std::map<Partition, BigInt, PartitionOrder>;

/// Memoized genus coefficients s_I (L) and a_I (Ahat).
///
/// s_I = (1 / prod mu(i)!) * (prod s_i^mu(i) - sum_{J > I} a_J prod mu(j)! s_J)
///
/// where J runs over proper coarsenings of I and a_J counts the set
/// partitions of the labeled parts of I whose block sums give J. Memo tables
/// are guarded; no lock is held while recursing.
class GenusEngine {
 public:
  /// Set-partition enumeration is Bell(r); r is capped to keep it desk-scale.
  static constexpr std::size_t kMaxParts = 12;

  ExactRat coefficient(const GenusSpec& g, const Partition& index);
  PontryaginPoly polynomial(const GenusSpec& g, unsigned k);
  /// a_J for every J >= I (including J = I, where a_I = 1).
  CoarseningCounts coarsenings(const Partition& index);

  /// Lines "genus<TAB>i1,i2,...<TAB>numer<TAB>denom".
  void save(const std::filesystem::path& path) const;
  /// Merges the file into the memo; with `verify` each entry is recomputed.
  void load(const std::filesystem::path& path, bool verify);
  std::size_t memo_size() const;

 private:
  mutable std::mutex mu_;
  std::map<Partition, CoarseningCounts, PartitionOrder> coarsening_memo_;
  // Indexed by GenusKind.
  std::map<Partition, ExactRat, PartitionOrder> memo_[2];
};

GenusEngine& shared_genus_engine();

BigInt coarsening_coefficient(const Partition& fine, const Partition& coarse);
ExactRat genus_coefficient(const GenusSpec& g, const Partition& index);
PontryaginPoly genus_polynomial(const GenusSpec& g, unsigned k);

/// Oracle: expand prod_j Q(t_j) in k variables, truncate at degree k and
/// rewrite in elementary symmetric polynomials. Limited to k <= 8.
PontryaginPoly naive_genus_polynomial(const GenusSpec& g, unsigned k);
inline constexpr unsigned kNaiveOracleMaxWeight = 8;

/// genus_coefficient(g, (k,k)) == (single(k)^2 - single(2k)) / 2
bool pair_coefficient_identity_check(const GenusSpec& g, unsigned k);

}  // namespace genusforge
