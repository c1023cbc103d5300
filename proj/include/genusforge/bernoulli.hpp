#pragma once

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "genusforge/exact.hpp"
#include "genusforge/tables.hpp"

namespace genusforge {

/// Indices above this are never computed directly; callers fall back to tables.
inline constexpr unsigned long kBernoulliDirectBudget = 4096;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact Bernoulli numbers with B_1 = -1/2 and B_2 = 1/6.
///
/// Even-index values come from the tangent-number recurrence, which fills a
/// whole prefix in O(n^2) word-by-bignum operations with no gcds. Odd indices
/// above 1 are zero and never stored. Reads after a fill are concurrent; fills
/// take the writer lock.
class BernoulliCache {
 public:
  explicit BernoulliCache(unsigned long budget = kBernoulliDirectBudget);

  /// B_n; throws BudgetExceeded when n is past the direct budget.
  ExactRat get(unsigned long n);
  unsigned long budget() const { return budget_; }
  /// Largest even index currently held.
  unsigned long max_cached() const;

  /// Lines "n<TAB>numer<TAB>denom" with n strictly increasing, B_0 and B_1
  /// included, odd indices above 1 omitted.
  void save(const std::filesystem::path& path) const;
  /// Replaces the contents with the file's prefix. With `verify`, every entry
  /// is recomputed and compared; a mismatch throws TableError.
  void load(const std::filesystem::path& path, bool verify);

 private:
  void fill_to(unsigned long half_index);

  unsigned long budget_;
  mutable std::shared_mutex mu_;
  std::vector<ExactRat> even_;  // even_[i] = B_{2i}
};

BernoulliCache& shared_bernoulli_cache();

ExactRat bernoulli(unsigned long n);

/// Product of the primes p with (p - 1) | n, i.e. denom(B_n), for even n >= 2.
BigInt bernoulli_denominator(unsigned long n);

/// Whether p divides numer(B_n) for even n. Exact inside the direct budget
/// (or when p - 1 | n); otherwise answered by the tables, else Unknown.
Divisibility numerator_divisibility(const BigInt& p, unsigned long n,
                                    const std::vector<IrregularPairTable>& tables = {});

}  // namespace genusforge
