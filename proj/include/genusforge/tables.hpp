#pragma once

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genusforge/exact.hpp"

namespace genusforge {

enum class Divisibility { Divides, DoesNotDivide, Unknown };
std::string_view to_string(Divisibility d);

/// Malformed table or cache file; `line` is 1-based (0 when not line-specific).
class TableError : public std::runtime_error {
 public:
  enum class Kind { Io, Parse, CompositePrime, OddIndex, Order };
  TableError(Kind kind, std::size_t line, const std::string& what);
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Irregular pairs (p, n): p divides the numerator of B_n.
///
/// Text format, one record per line:
///
///     #complete-to N      every pair with index <= N is listed
///     #source TEXT        free-form provenance
///     p n                 p divides numer(B_n)
///     !p n                p does not divide numer(B_n) (explicitly sourced)
///
/// Lines starting with '#' other than the two directives are comments.
class IrregularPairTable {
 public:
  IrregularPairTable() = default;

  void add_pair(const BigInt& p, unsigned long n);
  void add_non_divisor(const BigInt& p, unsigned long n);
  void set_complete_to(unsigned long n) { complete_to_ = n; }
  void set_source(std::string s) { source_ = std::move(s); }

  /// Answers only what the table can back up; "does-not-divide" requires an
  /// explicit negative record or a completeness horizon covering n.
  Divisibility query(const BigInt& p, unsigned long n) const;

  const std::set<std::pair<BigInt, unsigned long>>& pairs() const { return pairs_; }
  const std::set<std::pair<BigInt, unsigned long>>& non_divisors() const { return non_divisors_; }
  unsigned long complete_to() const { return complete_to_; }
  /// Largest index about which the table can say anything.
  unsigned long max_index_covered() const;
  const std::string& source() const { return source_; }

  std::string serialize() const;

 private:
  std::set<std::pair<BigInt, unsigned long>> pairs_;
  std::set<std::pair<BigInt, unsigned long>> non_divisors_;
  unsigned long complete_to_ = 0;
  std::string source_;
};

IrregularPairTable parse_table(std::string_view text);
IrregularPairTable load_table(const std::filesystem::path& path);
void save_table(const IrregularPairTable& table, const std::filesystem::path& path);
Divisibility query(const IrregularPairTable& table, const BigInt& p, unsigned long n);
/// First definite answer among several tables. Contradicting tables throw.
Divisibility query(const std::vector<IrregularPairTable>& tables, const BigInt& p, unsigned long n);

/// Location of the data files shipped with the library.
std::filesystem::path bundled_data_dir();
IrregularPairTable load_bundled_table();

}  // namespace genusforge
