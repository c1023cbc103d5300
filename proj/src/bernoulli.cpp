#include "genusforge/bernoulli.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace genusforge {
namespace {

// Tangent numbers T_1..T_m (T_1 = 1, T_2 = 2, T_3 = 16, ...), in place.
std::vector<BigInt> tangent_numbers(unsigned long m) {
  std::vector<BigInt> t(m + 1);
  if (m == 0) return t;
  t[1] = 1;
  for (unsigned long k = 2; k <= m; ++k) t[k] = t[k - 1] * (k - 1);
  for (unsigned long k = 2; k <= m; ++k) {
    for (unsigned long j = k; j <= m; ++j) {
      t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
    }
  }
  return t;
}

}  // namespace

BernoulliCache::BernoulliCache(unsigned long budget) : budget_(budget) {
  even_.emplace_back(1);
}

unsigned long BernoulliCache::max_cached() const {
  std::shared_lock lock(mu_);
  return 2 * (even_.size() - 1);
}

void BernoulliCache::fill_to(unsigned long half_index) {
  std::unique_lock lock(mu_);
  if (half_index < even_.size()) return;
  // Round up so that walking n = 2, 4, 6, ... does not refill every step.
  const unsigned long target = std::min(std::max(half_index, 2 * even_.size()), budget_ / 2);
  const auto t = tangent_numbers(target);
  // B_{2n} = (-1)^(n-1) 2n T_n / (4^n (4^n - 1))
  std::vector<ExactRat> fresh;
  fresh.reserve(target + 1);
  fresh.emplace_back(1);
  for (unsigned long n = 1; n <= target; ++n) {
    BigInt four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
    BigInt numer = t[n] * (2 * n);
    if (n % 2 == 0) numer = -numer;
    fresh.emplace_back(numer, BigInt(four_n * (four_n - 1)));
  }
  even_ = std::move(fresh);
}

ExactRat BernoulliCache::get(unsigned long n) {
  if (n == 1) return ExactRat(BigInt(-1), BigInt(2));
  if (n % 2 == 1) return ExactRat(0);
  if (n > budget_) {
    throw BudgetExceeded("B_" + std::to_string(n) + " is beyond the direct budget of " +
                         std::to_string(budget_));
  }
  {
    std::shared_lock lock(mu_);
    if (n / 2 < even_.size()) return even_[n / 2];
  }
  fill_to(n / 2);
  std::shared_lock lock(mu_);
  return even_[n / 2];
}

void BernoulliCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw TableError(TableError::Kind::Io, 0, "cannot write " + path.string());
  std::shared_lock lock(mu_);
  for (unsigned long i = 0; i < even_.size(); ++i) {
    out << 2 * i << '\t' << even_[i].numer().get_str() << '\t' << even_[i].denom().get_str() << '\n';
    if (i == 0) out << "1\t-1\t2\n";
  }
}

void BernoulliCache::load(const std::filesystem::path& path, bool verify) {
  std::ifstream in(path);
  if (!in) throw TableError(TableError::Kind::Io, 0, "cannot open " + path.string());
  std::vector<ExactRat> loaded;
  std::string line;
  std::size_t line_no = 0;
  long previous = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string n_text, numer_text, denom_text;
    if (!std::getline(fields, n_text, '\t') || !std::getline(fields, numer_text, '\t') ||
        !std::getline(fields, denom_text)) {
      throw TableError(TableError::Kind::Parse, line_no, "expected n<TAB>numer<TAB>denom");
    }
    ExactRat value;
    long n = 0;
    try {
      n = std::stol(n_text);
      value = ExactRat(parse_bigint(numer_text), parse_bigint(denom_text));
    } catch (const std::exception& e) {
      throw TableError(TableError::Kind::Parse, line_no, e.what());
    }
    if (n <= previous) throw TableError(TableError::Kind::Order, line_no, "indices must strictly increase");
    previous = n;
    if (n == 1) {
      if (value != ExactRat(BigInt(-1), BigInt(2))) {
        throw TableError(TableError::Kind::Parse, line_no, "B_1 must be -1/2");
      }
      continue;
    }
    if (n % 2 == 1) throw TableError(TableError::Kind::OddIndex, line_no, "odd index stored");
    if (static_cast<std::size_t>(n / 2) != loaded.size()) {
      throw TableError(TableError::Kind::Order, line_no, "cache is not a contiguous prefix");
    }
    loaded.push_back(std::move(value));
  }
  if (loaded.empty()) return;
  if (2 * (loaded.size() - 1) > budget_) {
    throw TableError(TableError::Kind::Order, 0, "cache extends past the direct budget");
  }
  if (verify) {
    BernoulliCache fresh(budget_);
    for (std::size_t i = 0; i < loaded.size(); ++i) {
      if (fresh.get(2 * i) != loaded[i]) {
        throw TableError(TableError::Kind::Parse, 0,
                         "cached B_" + std::to_string(2 * i) + " does not match the recurrence");
      }
    }
  }
  std::unique_lock lock(mu_);
  if (loaded.size() > even_.size()) even_ = std::move(loaded);
}

BernoulliCache& shared_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

ExactRat bernoulli(unsigned long n) { return shared_bernoulli_cache().get(n); }

BigInt bernoulli_denominator(unsigned long n) {
  if (n == 0 || n % 2 == 1) throw MathError("bernoulli_denominator expects an even positive index");
  BigInt product = 1;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    // lcm keeps each prime once when d = n / d.
    for (unsigned long divisor : {d, n / d}) {
      if (is_prime(BigInt(divisor + 1))) product = lcm(product, BigInt(divisor + 1));
    }
  }
  return product;
}

Divisibility numerator_divisibility(const BigInt& p, unsigned long n,
                                    const std::vector<IrregularPairTable>& tables) {
  if (n % 2 == 1) throw MathError("numerator_divisibility expects an even index");
  if (n == 0) return Divisibility::DoesNotDivide;
  // p - 1 | n puts p in the denominator, so it cannot divide the reduced numerator.
  if (p < 2) throw MathError("numerator_divisibility expects a prime");
  if (BigInt(p - 1) <= n && n % BigInt(p - 1).get_ui() == 0) return Divisibility::DoesNotDivide;
  auto& cache = shared_bernoulli_cache();
  if (n <= cache.budget()) {
    return mpz_divisible_p(cache.get(n).numer().get_mpz_t(), p.get_mpz_t()) ? Divisibility::Divides
                                                                              : Divisibility::DoesNotDivide;
  }
  return query(tables, p, n);
}

}  // namespace genusforge
