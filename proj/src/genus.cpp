#include "genusforge/genus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "genusforge/bernoulli.hpp"
#include "genusforge/symmetric.hpp"
#include "genusforge/tables.hpp"

namespace genusforge {

namespace {

std::size_t slot(GenusKind kind) { return kind == GenusKind::L ? 0 : 1; }

ExactRat multiplicity_factor(const Partition& p) {
  return ExactRat(BigInt(static_cast<unsigned long>(p.multiplicity_factorial())));
}

// Walks restricted growth strings over the labeled parts, tallying block-sum shapes.
void enumerate_set_partitions(const std::vector<unsigned>& parts, std::size_t next,
                              std::vector<unsigned>& sums,
                              std::map<std::vector<unsigned>, unsigned long long>& tally) {
  if (next == parts.size()) {
    std::vector<unsigned> shape = sums;
    std::sort(shape.begin(), shape.end(), std::greater<>());
    ++tally[shape];
    return;
  }
  for (std::size_t b = 0; b < sums.size(); ++b) {
    sums[b] += parts[next];
    enumerate_set_partitions(parts, next + 1, sums, tally);
    sums[b] -= parts[next];
  }
  sums.push_back(parts[next]);
  enumerate_set_partitions(parts, next + 1, sums, tally);
  sums.pop_back();
}

}  // namespace

GenusSpec GenusSpec::from_name(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "l") return l_genus();
  if (lower == "a" || lower == "ahat") return a_hat();
  throw std::invalid_argument("unknown genus '" + std::string(name) + "'");
}

std::string_view GenusSpec::name() const { return kind_ == GenusKind::L ? "L" : "Ahat"; }

ExactRat GenusSpec::single(unsigned k) const {
  if (k == 0) throw MathError("single-part coefficient needs k >= 1");
  const ExactRat b = bernoulli(2ul * k).abs();
  const ExactRat fact(factorial(2ul * k));
  if (kind_ == GenusKind::L) {
    BigInt four_k = BigInt(1) << (2 * k);
    BigInt factor2 = (BigInt(1) << (2 * k - 1)) - 1;
    return ExactRat(BigInt(four_k * factor2)) * b / fact;
  }
  return -b / (ExactRat(2) * fact);
}

std::vector<ExactRat> characteristic_series(const GenusSpec& g, unsigned degree) {
  // Both series are quotients a(t) / b(t) with b(0) = 1.
  std::vector<ExactRat> a(degree + 1), b(degree + 1);
  for (unsigned n = 0; n <= degree; ++n) {
    if (g.kind() == GenusKind::L) {
      a[n] = ExactRat(1) / ExactRat(factorial(2ul * n));      // cosh(sqrt t)
      b[n] = ExactRat(1) / ExactRat(factorial(2ul * n + 1));  // sinh(sqrt t) / sqrt t
    } else {
      a[n] = n == 0 ? ExactRat(1) : ExactRat(0);
      b[n] = ExactRat(1) / (ExactRat(factorial(2ul * n + 1)) * ExactRat(BigInt(BigInt(1) << (2 * n))));
    }
  }
  std::vector<ExactRat> q(degree + 1);
  for (unsigned n = 0; n <= degree; ++n) {
    ExactRat v = a[n];
    for (unsigned i = 1; i <= n; ++i) v -= b[i] * q[n - i];
    q[n] = v;
  }
  return q;
}

CoarseningCounts GenusEngine::coarsenings(const Partition& index) {
  if (index.length() > kMaxParts) {
    throw MathError("partition " + index.str() + " has more than " + std::to_string(kMaxParts) +
                    " parts");
  }
  {
    std::lock_guard lock(mu_);
    auto it = coarsening_memo_.find(index);
    if (it != coarsening_memo_.end()) return it->second;
  }
  std::map<std::vector<unsigned>, unsigned long long> tally;
  std::vector<unsigned> sums;
  if (!index.empty()) enumerate_set_partitions(index.parts(), 0, sums, tally);
  CoarseningCounts out;
  for (const auto& [shape, count] : tally) out.emplace(Partition(shape), BigInt(static_cast<unsigned long>(count)));
  if (index.empty()) out.emplace(Partition(), BigInt(1));

  std::lock_guard lock(mu_);
  coarsening_memo_.emplace(index, out);
  return out;
}

ExactRat GenusEngine::coefficient(const GenusSpec& g, const Partition& index) {
  if (index.empty()) return ExactRat(1);
  {
    std::lock_guard lock(mu_);
    auto& memo = memo_[slot(g.kind())];
    auto it = memo.find(index);
    if (it != memo.end()) return it->second;
  }
  const CoarseningCounts counts = coarsenings(index);
  ExactRat value(1);
  for (unsigned part : index.parts()) value *= g.single(part);
  for (const auto& [coarse, count] : counts) {
    if (coarse == index) continue;
    value -= ExactRat(count) * multiplicity_factor(coarse) * coefficient(g, coarse);
  }
  value /= multiplicity_factor(index);

  std::lock_guard lock(mu_);
  memo_[slot(g.kind())].emplace(index, value);
  return value;
}

PontryaginPoly GenusEngine::polynomial(const GenusSpec& g, unsigned k) {
  if (k > kMaxParts) {
    throw MathError("weight " + std::to_string(k) + " needs partitions with more than " +
                    std::to_string(kMaxParts) + " parts");
  }
  PontryaginPoly out;
  if (k == 0) return PontryaginPoly::constant(ExactRat(1));
  for (const Partition& index : partitions_of(k)) out.add(index, coefficient(g, index));
  return out;
}

void GenusEngine::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw TableError(TableError::Kind::Io, 0, "cannot write " + path.string());
  std::lock_guard lock(mu_);
  for (GenusKind kind : {GenusKind::L, GenusKind::AHat}) {
    const GenusSpec g = kind == GenusKind::L ? GenusSpec::l_genus() : GenusSpec::a_hat();
    for (const auto& [index, value] : memo_[slot(kind)]) {
      out << g.name() << '\t' << index.str() << '\t' << to_string(value.numer()) << '\t'
          << to_string(value.denom()) << '\n';
    }
  }
}

void GenusEngine::load(const std::filesystem::path& path, bool verify) {
  std::ifstream in(path);
  if (!in) throw TableError(TableError::Kind::Io, 0, "cannot read " + path.string());
  GenusEngine fresh;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<GenusKind, std::pair<Partition, ExactRat>>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string name, index_text, numer, denom, extra;
    if (!std::getline(fields, name, '\t') || !std::getline(fields, index_text, '\t') ||
        !std::getline(fields, numer, '\t') || !std::getline(fields, denom, '\t') ||
        std::getline(fields, extra, '\t')) {
      throw TableError(TableError::Kind::Parse, line_no, "expected four tab-separated fields");
    }
    try {
      const GenusSpec g = GenusSpec::from_name(name);
      const Partition index = Partition::parse(index_text);
      const ExactRat value(parse_bigint(numer), parse_bigint(denom));
      if (verify && fresh.coefficient(g, index) != value) {
        throw TableError(TableError::Kind::Parse, line_no,
                         "cached coefficient for " + std::string(g.name()) + " " + index.str() +
                             " does not match recomputation");
      }
      entries.push_back({g.kind(), {index, value}});
    } catch (const TableError&) {
      throw;
    } catch (const std::exception& e) {
      throw TableError(TableError::Kind::Parse, line_no, e.what());
    }
  }
  std::lock_guard lock(mu_);
  for (const auto& [kind, entry] : entries) memo_[slot(kind)].insert_or_assign(entry.first, entry.second);
}

std::size_t GenusEngine::memo_size() const {
  std::lock_guard lock(mu_);
  return memo_[0].size() + memo_[1].size();
}

GenusEngine& shared_genus_engine() {
  static GenusEngine engine;
  return engine;
}

BigInt coarsening_coefficient(const Partition& fine, const Partition& coarse) {
  const CoarseningCounts counts = shared_genus_engine().coarsenings(fine);
  auto it = counts.find(coarse);
  return it == counts.end() ? BigInt(0) : it->second;
}

ExactRat genus_coefficient(const GenusSpec& g, const Partition& index) {
  return shared_genus_engine().coefficient(g, index);
}

PontryaginPoly genus_polynomial(const GenusSpec& g, unsigned k) {
  return shared_genus_engine().polynomial(g, k);
}

PontryaginPoly naive_genus_polynomial(const GenusSpec& g, unsigned k) {
  if (k > kNaiveOracleMaxWeight) {
    throw MathError("oracle scale exceeded: weight " + std::to_string(k) + " > " +
                    std::to_string(kNaiveOracleMaxWeight));
  }
  if (k == 0) return PontryaginPoly::constant(ExactRat(1));
  const std::vector<ExactRat> q = characteristic_series(g, k);
  SymSeries product = SymSeries::constant(ExactRat(1), k, k);
  for (unsigned j = 0; j < k; ++j) {
    product = product.multiply(SymSeries::univariate(j, q, k, k));
  }
  return elementary_decompose(product).homogeneous(k);
}

bool pair_coefficient_identity_check(const GenusSpec& g, unsigned k) {
  const ExactRat s = g.single(k);
  return genus_coefficient(g, Partition{k, k}) == (s * s - g.single(2 * k)) / ExactRat(2);
}

}  // namespace genusforge
