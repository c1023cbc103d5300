#include "genusforge/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "genusforge/genus.hpp"

namespace genusforge {

namespace {

unsigned degree(const SymSeries::Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool non_increasing(const SymSeries::Exponent& e) {
  return std::is_sorted(e.begin(), e.end(), std::greater<>());
}

using IntTerms = std::map<SymSeries::Exponent, long long>;

IntTerms multiply_int(const IntTerms& a, const IntTerms& b) {
  IntTerms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      SymSeries::Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out[e] += ca * cb;
    }
  }
  return out;
}

IntTerms elementary_int(unsigned i, unsigned n) {
  IntTerms out;
  if (i > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + i, true);
  do {
    SymSeries::Exponent e(n);
    for (unsigned j = 0; j < n; ++j) e[j] = pick[j] ? 1 : 0;
    out[e] = 1;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// e_P(u_1..u_n) with integer coefficients; memoized since decomposition and
// expansion hit the same products repeatedly.
const IntTerms& elementary_product(const Partition& p, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::vector<unsigned>>, IntTerms> memo;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(n, p.parts());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  IntTerms acc;
  acc[SymSeries::Exponent(n, 0)] = 1;
  for (unsigned part : p.parts()) acc = multiply_int(acc, elementary_int(part, n));
  return memo.emplace(key, std::move(acc)).first->second;
}

// Partition whose conjugate is the exponent: part i appears alpha_i - alpha_{i+1} times.
Partition leading_partition(const SymSeries::Exponent& alpha) {
  std::vector<unsigned> parts;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const unsigned next = i + 1 < alpha.size() ? alpha[i + 1] : 0;
    for (unsigned c = next; c < alpha[i]; ++c) parts.push_back(static_cast<unsigned>(i + 1));
  }
  return Partition(std::move(parts));
}

}  // namespace

SymSeries::SymSeries(unsigned var_count, unsigned truncation)
    : var_count_(var_count), truncation_(truncation) {
  if (truncation > 255) throw MathError("truncation degree too large");
}

SymSeries SymSeries::constant(const ExactRat& c, unsigned var_count, unsigned truncation) {
  SymSeries s(var_count, truncation);
  s.add(Exponent(var_count, 0), c);
  return s;
}

SymSeries SymSeries::univariate(unsigned var, const std::vector<ExactRat>& coeffs, unsigned var_count,
                                unsigned truncation) {
  if (var >= var_count) throw std::out_of_range("variable index out of range");
  SymSeries s(var_count, truncation);
  for (std::size_t d = 0; d < coeffs.size() && d <= truncation; ++d) {
    Exponent e(var_count, 0);
    e[var] = static_cast<std::uint8_t>(d);
    s.add(e, coeffs[d]);
  }
  return s;
}

SymSeries SymSeries::elementary(unsigned i, unsigned var_count, unsigned truncation) {
  SymSeries s(var_count, truncation);
  for (const auto& [e, c] : elementary_int(i, var_count)) s.add(e, ExactRat(c));
  return s;
}

void SymSeries::add(const Exponent& e, const ExactRat& c) {
  if (e.size() != var_count_) throw std::invalid_argument("exponent length does not match variable count");
  if (c.is_zero() || degree(e) > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExactRat SymSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactRat(0) : it->second;
}

void SymSeries::check_compatible(const SymSeries& o) const {
  if (var_count_ != o.var_count_ || truncation_ != o.truncation_) {
    throw std::invalid_argument("series live in different rings");
  }
}

SymSeries& SymSeries::operator+=(const SymSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

SymSeries SymSeries::multiply(const SymSeries& o) const {
  check_compatible(o);
  SymSeries out(var_count_, truncation_);
  Exponent e(var_count_);
  for (const auto& [ea, ca] : terms_) {
    const unsigned da = degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + degree(eb) > truncation_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add(e, ca * cb);
    }
  }
  return out;
}

SymSeries SymSeries::scaled(const ExactRat& c) const {
  SymSeries out(var_count_, truncation_);
  for (const auto& [e, v] : terms_) out.add(e, v * c);
  return out;
}

bool SymSeries::is_symmetric() const {
  for (unsigned i = 0; i + 1 < var_count_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponent swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (coefficient(swapped) != c) return false;
    }
  }
  return true;
}

PontryaginPoly elementary_decompose(const SymSeries& s) {
  if (!s.is_symmetric()) throw MathError("series is not symmetric");
  const unsigned n = s.var_count();
  SymSeries::Terms work;
  for (const auto& [e, c] : s.terms()) {
    if (non_increasing(e)) work.emplace(e, c);
  }
  PontryaginPoly out;
  while (!work.empty()) {
    const auto top = std::prev(work.end());
    const SymSeries::Exponent alpha = top->first;
    const ExactRat c = top->second;
    const Partition lead = leading_partition(alpha);
    out.add(lead, c);
    for (const auto& [e, k] : elementary_product(lead, n)) {
      if (!non_increasing(e)) continue;
      auto [it, inserted] = work.try_emplace(e, ExactRat(0));
      it->second -= c * ExactRat(k);
      if (it->second.is_zero()) work.erase(it);
    }
  }
  return out;
}

SymSeries expand_in_variables(const PontryaginPoly& expr, unsigned var_count, unsigned truncation) {
  SymSeries out(var_count, truncation);
  for (const auto& [index, c] : expr.terms()) {
    if (index.weight() > truncation) continue;
    if (!index.empty() && index.parts().front() > var_count) continue;  // e_i = 0 for i > N
    for (const auto& [e, k] : elementary_product(index, var_count)) out.add(e, c * ExactRat(k));
  }
  return out;
}

PontryaginPoly ko_pontryagin_class(unsigned i, unsigned w) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<PontryaginPoly>> memo;  // w -> classes 0..w
  if (i > w) return {};
  {
    std::lock_guard lock(mu);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second[i];
  }
  std::vector<ExactRat> g(w + 1);
  for (unsigned n = 1; n <= w; ++n) g[n] = ExactRat(2) / ExactRat(factorial(2ul * n));
  // sigma[m] accumulates e_m(g(u_1), ..., g(u_j)).
  std::vector<SymSeries> sigma(w + 1, SymSeries(w, w));
  sigma[0] = SymSeries::constant(ExactRat(1), w, w);
  for (unsigned j = 0; j < w; ++j) {
    const SymSeries gj = SymSeries::univariate(j, g, w, w);
    for (unsigned m = std::min(w, j + 1); m >= 1; --m) sigma[m] += sigma[m - 1].multiply(gj);
  }
  std::vector<PontryaginPoly> classes;
  for (const SymSeries& s : sigma) classes.push_back(elementary_decompose(s));
  std::lock_guard lock(mu);
  memo.emplace(w, classes);
  return classes[i];
}

PontryaginPoly ahat_total(unsigned w, const std::set<unsigned>& alive) {
  const GenusSpec g = GenusSpec::a_hat();
  PontryaginPoly out = PontryaginPoly::constant(ExactRat(1));
  for (unsigned k = 1; k <= w; ++k) {
    for (const Partition& index : partitions_of(k)) {
      const bool keep = alive.empty() || std::all_of(index.parts().begin(), index.parts().end(),
                                                     [&](unsigned p) { return alive.count(p) > 0; });
      if (keep) out.add(index, genus_coefficient(g, index));
    }
  }
  return out;
}

PontryaginPoly ko_product(const Partition& ko, unsigned w, const std::set<unsigned>& alive) {
  PontryaginPoly out = PontryaginPoly::constant(ExactRat(1));
  for (unsigned i : ko.parts()) {
    PontryaginPoly factor = ko_pontryagin_class(i, w);
    if (!alive.empty()) factor = restrict(factor, alive);
    out = out.multiply(factor, w);
  }
  return out;
}

std::string ko_label(const Partition& ko) {
  if (ko.empty()) return "1";
  std::string out;
  for (auto it = ko.parts().rbegin(); it != ko.parts().rend(); ++it) out += "e" + std::to_string(*it);
  return out;
}

std::vector<LatticeRow> spin_lattice_basis(unsigned dim) {
  if (dim != 32) {
    throw MathError("only the dim-32 instance is specified");
  }
  const unsigned w = dim / 4;
  const std::set<unsigned> alive{4, 8};
  const PontryaginPoly ahat = ahat_total(w, alive);
  std::vector<LatticeRow> rows;
  for (unsigned weight = 0; weight <= w; ++weight) {
    for (const Partition& ko : partitions_of(weight)) {
      const PontryaginPoly value = ko_product(ko, w, alive).multiply(ahat, w).homogeneous(w);
      rows.push_back({ko_label(ko), ko, value});
    }
  }
  return rows;
}

}  // namespace genusforge
