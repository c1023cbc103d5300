#include "genusforge/pontryagin_poly.hpp"

#include <algorithm>

namespace genusforge {

PontryaginPoly PontryaginPoly::constant(const ExactRat& c) {
  PontryaginPoly p;
  p.add(Partition(), c);
  return p;
}

PontryaginPoly PontryaginPoly::monomial(const Partition& index, const ExactRat& c) {
  PontryaginPoly p;
  p.add(index, c);
  return p;
}

void PontryaginPoly::add(const Partition& index, const ExactRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExactRat PontryaginPoly::coefficient(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? ExactRat(0) : it->second;
}

unsigned PontryaginPoly::max_weight() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

PontryaginPoly PontryaginPoly::homogeneous(unsigned w) const {
  PontryaginPoly out;
  for (const auto& [index, c] : terms_) {
    if (index.weight() == w) out.terms_.emplace(index, c);
  }
  return out;
}

PontryaginPoly PontryaginPoly::truncated(unsigned w) const {
  PontryaginPoly out;
  for (const auto& [index, c] : terms_) {
    if (index.weight() <= w) out.terms_.emplace(index, c);
  }
  return out;
}

PontryaginPoly& PontryaginPoly::operator+=(const PontryaginPoly& o) {
  for (const auto& [index, c] : o.terms_) add(index, c);
  return *this;
}

PontryaginPoly& PontryaginPoly::operator-=(const PontryaginPoly& o) {
  for (const auto& [index, c] : o.terms_) add(index, -c);
  return *this;
}

PontryaginPoly PontryaginPoly::scaled(const ExactRat& c) const {
  PontryaginPoly out;
  if (c.is_zero()) return out;
  for (const auto& [index, v] : terms_) out.terms_.emplace(index, v * c);
  return out;
}

PontryaginPoly PontryaginPoly::multiply(const PontryaginPoly& o, unsigned max_weight) const {
  PontryaginPoly out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      if (a.weight() + b.weight() > max_weight) continue;
      out.add(a.merged(b), ca * cb);
    }
  }
  return out;
}

std::string monomial_str(const Partition& index) {
  if (index.empty()) return "1";
  std::string out;
  for (const auto& [value, count] : index.multiplicities()) {
    if (!out.empty()) out += ' ';
    out += 'p' + std::to_string(value);
    if (count > 1) out += '^' + std::to_string(count);
  }
  return out;
}

std::string PontryaginPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : terms_) {
    const ExactRat magnitude = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (index.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != ExactRat(1)) out += magnitude.str() + ' ';
      out += monomial_str(index);
    }
  }
  return out;
}

PontryaginPoly restrict(const PontryaginPoly& expr, const std::set<unsigned>& alive) {
  PontryaginPoly out;
  for (const auto& [index, c] : expr.terms()) {
    const bool keep = std::all_of(index.parts().begin(), index.parts().end(),
                                  [&](unsigned part) { return alive.count(part) > 0; });
    if (keep) out.add(index, c);
  }
  return out;
}

}  // namespace genusforge
