#include "genusforge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace genusforge {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) {
    throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(' ');
    token = first == std::string::npos ? "" : token.substr(first, token.find_last_not_of(' ') - first + 1);
    if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit) || token.size() > 6) {
      throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(token)));
  }
  if (parts.empty() || text.back() == ',') {
    throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned part : parts_) {
    if (!out.empty() && out.back().first == part) {
      ++out.back().second;
    } else {
      out.emplace_back(part, 1);
    }
  }
  return out;
}

unsigned long long Partition::multiplicity_factorial() const {
  unsigned long long f = 1;
  for (const auto& [value, count] : multiplicities()) {
    if (count > 20) throw std::overflow_error("multiplicity factorial exceeds 64 bits");
    for (unsigned i = 2; i <= count; ++i) f *= i;
  }
  return f;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<unsigned> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                      b.parts().end(), std::greater<>());
}

std::vector<Partition> partitions_of(unsigned k) {
  std::vector<Partition> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  // Classic successor: drop trailing 1s, decrement the last part > 1, refill greedily.
  std::vector<unsigned> a{k};
  while (true) {
    out.emplace_back(a);
    unsigned ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    const unsigned part = --a.back();
    unsigned remaining = ones + 1;
    while (remaining > 0) {
      const unsigned next = std::min(part, remaining);
      a.push_back(next);
      remaining -= next;
    }
  }
  return out;
}

}  // namespace genusforge
