#include "genusforge/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace genusforge {

std::string_view to_string(Divisibility d) {
  switch (d) {
    case Divisibility::Divides:
      return "divides";
    case Divisibility::DoesNotDivide:
      return "does-not-divide";
    case Divisibility::Unknown:
      return "unknown";
  }
  return "unknown";
}

TableError::TableError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

void IrregularPairTable::add_pair(const BigInt& p, unsigned long n) { pairs_.emplace(p, n); }

void IrregularPairTable::add_non_divisor(const BigInt& p, unsigned long n) {
  non_divisors_.emplace(p, n);
}

unsigned long IrregularPairTable::max_index_covered() const {
  unsigned long m = complete_to_;
  for (const auto& [p, n] : pairs_) m = std::max(m, n);
  for (const auto& [p, n] : non_divisors_) m = std::max(m, n);
  return m;
}

Divisibility IrregularPairTable::query(const BigInt& p, unsigned long n) const {
  if (pairs_.count({p, n})) return Divisibility::Divides;
  if (non_divisors_.count({p, n})) return Divisibility::DoesNotDivide;
  if (n <= complete_to_) return Divisibility::DoesNotDivide;
  return Divisibility::Unknown;
}

std::string IrregularPairTable::serialize() const {
  std::ostringstream os;
  os << "#complete-to " << complete_to_ << '\n';
  if (!source_.empty()) os << "#source " << source_ << '\n';
  for (const auto& [p, n] : pairs_) os << p.get_str() << ' ' << n << '\n';
  for (const auto& [p, n] : non_divisors_) os << '!' << p.get_str() << ' ' << n << '\n';
  return os.str();
}

namespace {

unsigned long parse_index(const std::string& token, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
    throw TableError(TableError::Kind::Parse, line, "expected a nonnegative index, got '" + token + "'");
  }
  try {
    return std::stoul(token);
  } catch (const std::out_of_range&) {
    throw TableError(TableError::Kind::Parse, line, "index out of range: '" + token + "'");
  }
}

}  // namespace

IrregularPairTable parse_table(std::string_view text) {
  IrregularPairTable table;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "#complete-to") {
      std::string n;
      fields >> n;
      table.set_complete_to(parse_index(n, line_no));
      continue;
    }
    if (first == "#source") {
      std::string rest;
      std::getline(fields >> std::ws, rest);
      table.set_source(rest);
      continue;
    }
    if (first.front() == '#') continue;

    const bool negative = first.front() == '!';
    if (negative) first.erase(first.begin());
    std::string index_token, extra;
    if (!(fields >> index_token) || (fields >> extra)) {
      throw TableError(TableError::Kind::Parse, line_no, "expected 'p n'");
    }
    BigInt p;
    try {
      p = parse_bigint(first);
    } catch (const std::invalid_argument&) {
      throw TableError(TableError::Kind::Parse, line_no, "prime is not an integer: '" + first + "'");
    }
    const unsigned long n = parse_index(index_token, line_no);
    if (!is_prime(p)) {
      throw TableError(TableError::Kind::CompositePrime, line_no, p.get_str() + " is not prime");
    }
    if (n % 2 != 0) {
      throw TableError(TableError::Kind::OddIndex, line_no, "index " + std::to_string(n) + " is odd");
    }
    if (negative) {
      table.add_non_divisor(p, n);
    } else {
      table.add_pair(p, n);
    }
  }
  return table;
}

IrregularPairTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError(TableError::Kind::Io, 0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

void save_table(const IrregularPairTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw TableError(TableError::Kind::Io, 0, "cannot write " + path.string());
  out << table.serialize();
}

Divisibility query(const IrregularPairTable& table, const BigInt& p, unsigned long n) {
  return table.query(p, n);
}

Divisibility query(const std::vector<IrregularPairTable>& tables, const BigInt& p, unsigned long n) {
  Divisibility answer = Divisibility::Unknown;
  for (const auto& t : tables) {
    const Divisibility d = t.query(p, n);
    if (d == Divisibility::Unknown) continue;
    if (answer != Divisibility::Unknown && answer != d) {
      throw MathError("irregular-pair tables disagree on (" + p.get_str() + ", " + std::to_string(n) + ")");
    }
    answer = d;
  }
  return answer;
}

std::filesystem::path bundled_data_dir() {
  if (const char* env = std::getenv("GENUSFORGE_DATA")) return env;
  return GENUSFORGE_DATA_DIR;
}

IrregularPairTable load_bundled_table() { return load_table(bundled_data_dir() / "irregular_pairs.txt"); }

}  // namespace genusforge
