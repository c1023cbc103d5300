#include <fstream>
#include <mutex>
#include <sstream>

#include "genusforge/bernoulli.hpp"
#include "genusforge/genus.hpp"
#include "genusforge/obstruction.hpp"

namespace genusforge {

namespace {

std::string sub(unsigned long n) { return std::to_string(n); }
std::string pair_sub(unsigned long n) { return "{" + sub(n) + "," + sub(n) + "}"; }

ExactRat s_single(unsigned long k) {
  return genus_coefficient(GenusSpec::l_genus(), Partition{static_cast<unsigned>(k)});
}

ExactRat s_pair(unsigned long k) {
  return genus_coefficient(GenusSpec::l_genus(), Partition{static_cast<unsigned>(k), static_cast<unsigned>(k)});
}

bool odd_prime(const BigInt& p) { return p > 2 && is_prime(p); }

std::string table_sources(const EngineContext& ctx) {
  std::string out;
  for (const IrregularPairTable& t : ctx.tables) {
    if (!out.empty()) out += "; ";
    out += t.source().empty() ? "irregular-pair table" : t.source();
  }
  return out.empty() ? "irregular-pair table" : out;
}

RuleResult inapplicable(RuleResult r, const std::string& why) {
  r.status = RuleStatus::Inapplicable;
  r.evidence.summary = why;
  return r;
}

RuleResult inconclusive(RuleResult r, const std::string& why) {
  r.status = RuleStatus::Inconclusive;
  r.evidence.summary = why;
  return r;
}

// Appends the two residue certificates ending the single-prime argument.
bool add_sign_residues(RuleResult& r, const ExactRat& s_nn, const BigInt& p, unsigned long n) {
  const ExactRat inv = s_nn.inverse();
  const BigInt plus = *residue_mod(inv, p);
  const BigInt minus = mod(-plus, p);
  r.evidence.certificates.push_back(ResidueCert{"1/s_" + pair_sub(n), inv, p, plus});
  r.evidence.certificates.push_back(NonSquareCert{plus, p, 1});
  r.evidence.certificates.push_back(ResidueCert{"-1/s_" + pair_sub(n), -inv, p, minus});
  r.evidence.certificates.push_back(NonSquareCert{minus, p, 1});
  return jacobi(plus, p) == -1 && jacobi(minus, p) == -1;
}

}  // namespace

namespace {

// A definite table answer avoids computing B_n near the top of the budget.
Divisibility table_first(const BigInt& p, unsigned long n, const EngineContext& ctx) {
  const Divisibility d = query(ctx.tables, p, n);
  return d == Divisibility::Unknown ? numerator_divisibility(p, n, ctx.tables) : d;
}

}  // namespace

RuleResult witness_rule_single(unsigned long n, const BigInt& p, const EngineContext& ctx) {
  RuleResult r;
  r.evidence.rule = "witness-single";
  if (n == 0) throw std::invalid_argument("witness rule needs n >= 1");
  if (!odd_prime(p)) return inapplicable(r, to_string(p) + " is not an odd prime");
  const BigInt minus_two = p - 2;
  if (jacobi(BigInt(2), p) != -1 || jacobi(minus_two, p) != -1) {
    return inapplicable(r, "2 or -2 is a quadratic residue modulo " + to_string(p));
  }
  r.evidence.certificates.push_back(NonSquareCert{BigInt(2), p, 1});
  r.evidence.certificates.push_back(NonSquareCert{minus_two, p, 1});

  const std::string headline = "witness prime " + to_string(p);
  if (4 * n <= kBernoulliDirectBudget) {
    const ExactRat sn = s_single(n);
    const ExactRat s2n = s_single(2 * n);
    const ExactRat snn = s_pair(n);
    const long v2n = nu(p, s2n);
    const long vn = nu(p, sn);
    r.evidence.certificates.push_back(ValuationCert{"s_" + sub(2 * n), s2n, p, v2n});
    r.evidence.certificates.push_back(ValuationCert{"s_" + sub(n), sn, p, vn});
    if (v2n <= 0) return inapplicable(r, to_string(p) + " does not divide s_" + sub(2 * n));
    if (vn != 0) return inapplicable(r, "nu_" + to_string(p) + "(s_" + sub(n) + ") != 0");
    const ExactRat diff = snn - sn * sn / ExactRat(2);
    r.evidence.certificates.push_back(ResidueCert{"s_" + pair_sub(n) + " - s_" + sub(n) + "^2/2", diff, p, *residue_mod(diff, p)});
    if (!add_sign_residues(r, snn, p, n)) {
      r.status = RuleStatus::NotRuledOut;
      r.evidence.summary = "inconsistent residues for " + to_string(p);
      return r;
    }
    r.status = RuleStatus::RuledOut;
    r.evidence.summary = headline + ": s_" + pair_sub(n) + " == s_" + sub(n) + "^2/2 (mod " + to_string(p) +
                         ") and neither 2 nor -2 is a square";
    return r;
  }

  // Beyond the direct budget: p > 4n + 1 keeps p out of every denominator, so
  // nu_p(s_j) > 0 iff p divides 2^(2j-1) - 1 or numer(B_2j).
  if (p <= BigInt(4 * n + 1)) return inconclusive(r, "table mode needs p > " + sub(4 * n + 1));
  const std::string src = table_sources(ctx);
  const BigInt m2n = mod(pow_mod(BigInt(2), BigInt(4 * n - 1), p) - 1, p);
  const BigInt mn = mod(pow_mod(BigInt(2), BigInt(2 * n - 1), p) - 1, p);
  r.evidence.certificates.push_back(PowerResidueCert{BigInt(2), BigInt(4 * n - 1), BigInt(-1), p, m2n});
  r.evidence.certificates.push_back(PowerResidueCert{BigInt(2), BigInt(2 * n - 1), BigInt(-1), p, mn});

  if (m2n != 0) {
    const Divisibility d = table_first(p, 4 * n, ctx);
    if (d == Divisibility::Unknown) return inconclusive(r, "no table decides " + to_string(p) + " | numer(B_" + sub(4 * n) + ")");
    if (d == Divisibility::DoesNotDivide) return inapplicable(r, to_string(p) + " does not divide s_" + sub(2 * n));
    r.evidence.certificates.push_back(BernoulliDivisibilityCert{p, 4 * n, true, src});
  }
  if (mn == 0) return inapplicable(r, to_string(p) + " divides s_" + sub(n));
  const Divisibility dn = table_first(p, 2 * n, ctx);
  if (dn == Divisibility::Unknown) return inconclusive(r, "no table decides " + to_string(p) + " | numer(B_" + sub(2 * n) + ")");
  if (dn == Divisibility::Divides) return inapplicable(r, to_string(p) + " divides s_" + sub(n));
  r.evidence.certificates.push_back(BernoulliDivisibilityCert{p, 2 * n, false, src});
  r.status = RuleStatus::RuledOut;
  r.evidence.summary = headline + ": p | s_" + sub(2 * n) + ", p does not divide s_" + sub(n) +
                       ", so +-1/s_" + pair_sub(n) + " == +-2/s_" + sub(n) + "^2 are nonresidues";
  return r;
}

RuleResult witness_rule_double(unsigned long n, const BigInt& p, const BigInt& q) {
  RuleResult r;
  r.evidence.rule = "witness-double";
  if (n == 0) throw std::invalid_argument("witness rule needs n >= 1");
  if (!odd_prime(p)) return inapplicable(r, to_string(p) + " is not an odd prime");
  if (!odd_prime(q)) return inapplicable(r, to_string(q) + " is not an odd prime");
  if (4 * n > kBernoulliDirectBudget) return inconclusive(r, "B_" + sub(4 * n) + " is beyond the direct budget");
  const ExactRat s2n = s_single(2 * n);
  const ExactRat snn = s_pair(n);
  for (const BigInt& ell : {p, q}) {
    const long v = nu(ell, s2n);
    r.evidence.certificates.push_back(ValuationCert{"s_" + sub(2 * n), s2n, ell, v});
    if (v <= 0) return inapplicable(r, to_string(ell) + " does not divide s_" + sub(2 * n));
    if (nu(ell, snn) != 0) return inapplicable(r, to_string(ell) + " divides s_" + pair_sub(n));
  }
  const ExactRat inv = snn.inverse();
  const BigInt rp = *residue_mod(inv, p);
  const BigInt rq = *residue_mod(-inv, q);
  r.evidence.certificates.push_back(ResidueCert{"1/s_" + pair_sub(n), inv, p, rp});
  r.evidence.certificates.push_back(NonSquareCert{rp, p, 1});
  r.evidence.certificates.push_back(ResidueCert{"-1/s_" + pair_sub(n), -inv, q, rq});
  r.evidence.certificates.push_back(NonSquareCert{rq, q, 1});
  if (jacobi(rp, p) != -1) return inapplicable(r, "1/s_" + pair_sub(n) + " is a square modulo " + to_string(p));
  if (jacobi(rq, q) != -1) return inapplicable(r, "-1/s_" + pair_sub(n) + " is a square modulo " + to_string(q));
  r.status = RuleStatus::RuledOut;
  r.evidence.summary = "witness primes " + to_string(p) + " (+1: residue " + to_string(rp) + ") and " + to_string(q) +
                       " (-1: residue " + to_string(rq) + ")";
  return r;
}

WitnessSearchResult witness_search(unsigned long n, PrimeSource source, const BigInt& bound, const EngineContext& ctx) {
  if (n < 2) throw std::invalid_argument("witness search needs n >= 2");
  WitnessSearchResult out;
  const unsigned long index = 4 * n;
  std::vector<BigInt> candidates;
  auto eligible = [&](const BigInt& p) { return mod(p, BigInt(8)) == 5 && p > BigInt(index) && (bound <= 0 || p <= bound); };

  if (source == PrimeSource::Computed) {
    if (index > kBernoulliDirectBudget) {
      out.note = "B_" + sub(index) + " is beyond the direct budget";
      return out;
    }
    const BigInt numer = abs(bernoulli(index).numer());
    const Factorization f = factor(numer, ctx.factor_budget);
    for (const auto& [p, e] : f.factors) {
      if (eligible(p)) candidates.push_back(p);
    }
    out.exhaustive = f.complete || (bound > 0 && bound < BigInt(ctx.factor_budget.trial_bound));
    if (!out.exhaustive) out.note = "cofactor of numer(B_" + sub(index) + ") not fully factored";
  } else {
    for (const IrregularPairTable& t : ctx.tables) {
      for (const auto& [p, idx] : t.pairs()) {
        if (idx == index && eligible(p)) candidates.push_back(p);
      }
      if (t.complete_to() >= index) out.exhaustive = true;
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (!out.exhaustive) out.note = "no table is complete through index " + sub(index);
  }

  for (const BigInt& p : candidates) {
    out.candidates_checked.push_back(p);
    if (witness_rule_single(n, p, ctx).status == RuleStatus::RuledOut) {
      out.prime = p;
      return out;
    }
  }
  if (out.note.empty()) out.note = "none found within bound";
  return out;
}

std::vector<WitnessEntry> parse_witnesses(std::string_view text, const EngineContext& ctx, bool verify) {
  std::vector<WitnessEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream f(line);
    std::string field;
    while (std::getline(f, field, '\t')) fields.push_back(field);
    WitnessEntry w;
    try {
      if (fields.size() < 3) throw std::invalid_argument("expected dim, kind and prime");
      w.dimension = std::stoul(fields[0]);
      if (fields[1] == "single" && fields.size() == 3) {
        w.p = parse_bigint(fields[2]);
      } else if (fields[1] == "double" && fields.size() == 4) {
        w.is_double = true;
        w.p = parse_bigint(fields[2]);
        w.q = parse_bigint(fields[3]);
      } else {
        throw std::invalid_argument("kind must be 'single' with one prime or 'double' with two");
      }
    } catch (const std::exception& e) {
      throw TableError(TableError::Kind::Parse, line_no, e.what());
    }
    if (w.dimension == 0 || w.dimension % 8 != 0) {
      throw TableError(TableError::Kind::Parse, line_no, "witness dimension must be a positive multiple of 8");
    }
    if (!verify) {
      out.push_back(w);
      continue;
    }
    const unsigned long n = w.dimension / 8;
    const RuleResult check = w.is_double ? witness_rule_double(n, w.p, w.q) : witness_rule_single(n, w.p, ctx);
    if (check.status != RuleStatus::RuledOut) {
      throw TableError(TableError::Kind::Parse, line_no,
                       "witness for dimension " + sub(w.dimension) + " does not verify: " + check.evidence.summary);
    }
    out.push_back(w);
  }
  return out;
}

std::vector<WitnessEntry> load_witnesses(const std::filesystem::path& path, const EngineContext& ctx, bool verify) {
  std::ifstream in(path);
  if (!in) throw TableError(TableError::Kind::Io, 0, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_witnesses(buf.str(), ctx, verify);
}

const EngineContext& default_context() {
  static const EngineContext ctx = [] {
    EngineContext c;
    c.tables.push_back(load_bundled_table());
    c.witnesses = load_witnesses(bundled_data_dir() / "witnesses.tsv", c);
    return c;
  }();
  return ctx;
}

}  // namespace genusforge
