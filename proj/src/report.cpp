#include "genusforge/report.hpp"

#include <algorithm>
#include <sstream>

namespace genusforge {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string describe(const Certificate& c) {
  return std::visit(
      Overloaded{
          [](const NonSquareCert& x) {
            std::string mod = to_string(x.prime);
            if (x.exponent > 1) mod += "^" + std::to_string(x.exponent);
            return to_string(x.value) + " is not a square mod " + mod;
          },
          [](const ResidueCert& x) {
            return x.what + " = " + x.value.str() + " == " + to_string(x.residue) + " (mod " +
                   to_string(x.modulus) + ")";
          },
          [](const ValuationCert& x) {
            return "nu_" + to_string(x.prime) + "(" + x.what + ") = " + std::to_string(x.valuation);
          },
          [](const BernoulliDivisibilityCert& x) {
            return to_string(x.prime) + (x.divides ? " divides" : " does not divide") + " numer(B_" +
                   std::to_string(x.index) + ") [" + x.source + "]";
          },
          [](const NonIntegerCert& x) { return x.what + " = " + x.value.str() + " is not an integer"; },
          [](const IdentityCert& x) { return x.what + ": " + x.lhs.str() + " = " + x.rhs.str(); },
          [](const PowerResidueCert& x) {
            const std::string off = sgn(x.offset) < 0 ? " - " + to_string(BigInt(-x.offset)) : " + " + to_string(x.offset);
            return "(" + to_string(x.base) + "^" + to_string(x.exponent) + off +
                   ") mod " + to_string(x.modulus) + " = " + to_string(x.residue);
          },
          [](const HammingCert& x) {
            return "wt(" + to_string(x.k) + ") = " + std::to_string(x.weight);
          },
      },
      c);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::RuledOut: return "ruled-out";
    case Verdict::SolvableNecessary: return "solvable-necessary-conditions";
    case Verdict::Realizable: return "realizable";
    case Verdict::Candidate: return "candidate";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

nlohmann::json to_json(const Certificate& c) {
  using nlohmann::json;
  json j = std::visit(
      Overloaded{
          [](const NonSquareCert& x) {
            return json{{"type", "non-square"},
                        {"value", to_string(x.value)},
                        {"prime", to_string(x.prime)},
                        {"exponent", x.exponent}};
          },
          [](const ResidueCert& x) {
            return json{{"type", "residue"},
                        {"what", x.what},
                        {"value", x.value.str()},
                        {"modulus", to_string(x.modulus)},
                        {"residue", to_string(x.residue)}};
          },
          [](const ValuationCert& x) {
            return json{{"type", "valuation"},
                        {"what", x.what},
                        {"value", x.value.str()},
                        {"prime", to_string(x.prime)},
                        {"valuation", x.valuation}};
          },
          [](const BernoulliDivisibilityCert& x) {
            return json{{"type", "bernoulli-divisibility"},
                        {"prime", to_string(x.prime)},
                        {"index", x.index},
                        {"divides", x.divides},
                        {"source", x.source}};
          },
          [](const NonIntegerCert& x) {
            return json{{"type", "non-integer"}, {"what", x.what}, {"value", x.value.str()}};
          },
          [](const IdentityCert& x) {
            return json{{"type", "identity"}, {"what", x.what}, {"lhs", x.lhs.str()}, {"rhs", x.rhs.str()}};
          },
          [](const PowerResidueCert& x) {
            return json{{"type", "power-residue"},
                        {"base", to_string(x.base)},
                        {"exponent", to_string(x.exponent)},
                        {"offset", to_string(x.offset)},
                        {"modulus", to_string(x.modulus)},
                        {"residue", to_string(x.residue)}};
          },
          [](const HammingCert& x) {
            return json{{"type", "hamming-weight"}, {"k", to_string(x.k)}, {"weight", x.weight}};
          },
      },
      c);
  j["text"] = describe(c);
  return j;
}

std::string ObstructionReport::render_text() const {
  std::ostringstream out;
  std::string word = to_string(verdict);
  std::replace(word.begin(), word.end(), '-', ' ');
  out << subject << ": " << word;
  if (!evidence.empty() && !evidence.back().summary.empty()) out << "; " << evidence.back().summary;
  out << '\n';
  for (const Evidence& e : evidence) {
    out << "  [" << e.rule << "] " << e.summary << '\n';
    for (const Certificate& c : e.certificates) out << "    - " << describe(c) << '\n';
  }
  for (const std::string& note : notes) out << "  note: " << note << '\n';
  return out.str();
}

nlohmann::json ObstructionReport::to_json() const {
  nlohmann::json ev = nlohmann::json::array();
  for (const Evidence& e : evidence) {
    nlohmann::json certs = nlohmann::json::array();
    for (const Certificate& c : e.certificates) certs.push_back(genusforge::to_json(c));
    ev.push_back({{"rule", e.rule}, {"summary", e.summary}, {"certificates", certs}});
  }
  return {{"subject", subject}, {"verdict", to_string(verdict)}, {"evidence", ev}, {"notes", notes}};
}

std::size_t ObstructionReport::certificate_count() const {
  std::size_t n = 0;
  for (const Evidence& e : evidence) n += e.certificates.size();
  return n;
}

}  // namespace genusforge
