#include "genusforge/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "genusforge/bernoulli.hpp"
#include "genusforge/genus.hpp"
#include "genusforge/obstruction.hpp"

namespace genusforge {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned long parse_positive(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18) {
    throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  const unsigned long v = std::stoul(text);
  if (v == 0) throw UsageError(std::string(what) + " must be positive");
  return v;
}

Partition parse_partition(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string render_rational(const ExactRat& q, bool factored, const FactorBudget& budget) {
  if (!factored || q.is_zero()) return q.str();
  std::string out = q.sign() < 0 ? "-" : "";
  const BigInt n = abs(q.numer());
  out += n == 1 ? "1" : "(" + factor(n, budget).str() + ")";
  if (q.denom() != 1) out += " / (" + factor(q.denom(), budget).str() + ")";
  return out;
}

nlohmann::json rational_record(const ExactRat& q) {
  return {{"numer", to_string(q.numer())}, {"denom", to_string(q.denom())}};
}

nlohmann::json poly_json(const PontryaginPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, c] : p.terms()) {
    nlohmann::json t = rational_record(c);
    t["partition"] = index.str();
    terms.push_back(t);
  }
  return terms;
}

struct Session {
  CliConfig config;
  EngineContext ctx;
  std::ostream& out;

  void emit(const nlohmann::json& result, const std::string& text) const {
    if (config.output_format == OutputFormat::Json) {
      out << nlohmann::json{{"config", config.to_json()}, {"result", result}}.dump(2) << '\n';
    } else {
      out << text;
      if (!text.empty() && text.back() != '\n') out << '\n';
    }
  }

  int emit_report(const ObstructionReport& r) const {
    emit(r.to_json(), r.render_text());
    return r.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitVerdict;
  }
};

void load_caches(const CliConfig& config) {
  if (!config.cache_dir) return;
  const auto b = *config.cache_dir / "bernoulli.tsv";
  const auto g = *config.cache_dir / "genus.tsv";
  if (std::filesystem::exists(b)) shared_bernoulli_cache().load(b, false);
  if (std::filesystem::exists(g)) shared_genus_engine().load(g, false);
}

void save_caches(const CliConfig& config) {
  if (!config.cache_dir) return;
  std::filesystem::create_directories(*config.cache_dir);
  shared_bernoulli_cache().save(*config.cache_dir / "bernoulli.tsv");
  shared_genus_engine().save(*config.cache_dir / "genus.tsv");
}

}  // namespace

nlohmann::json CliConfig::to_json() const {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& p : table_paths) tables.push_back(p.string());
  return {{"output_format", output_format == OutputFormat::Json ? "json" : "text"},
          {"cache_dir", cache_dir ? nlohmann::json(cache_dir->string()) : nlohmann::json(nullptr)},
          {"factor_budget", factor_budget},
          {"table_paths", tables},
          {"factored", factored}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-class arithmetic and signature obstructions", "genusforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "genusforge 0.1.0");

  CliConfig config;
  bool json = false;
  std::string cache_dir;
  std::vector<std::string> tables;
  app.add_flag("--json", json, "Emit JSON");
  app.add_option("--cache-dir", cache_dir, "Directory for Bernoulli and coefficient caches");
  app.add_option("--tables", tables, "Extra irregular-pair tables")->expected(1, -1);
  app.add_option("--factor-budget", config.factor_budget, "Pollard rho iteration budget");
  app.add_flag("--factored", config.factored, "Print numerators and denominators factored");

  std::string n_arg, part_arg, k_arg, dim_arg, m_arg, candidate_arg, bound_arg;
  auto* bern = app.add_subcommand("bernoulli", "Exact Bernoulli number B_N");
  bern->add_option("N", n_arg)->required();
  auto* lcoeff = app.add_subcommand("lcoeff", "L-genus coefficient s_I for a partition like 5,5");
  lcoeff->add_option("I", part_arg)->required();
  auto* lpoly = app.add_subcommand("lpoly", "L-polynomial L_K");
  lpoly->add_option("K", k_arg)->required();
  auto* apoly = app.add_subcommand("apoly", "A-hat polynomial A_K");
  apoly->add_option("K", k_arg)->required();
  auto* rpp = app.add_subcommand("rpp", "Rational projective plane check");
  rpp->add_option("DIM", dim_arg)->required();
  auto* witness = app.add_subcommand("witness", "Search a single witness prime for dimension DIM");
  witness->add_option("DIM", dim_arg)->required();
  witness->add_option("--bound", bound_arg, "Largest prime to consider (default: no bound)");
  auto* spin = app.add_subcommand("spin32", "Dimension-32 Spin check");
  auto* e8 = app.add_subcommand("e8", "E8 manifold check");
  e8->add_option("DIM", dim_arg)->required();
  auto* opm = app.add_subcommand("opm", "Rational OP^m check");
  opm->add_option("M", m_arg)->required();
  opm->add_option("--candidate", candidate_arg, "Values a,b,c,... of p_2, p_4, ... for even m");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitVerdict;
  } catch (const CLI::CallForVersion&) {
    out << "genusforge 0.1.0\n";
    return kExitVerdict;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  config.output_format = json ? OutputFormat::Json : OutputFormat::Text;
  if (!cache_dir.empty()) {
    config.cache_dir = cache_dir;
  } else if (const char* env = std::getenv("GENUSFORGE_CACHE"); env && *env) {
    config.cache_dir = env;
  }
  for (const auto& t : tables) config.table_paths.emplace_back(t);

  try {
    Session s{config, default_context(), out};
    s.ctx.factor_budget.rho_iterations = config.factor_budget;
    for (const auto& path : config.table_paths) s.ctx.tables.push_back(load_table(path));
    load_caches(config);
    const FactorBudget budget = s.ctx.factor_budget;
    int code = kExitVerdict;

    if (bern->parsed()) {
      const unsigned long n = parse_positive(n_arg, "N");
      const ExactRat b = bernoulli(n);
      nlohmann::json j = rational_record(b);
      j["index"] = n;
      s.emit(j, "B_" + std::to_string(n) + " = " + render_rational(b, config.factored, budget));
    } else if (lcoeff->parsed()) {
      const Partition index = parse_partition(part_arg);
      const ExactRat v = genus_coefficient(GenusSpec::l_genus(), index);
      nlohmann::json j = rational_record(v);
      j["partition"] = index.str();
      s.emit(j, "s_{" + index.str() + "} = " + render_rational(v, config.factored, budget));
    } else if (lpoly->parsed() || apoly->parsed()) {
      const unsigned long k = parse_positive(k_arg, "K");
      if (k > GenusEngine::kMaxParts) throw UsageError("K must be at most " + std::to_string(GenusEngine::kMaxParts));
      const GenusSpec g = lpoly->parsed() ? GenusSpec::l_genus() : GenusSpec::a_hat();
      const PontryaginPoly p = genus_polynomial(g, static_cast<unsigned>(k));
      s.emit(nlohmann::json{{"genus", g.name()}, {"weight", k}, {"terms", poly_json(p)}},
             std::string(g.kind() == GenusKind::L ? "L_" : "A_") + std::to_string(k) + " = " + p.str());
    } else if (rpp->parsed()) {
      code = s.emit_report(rpp_check(parse_positive(dim_arg, "DIM"), s.ctx));
    } else if (witness->parsed()) {
      const unsigned long dim = parse_positive(dim_arg, "DIM");
      if (dim % 8 != 0 || dim < 16) throw UsageError("DIM must be a multiple of 8 and at least 16");
      const unsigned long n = dim / 8;
      BigInt bound = 0;
      if (!bound_arg.empty()) {
        try {
          bound = parse_bigint(bound_arg);
        } catch (const std::exception&) {
          throw UsageError("--bound must be an integer");
        }
      }
      const PrimeSource src = 4 * n <= kBernoulliDirectBudget ? PrimeSource::Computed : PrimeSource::Table;
      const WitnessSearchResult found = witness_search(n, src, bound, s.ctx);
      ObstructionReport r;
      r.subject = "witness " + std::to_string(dim);
      r.notes.push_back(std::string("prime source: ") + (src == PrimeSource::Computed ? "computed" : "tables"));
      if (!found.note.empty()) r.notes.push_back(found.note);
      if (found.prime) {
        r.evidence.push_back(witness_rule_single(n, *found.prime, s.ctx).evidence);
        r.verdict = Verdict::RuledOut;
      } else {
        r.evidence.push_back({"witness-search", "no witness prime found", {}});
        r.verdict = Verdict::Inconclusive;
      }
      code = s.emit_report(r);
    } else if (spin->parsed()) {
      code = s.emit_report(spin32_check(s.ctx));
    } else if (e8->parsed()) {
      code = s.emit_report(e8_check(parse_positive(dim_arg, "DIM"), s.ctx));
    } else if (opm->parsed()) {
      const unsigned long m = parse_positive(m_arg, "M");
      std::optional<std::vector<BigInt>> candidate;
      if (!candidate_arg.empty()) {
        candidate.emplace();
        std::istringstream in(candidate_arg);
        std::string item;
        while (std::getline(in, item, ',')) {
          try {
            candidate->push_back(parse_bigint(item));
          } catch (const std::exception&) {
            throw UsageError("malformed candidate value '" + item + "'");
          }
        }
      }
      code = s.emit_report(opm_check(m, candidate));
    }
    save_caches(config);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace genusforge
