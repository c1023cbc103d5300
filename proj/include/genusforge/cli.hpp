#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace genusforge {

enum class OutputFormat { Text, Json };

struct CliConfig {
  OutputFormat output_format = OutputFormat::Text;
  /// Precedence: --cache-dir, then GENUSFORGE_CACHE, else no cache.
  std::optional<std::filesystem::path> cache_dir;
  unsigned long factor_budget = 10'000'000;  // Pollard rho iterations
  std::vector<std::filesystem::path> table_paths;
  bool factored = false;

  nlohmann::json to_json() const;
};

/// Exit codes of the command-line front end.
inline constexpr int kExitVerdict = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitInternal = 4;

/// Parses and runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genusforge
