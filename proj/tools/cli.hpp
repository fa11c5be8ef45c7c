#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gf2bl::cli {

enum class OutputFormat { kJson, kText };

struct CliConfig {
  unsigned k = 1;
  std::optional<std::string> modulus_override;
  OutputFormat output_format = OutputFormat::kJson;
  std::optional<std::uint64_t> seed;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gf2bl::cli
