#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "io.hpp"

namespace mgc {

struct CommandResult {
  nlohmann::json doc;
  std::string text;
  // Non-Ok when the command ran to completion but found a problem.
  Err status = Err::Ok;
  std::string message;
};

struct CommandContext {
  DataBundle bundle;
  std::string out_dir = "out";
  int threads = 0;
};

CommandResult cmd_compute_a3(CommandContext& ctx, const LocalWeight& lam);
CommandResult cmd_compute_m3(CommandContext& ctx, int n, const std::optional<Partition>& mu);
CommandResult cmd_boundary(CommandContext& ctx, int g, int n, const std::string& engine);
CommandResult cmd_verify_counts(CommandContext& ctx, int q, int genus);
CommandResult cmd_verify_data(CommandContext& ctx);
CommandResult cmd_report(CommandContext& ctx, int n);
// Rebuilds the genus-two table from point counts and writes it to path.
CommandResult cmd_derive_a2(int max_size, const std::string& path);

}  // namespace mgc
