#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace foldtrack::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInvariantError = 3 };

// 0 quiet, 1 progress, 2 per-item detail. Read from FOLDTRACK_LOG.
int log_level();
void log(int level, const std::string& message);

struct ExperimentConfig {
  int rank = 3;
  int length = 10;
  int trials = 200;
  std::uint64_t seed = 1;
  int k_max = 40;
  int jobs = 1;
  std::string out;  // empty: standard output
};

// Each command writes its report to `out` and diagnostics to `err`.
int cmd_spectrum(const std::string& aut_text, std::ostream& out, std::ostream& err);
// `input` is automorphism text or a path to a map JSON file.
int cmd_invert(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_ratio(const std::string& aut_text, int k_max, std::ostream& out, std::ostream& err);
int cmd_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
// Graph files join the quasi-metric audit; map files get reducibility checks.
int cmd_audit(const std::vector<std::string>& files, int budget, std::uint64_t seed, std::ostream& out,
              std::ostream& err);
// Two graph files: one estimate. No files: the twist family table.
int cmd_metric(const std::vector<std::string>& files, int rank, const std::vector<long>& twist_powers,
               std::ostream& out, std::ostream& err);

}  // namespace foldtrack::cli
