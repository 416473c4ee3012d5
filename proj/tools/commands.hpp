#ifndef MALIGN_TOOLS_COMMANDS_HPP
#define MALIGN_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace malign::cli {

// Exit status contract:
//   0 success, 1 usage, 2 parse/validation, 3 dimension mismatch,
//   4 non-differentiable point, 5 divergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

struct BenchConfig {
  std::size_t n = 256;
  std::size_t d = 64;
  std::vector<std::size_t> m_values{64, 128, 256, 512};
  std::size_t reps = 3;
};

struct BenchRow {
  std::string solver;
  std::size_t n = 0, m = 0, d = 0;
  double median_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double slope_naive_m = 0.0;      // log-log regression slope in m
  double slope_optimized_m = 0.0;
  bool losses_agree = false;
  BenchConfig config;
};

BenchReport run_bench(const BenchConfig& config);
std::string format_bench(const BenchReport& report);

}  // namespace malign::cli

#endif  // MALIGN_TOOLS_COMMANDS_HPP
