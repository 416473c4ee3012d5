#ifndef MALIGN_SOLVER_HPP
#define MALIGN_SOLVER_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "malign/metrics.hpp"
#include "malign/types.hpp"

namespace malign {

enum class Solver {
  Naive,      // literal O(n m^2) scan of the recurrence
  Optimized,  // running prefix minimum, O(n m)
  BruteForce, // exhaustive enumeration of all monotone alignments
};

std::string_view solver_name(Solver s);
Solver solver_from_name(std::string_view name);

// DP table. values[i*m + j] is the minimal cumulative (unnormalized)
// cost of aligning audio frames 0..i with text indices constrained to
// <= j; argmin holds the smallest text index attaining each cell.
struct CostMatrix {
  std::size_t n_audio = 0;
  std::size_t m_text = 0;
  std::vector<double> values;
  std::vector<std::uint32_t> argmin;

  double at(std::size_t i, std::size_t j) const {
    return values[i * m_text + j];
  }
  std::uint32_t arg(std::size_t i, std::size_t j) const {
    return argmin[i * m_text + j];
  }
};

struct BestAlignmentResult {
  double loss = 0.0;  // normalized by the audio frame count
  Alignment path;
  Solver solver = Solver::Optimized;
  std::size_t n_audio = 0;
  std::size_t m_text = 0;
  std::size_t dim = 0;
  FrameMetric metric = FrameMetric::SquaredL2;
};

// Entry (i, j) = frame_distance(metric, audio[i], text[j]).
Grid distance_matrix(const EmbeddingSequence& audio,
                     const EmbeddingSequence& text, FrameMetric metric);

// Exhaustive minimum over all binomial(n+m-1, n) monotone alignments,
// ties broken toward the lexicographically smallest index sequence.
// Throws InstanceTooLarge when the enumeration count exceeds cap.
BestAlignmentResult brute_force_best(const EmbeddingSequence& audio,
                                     const EmbeddingSequence& text,
                                     FrameMetric metric,
                                     std::uint64_t cap = 1'000'000);

// Number of monotone non-decreasing length-n index sequences over
// {0..m-1}; saturates at cap+1 instead of overflowing.
std::uint64_t count_monotone_alignments(std::size_t n, std::size_t m,
                                        std::uint64_t cap);

// Fills the cost table with the literal O(m) inner scan per cell.
CostMatrix compute_cost_matrix(const EmbeddingSequence& audio,
                               const EmbeddingSequence& text,
                               FrameMetric metric);

// O(n m^2) dynamic program with full-table backtracking.
BestAlignmentResult solve_naive(const EmbeddingSequence& audio,
                                const EmbeddingSequence& text,
                                FrameMetric metric);

// O(n m) solver: the inner min over k <= j is a running prefix minimum.
// Produces the same loss and, under the shared smallest-index tie rule,
// the same path as solve_naive.
BestAlignmentResult solve_optimized(const EmbeddingSequence& audio,
                                    const EmbeddingSequence& text,
                                    FrameMetric metric);

// Loss-only variant of solve_optimized: two DP rows, no path recovery.
double solve_optimized_loss(const EmbeddingSequence& audio,
                            const EmbeddingSequence& text,
                            FrameMetric metric);

}  // namespace malign

#endif  // MALIGN_SOLVER_HPP
