#ifndef MALIGN_ANALYSIS_HPP
#define MALIGN_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "malign/solver.hpp"
#include "malign/types.hpp"

namespace malign {

// Mean and sample standard deviation of frame distances over random
// (audio frame, text frame) pairs. The null model a measured loss is
// standardized against.
struct BaselineStats {
  double mean = 0.0;
  double std = 0.0;  // n-1 denominator; always > 0
  std::size_t n_pairs = 0;
  std::uint64_t seed = 0;
  FrameMetric metric = FrameMetric::SquaredL2;
};

enum class BaselineMode {
  Sampled,     // n_pairs index pairs drawn uniformly with replacement
  Exhaustive,  // every (i, j) pair once; seed and n_pairs ignored
};

// Throws DegenerateBaseline when the sample standard deviation is zero
// (e.g. constant sequences). Sampled mode requires n_pairs >= 2.
BaselineStats baseline_stats(const EmbeddingSequence& audio,
                             const EmbeddingSequence& text,
                             FrameMetric metric, std::size_t n_pairs,
                             std::uint64_t seed,
                             BaselineMode mode = BaselineMode::Sampled);

// Standardized consistency: (loss - mean) / std. Below zero means the
// alignment beats random frame pairing.
double z_score(double loss, const BaselineStats& baseline);

std::string_view describe_z(double z);

// The uniform linear stretch of text across audio:
// indices[i] = min(floor(i * m_text / n_audio), m_text - 1).
Alignment framewise_alignment(std::size_t n_audio, std::size_t m_text);

struct ConsistencyReport {
  std::string label;
  double z_framewise = 0.0;
  double z_best = 0.0;
  BaselineStats baseline;
  double loss_framewise = 0.0;
  double loss_best = 0.0;
};

ConsistencyReport consistency_report(std::string label,
                                     const EmbeddingSequence& audio,
                                     const EmbeddingSequence& text,
                                     FrameMetric metric, std::size_t n_pairs,
                                     std::uint64_t seed);

// Calibration control: both z statistics averaged over independent
// standard-Gaussian sequence pairs. mean_z_best lands strictly below
// zero even though the data carries no correspondence at all -- the min
// over alignments selects favorable distances. Any conclusion drawn
// from a negative z_best must be weighed against this control.
struct SelectionBiasSummary {
  double mean_z_framewise = 0.0;
  double mean_z_best = 0.0;
  std::size_t trials = 0;
};

// Trial t uses data seed mix_seed(seed, 2t) and baseline seed
// mix_seed(seed, 2t + 1).
SelectionBiasSummary selection_bias_probe(std::size_t n, std::size_t m,
                                          std::size_t d, std::size_t trials,
                                          std::uint64_t seed,
                                          std::size_t n_pairs = 2000);

}  // namespace malign

#endif  // MALIGN_ANALYSIS_HPP
