#include "malign/analysis.hpp"

#include <cmath>
#include <string>

#include "malign/numeric.hpp"
#include "malign/rng.hpp"
#include "malign/synth.hpp"

namespace malign {

BaselineStats baseline_stats(const EmbeddingSequence& audio,
                             const EmbeddingSequence& text,
                             FrameMetric metric, std::size_t n_pairs,
                             std::uint64_t seed, BaselineMode mode) {
  validate_pair(audio, text);
  const std::size_t n = audio.len(), m = text.len(), d = audio.dim();

  std::vector<double> samples;
  if (mode == BaselineMode::Exhaustive) {
    samples.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        samples.push_back(detail::metric_kernel(
            metric, audio.frame(i).data(), text.frame(j).data(), d));
      }
    }
  } else {
    if (n_pairs < 2) {
      throw ValidationError("baseline needs n_pairs >= 2");
    }
    samples.reserve(n_pairs);
    Rng rng(seed);
    for (std::size_t p = 0; p < n_pairs; ++p) {
      std::size_t i = rng.uniform_u64(n);
      std::size_t j = rng.uniform_u64(m);
      samples.push_back(detail::metric_kernel(
          metric, audio.frame(i).data(), text.frame(j).data(), d));
    }
  }

  NeumaierSum sum;
  for (double x : samples) sum.add(x);
  const double mean = sum.value() / static_cast<double>(samples.size());

  NeumaierSum sq;
  for (double x : samples) {
    double dev = x - mean;
    sq.add(dev * dev);
  }
  const double var = sq.value() / static_cast<double>(samples.size() - 1);
  const double std_dev = std::sqrt(var);
  if (std_dev == 0.0) {
    throw DegenerateBaseline(
        "all sampled frame distances are equal; z-scores are undefined");
  }

  BaselineStats stats;
  stats.mean = mean;
  stats.std = std_dev;
  stats.n_pairs = samples.size();
  stats.seed = seed;
  stats.metric = metric;
  return stats;
}

double z_score(double loss, const BaselineStats& baseline) {
  return (loss - baseline.mean) / baseline.std;
}

std::string_view describe_z(double z) {
  return z < 0.0 ? "stronger than random" : "no better than random";
}

Alignment framewise_alignment(std::size_t n_audio, std::size_t m_text) {
  if (n_audio == 0 || m_text == 0) {
    throw ValidationError("framewise alignment needs n >= 1, m >= 1");
  }
  std::vector<std::size_t> idx(n_audio);
  for (std::size_t i = 0; i < n_audio; ++i) {
    idx[i] = std::min((i * m_text) / n_audio, m_text - 1);
  }
  return Alignment(std::move(idx), m_text);
}

ConsistencyReport consistency_report(std::string label,
                                     const EmbeddingSequence& audio,
                                     const EmbeddingSequence& text,
                                     FrameMetric metric, std::size_t n_pairs,
                                     std::uint64_t seed) {
  ConsistencyReport report;
  report.label = std::move(label);
  report.baseline = baseline_stats(audio, text, metric, n_pairs, seed);
  report.loss_framewise = aligned_loss(
      audio, text, framewise_alignment(audio.len(), text.len()), metric);
  report.loss_best = solve_optimized(audio, text, metric).loss;
  report.z_framewise = z_score(report.loss_framewise, report.baseline);
  report.z_best = z_score(report.loss_best, report.baseline);
  return report;
}

SelectionBiasSummary selection_bias_probe(std::size_t n, std::size_t m,
                                          std::size_t d, std::size_t trials,
                                          std::uint64_t seed,
                                          std::size_t n_pairs) {
  if (n == 0 || m == 0 || d == 0 || trials == 0) {
    throw ValidationError("selection_bias_probe needs positive arguments");
  }
  NeumaierSum zf, zb;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, 2 * t));
    EmbeddingSequence audio = random_gaussian_sequence(n, d, rng);
    EmbeddingSequence text = random_gaussian_sequence(m, d, rng);
    ConsistencyReport r =
        consistency_report("trial" + std::to_string(t), audio, text,
                           FrameMetric::SquaredL2, n_pairs,
                           mix_seed(seed, 2 * t + 1));
    zf.add(r.z_framewise);
    zb.add(r.z_best);
  }
  SelectionBiasSummary summary;
  summary.mean_z_framewise = zf.value() / static_cast<double>(trials);
  summary.mean_z_best = zb.value() / static_cast<double>(trials);
  summary.trials = trials;
  return summary;
}

}  // namespace malign
