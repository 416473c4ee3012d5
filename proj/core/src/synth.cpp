#include "malign/synth.hpp"

#include <cmath>
#include <string>

#include "malign/analysis.hpp"
#include "malign/gradient.hpp"

namespace malign {

std::string_view update_side_name(UpdateSide side) {
  switch (side) {
    case UpdateSide::AudioOnly:
      return "audio";
    case UpdateSide::TextOnly:
      return "text";
    case UpdateSide::Both:
      return "both";
  }
  return "audio";
}

UpdateSide update_side_from_name(std::string_view name) {
  if (name == "audio") return UpdateSide::AudioOnly;
  if (name == "text") return UpdateSide::TextOnly;
  if (name == "both") return UpdateSide::Both;
  throw ValidationError("unknown update side: " + std::string(name));
}

EmbeddingSequence random_gaussian_sequence(std::size_t len, std::size_t dim,
                                           Rng& rng) {
  EmbeddingSequence out(len, dim);
  for (double& x : out.data()) x = rng.normal();
  return out;
}

Alignment random_monotone_alignment(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0 || m == 0) {
    throw ValidationError("alignment sampling needs n >= 1, m >= 1");
  }
  // Stars and bars: monotone sequences of length n over {0..m-1} are in
  // bijection with n-subsets of {0..n+m-2} via s_i = a_i + i.
  std::vector<std::size_t> subset = sample_combination(n + m - 1, n, rng);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = subset[i] - i;
  return Alignment(std::move(idx), m);
}

PlantedInstance generate_planted(std::size_t n, std::size_t m, std::size_t d,
                                 double noise_sigma, std::uint64_t seed) {
  if (n == 0 || m == 0 || d == 0) {
    throw ValidationError("generate_planted needs n, m, d >= 1");
  }
  if (noise_sigma < 0.0) {
    throw ValidationError("noise_sigma must be >= 0");
  }
  Rng rng(seed);
  EmbeddingSequence text = random_gaussian_sequence(m, d, rng);
  Alignment planted = random_monotone_alignment(n, m, rng);
  EmbeddingSequence audio(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    const double* src = text.frame(planted[i]).data();
    double* dst = audio.frame(i).data();
    for (std::size_t k = 0; k < d; ++k) {
      dst[k] = src[k] + noise_sigma * rng.normal();
    }
  }
  return PlantedInstance{std::move(audio), std::move(text),
                         std::move(planted), noise_sigma, seed};
}

OptimizationTrace optimize_embeddings(const EmbeddingSequence& audio,
                                      const EmbeddingSequence& text,
                                      FrameMetric metric, std::size_t steps,
                                      double learning_rate, UpdateSide side,
                                      std::uint64_t seed) {
  validate_pair(audio, text);
  if (metric != FrameMetric::SquaredL2) {
    throw ValidationError(
        "optimize_embeddings supports the squared L2 metric only");
  }
  if (steps < 1) {
    throw ValidationError("steps must be >= 1");
  }
  if (!(learning_rate > 0.0)) {
    throw ValidationError("learning_rate must be > 0");
  }

  EmbeddingSequence a = audio;
  EmbeddingSequence t = text;
  constexpr std::size_t kBaselinePairs = 2000;

  OptimizationTrace trace;
  trace.steps = steps;
  trace.learning_rate = learning_rate;
  trace.seed = seed;
  trace.losses.reserve(steps + 1);
  trace.z_best.reserve(steps + 1);

  GradientPair grad = consistency_grad(a, t, metric);
  const double initial = grad.loss;

  auto record = [&](double loss) {
    // Fixed baseline seed: the z trace tracks the loss, not baseline
    // resampling noise.
    BaselineStats base =
        baseline_stats(a, t, metric, kBaselinePairs, seed);
    trace.losses.push_back(loss);
    trace.z_best.push_back(z_score(loss, base));
  };
  record(initial);

  for (std::size_t step = 1; step <= steps; ++step) {
    if (side == UpdateSide::AudioOnly || side == UpdateSide::Both) {
      for (std::size_t c = 0; c < a.data().size(); ++c) {
        a.data()[c] -= learning_rate * grad.d_audio.data[c];
      }
    }
    if (side == UpdateSide::TextOnly || side == UpdateSide::Both) {
      for (std::size_t c = 0; c < t.data().size(); ++c) {
        t.data()[c] -= learning_rate * grad.d_text.data[c];
      }
    }
    grad = consistency_grad(a, t, metric);
    if (!std::isfinite(grad.loss) || grad.loss > 10.0 * initial) {
      throw DivergenceDetected(
          "loss " + std::to_string(grad.loss) + " exceeded 10x initial " +
              std::to_string(initial) + " at step " + std::to_string(step) +
              "; reduce the learning rate",
          step);
    }
    record(grad.loss);
  }
  return trace;
}

}  // namespace malign
