#ifndef MALIGN_SYNTH_HPP
#define MALIGN_SYNTH_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "malign/rng.hpp"
#include "malign/types.hpp"

namespace malign {

// Instance with a known ground-truth alignment:
// audio[i] = text[planted[i]] + Gaussian(0, noise_sigma^2) noise.
struct PlantedInstance {
  EmbeddingSequence audio;
  EmbeddingSequence text;
  Alignment planted;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

// Uniformly random monotone non-decreasing index sequence of length n
// over {0..m-1}, via the stars-and-bars bijection with combinations.
Alignment random_monotone_alignment(std::size_t n, std::size_t m, Rng& rng);

// Text frames are i.i.d. standard Gaussian; the planted path is uniform
// over all binomial(n+m-1, n) monotone sequences. Draw order is fixed
// (text, then path, then noise), so one seed yields the same text and
// path at every noise level.
PlantedInstance generate_planted(std::size_t n, std::size_t m, std::size_t d,
                                 double noise_sigma, std::uint64_t seed);

enum class UpdateSide { AudioOnly, TextOnly, Both };

std::string_view update_side_name(UpdateSide side);
UpdateSide update_side_from_name(std::string_view name);

struct OptimizationTrace {
  std::vector<double> losses;  // steps + 1 entries, initial point included
  std::vector<double> z_best;  // same length; fixed-seed baseline per step
  std::size_t steps = 0;
  double learning_rate = 0.0;
  std::uint64_t seed = 0;
};

// Plain gradient descent on the best-alignment consistency loss using
// the pass-through gradient, updating the selected side(s) in place on
// working copies. SquaredL2 only. The per-step z_best reuses `seed` for
// its baseline so the trace reflects loss movement, not resampling
// noise. Throws DivergenceDetected when the loss exceeds 10x its
// initial value.
OptimizationTrace optimize_embeddings(const EmbeddingSequence& audio,
                                      const EmbeddingSequence& text,
                                      FrameMetric metric, std::size_t steps,
                                      double learning_rate, UpdateSide side,
                                      std::uint64_t seed);

// I.i.d. standard Gaussian sequence, row-major draw order.
EmbeddingSequence random_gaussian_sequence(std::size_t len, std::size_t dim,
                                           Rng& rng);

}  // namespace malign

#endif  // MALIGN_SYNTH_HPP
