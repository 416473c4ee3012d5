#ifndef MALIGN_GRADIENT_HPP
#define MALIGN_GRADIENT_HPP

#include <cstdint>

#include "malign/solver.hpp"
#include "malign/types.hpp"

namespace malign {

// Pass-through gradient of the best-alignment loss: the optimal path is
// computed in the forward pass and then held fixed while the aligned
// loss is differentiated with respect to every embedding component.
struct GradientPair {
  Grid d_audio;  // n x d
  Grid d_text;   // m x d; rows of unused text frames are exactly zero
  double loss = 0.0;
  Alignment path;
};

// Throws NonDifferentiablePoint for the L2/L1 metrics when an aligned
// pair sits at zero distance.
GradientPair consistency_grad(const EmbeddingSequence& audio,
                              const EmbeddingSequence& text,
                              FrameMetric metric);

struct FdCheckOptions {
  // Components to probe; above this, a seeded random subsample is used.
  std::size_t max_components = 48;
  std::uint64_t seed = 0x5EED;
};

struct FdCheckReport {
  double max_rel_error = 0.0;
  // True when some perturbation changed the optimal path: the argmin is
  // near a tie and the central difference straddles a kink.
  bool tie_proximal = false;
  std::size_t components_checked = 0;
  std::size_t components_total = 0;
  double step = 0.0;
};

// Central-difference verification of consistency_grad against the full
// min-over-alignments loss (recomputed via solve_optimized per probe).
// Relative error per component: |a - n| / max(|a|, |n|, 1e-12).
FdCheckReport finite_difference_check(const EmbeddingSequence& audio,
                                      const EmbeddingSequence& text,
                                      FrameMetric metric, double step,
                                      const FdCheckOptions& options = {});

}  // namespace malign

#endif  // MALIGN_GRADIENT_HPP
