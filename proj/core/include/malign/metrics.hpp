#ifndef MALIGN_METRICS_HPP
#define MALIGN_METRICS_HPP

#include <span>

#include "malign/types.hpp"

namespace malign {

// Frame-wise distance between two vectors of equal dimension.
// Throws DimensionError on a dimension mismatch and ValidationError on
// non-finite input.
double frame_distance(FrameMetric metric, std::span<const double> u,
                      std::span<const double> v);

// Checks that both sequences are non-empty, finite, and share one
// embedding dimension. Throws DimensionError / ValidationError.
void validate_pair(const EmbeddingSequence& audio,
                   const EmbeddingSequence& text);

// Average frame distance between audio and the up-sampling of text
// selected by a: (1/len) * sum_i d(audio[i], text[a[i]]).
// Throws LengthError if a has the wrong length, IndexError if an entry
// points outside text.
double aligned_loss(const EmbeddingSequence& audio,
                    const EmbeddingSequence& text, const Alignment& a,
                    FrameMetric metric);

namespace detail {

// Unchecked distance kernel for hot loops; callers validate inputs once.
double metric_kernel(FrameMetric metric, const double* u, const double* v,
                     std::size_t dim);

}  // namespace detail

}  // namespace malign

#endif  // MALIGN_METRICS_HPP
