#include "malign/metrics.hpp"

#include <cmath>
#include <string>

#include "malign/numeric.hpp"

namespace malign {

namespace detail {

double metric_kernel(FrameMetric metric, const double* u, const double* v,
                     std::size_t dim) {
  double acc = 0.0;
  switch (metric) {
    case FrameMetric::SquaredL2:
      for (std::size_t k = 0; k < dim; ++k) {
        double diff = u[k] - v[k];
        acc += diff * diff;
      }
      return acc;
    case FrameMetric::L2:
      for (std::size_t k = 0; k < dim; ++k) {
        double diff = u[k] - v[k];
        acc += diff * diff;
      }
      return std::sqrt(acc);
    case FrameMetric::L1:
      for (std::size_t k = 0; k < dim; ++k) {
        acc += std::abs(u[k] - v[k]);
      }
      return acc;
  }
  return acc;
}

}  // namespace detail

double frame_distance(FrameMetric metric, std::span<const double> u,
                      std::span<const double> v) {
  if (u.size() != v.size()) {
    throw DimensionError("frame dimensions differ: " +
                         std::to_string(u.size()) + " vs " +
                         std::to_string(v.size()));
  }
  for (double x : u) {
    if (!std::isfinite(x)) throw ValidationError("non-finite component in u");
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw ValidationError("non-finite component in v");
  }
  return detail::metric_kernel(metric, u.data(), v.data(), u.size());
}

void validate_pair(const EmbeddingSequence& audio,
                   const EmbeddingSequence& text) {
  audio.validate();
  text.validate();
  if (audio.dim() != text.dim()) {
    throw DimensionError("audio dim " + std::to_string(audio.dim()) +
                         " != text dim " + std::to_string(text.dim()));
  }
}

double aligned_loss(const EmbeddingSequence& audio,
                    const EmbeddingSequence& text, const Alignment& a,
                    FrameMetric metric) {
  validate_pair(audio, text);
  if (a.indices.size() != audio.len()) {
    throw LengthError("alignment length " + std::to_string(a.indices.size()) +
                      " != audio length " + std::to_string(audio.len()));
  }
  const std::size_t dim = audio.dim();
  NeumaierSum sum;
  for (std::size_t i = 0; i < audio.len(); ++i) {
    std::size_t j = a.indices[i];
    if (j >= text.len()) {
      throw IndexError("alignment index " + std::to_string(j) +
                       " out of range for text length " +
                       std::to_string(text.len()));
    }
    sum.add(detail::metric_kernel(metric, audio.frame(i).data(),
                                  text.frame(j).data(), dim));
  }
  return sum.value() / static_cast<double>(audio.len());
}

}  // namespace malign
