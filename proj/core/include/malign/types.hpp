#ifndef MALIGN_TYPES_HPP
#define MALIGN_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "malign/errors.hpp"

namespace malign {

// Frame-wise distance between one audio frame and one text frame.
enum class FrameMetric {
  SquaredL2,  // sum of squared component differences (default)
  L2,         // Euclidean distance
  L1,         // sum of absolute component differences
};

std::string_view metric_name(FrameMetric metric);
FrameMetric metric_from_name(std::string_view name);

// Dense row-major matrix of doubles. Used for distance matrices and
// gradient grids.
struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Grid() = default;
  Grid(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<double> row(std::size_t r) {
    return {data.data() + r * cols, cols};
  }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }
};

// A length-len list of dim-dimensional real vectors, stored frame-major.
class EmbeddingSequence {
 public:
  // Zero-filled sequence.
  EmbeddingSequence(std::size_t len, std::size_t dim);
  // Takes ownership of flat frame-major data; data.size() must equal
  // len * dim. Finiteness is checked separately (see validate()).
  EmbeddingSequence(std::size_t len, std::size_t dim,
                    std::vector<double> data);

  static EmbeddingSequence from_rows(
      const std::vector<std::vector<double>>& rows);

  std::size_t len() const noexcept { return len_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> frame(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<double> frame(std::size_t i) {
    return {data_.data() + i * dim_, dim_};
  }

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

  // Throws ValidationError if any component is NaN or infinite.
  void validate() const;

 private:
  std::size_t len_;
  std::size_t dim_;
  std::vector<double> data_;
};

// Monotone non-decreasing map from audio frames to text frame indices.
// Text indices may repeat or be skipped; there is no requirement to
// start at 0 or end at m_text - 1.
struct Alignment {
  std::vector<std::size_t> indices;
  std::size_t m_text = 0;

  Alignment() = default;
  Alignment(std::vector<std::size_t> idx, std::size_t m)
      : indices(std::move(idx)), m_text(m) {}

  static Alignment identity(std::size_t n);

  std::size_t size() const noexcept { return indices.size(); }
  std::size_t operator[](std::size_t i) const { return indices[i]; }

  // Throws ValidationError on a non-monotone sequence or m_text == 0,
  // IndexError on an out-of-range entry.
  void validate() const;

  friend bool operator==(const Alignment& a, const Alignment& b) {
    return a.indices == b.indices && a.m_text == b.m_text;
  }
};

}  // namespace malign

#endif  // MALIGN_TYPES_HPP
