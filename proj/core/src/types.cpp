#include "malign/types.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace malign {

std::string_view metric_name(FrameMetric metric) {
  switch (metric) {
    case FrameMetric::SquaredL2:
      return "sql2";
    case FrameMetric::L2:
      return "l2";
    case FrameMetric::L1:
      return "l1";
  }
  return "sql2";
}

FrameMetric metric_from_name(std::string_view name) {
  if (name == "sql2") return FrameMetric::SquaredL2;
  if (name == "l2") return FrameMetric::L2;
  if (name == "l1") return FrameMetric::L1;
  throw ValidationError("unknown metric: " + std::string(name));
}

EmbeddingSequence::EmbeddingSequence(std::size_t len, std::size_t dim)
    : len_(len), dim_(dim), data_(len * dim, 0.0) {
  if (len == 0 || dim == 0) {
    throw ValidationError("embedding sequence must have len >= 1, dim >= 1");
  }
}

EmbeddingSequence::EmbeddingSequence(std::size_t len, std::size_t dim,
                                     std::vector<double> data)
    : len_(len), dim_(dim), data_(std::move(data)) {
  if (len == 0 || dim == 0) {
    throw ValidationError("embedding sequence must have len >= 1, dim >= 1");
  }
  if (data_.size() != len * dim) {
    throw ValidationError("embedding data has " +
                          std::to_string(data_.size()) +
                          " values, expected " + std::to_string(len * dim));
  }
}

EmbeddingSequence EmbeddingSequence::from_rows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw ValidationError("embedding sequence must have len >= 1, dim >= 1");
  }
  std::size_t dim = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw ValidationError("ragged rows: expected uniform dimension " +
                            std::to_string(dim));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return EmbeddingSequence(rows.size(), dim, std::move(flat));
}

void EmbeddingSequence::validate() const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw ValidationError("non-finite component at frame " +
                            std::to_string(i / dim_) + ", coordinate " +
                            std::to_string(i % dim_));
    }
  }
}

Alignment Alignment::identity(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return Alignment(std::move(idx), n);
}

void Alignment::validate() const {
  if (m_text == 0) {
    throw ValidationError("alignment requires m_text >= 1");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= m_text) {
      throw IndexError("alignment index " + std::to_string(indices[i]) +
                       " at position " + std::to_string(i) +
                       " out of range [0, " + std::to_string(m_text) + ")");
    }
    if (i > 0 && indices[i] < indices[i - 1]) {
      throw ValidationError("alignment not monotone at position " +
                            std::to_string(i));
    }
  }
}

}  // namespace malign
