#ifndef MALIGN_TEST_UTIL_HPP
#define MALIGN_TEST_UTIL_HPP

#include <vector>

#include "malign/rng.hpp"
#include "malign/synth.hpp"
#include "malign/types.hpp"

namespace testutil {

inline malign::EmbeddingSequence seq(
    const std::vector<std::vector<double>>& rows) {
  return malign::EmbeddingSequence::from_rows(rows);
}

// 1-D sequence from scalars.
inline malign::EmbeddingSequence seq1(const std::vector<double>& values) {
  malign::EmbeddingSequence s(values.size(), 1);
  s.data() = values;
  return s;
}

inline malign::EmbeddingSequence random_seq(std::size_t n, std::size_t d,
                                            malign::Rng& rng) {
  return malign::random_gaussian_sequence(n, d, rng);
}

inline double rel_diff(double a, double b) {
  double denom = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / denom;
}

}  // namespace testutil

#endif  // MALIGN_TEST_UTIL_HPP
