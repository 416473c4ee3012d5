#include "malign/solver.hpp"

#include <limits>
#include <string>

#include "malign/numeric.hpp"

namespace malign {

std::string_view solver_name(Solver s) {
  switch (s) {
    case Solver::Naive:
      return "naive";
    case Solver::Optimized:
      return "optimized";
    case Solver::BruteForce:
      return "brute";
  }
  return "optimized";
}

Solver solver_from_name(std::string_view name) {
  if (name == "naive") return Solver::Naive;
  if (name == "optimized") return Solver::Optimized;
  if (name == "brute") return Solver::BruteForce;
  throw ValidationError("unknown solver: " + std::string(name));
}

Grid distance_matrix(const EmbeddingSequence& audio,
                     const EmbeddingSequence& text, FrameMetric metric) {
  validate_pair(audio, text);
  const std::size_t n = audio.len(), m = text.len(), d = audio.dim();
  Grid out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const double* u = audio.frame(i).data();
    for (std::size_t j = 0; j < m; ++j) {
      out.at(i, j) = detail::metric_kernel(metric, u, text.frame(j).data(), d);
    }
  }
  return out;
}

std::uint64_t count_monotone_alignments(std::size_t n, std::size_t m,
                                        std::uint64_t cap) {
  // binomial(n + m - 1, k) with k = min(n, m - 1); the partial products
  // are non-decreasing up to k, so we can bail out at the cap without
  // overflow.
  std::uint64_t a = static_cast<std::uint64_t>(n) + m - 1;
  std::uint64_t k = std::min<std::uint64_t>(n, m - 1);
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (c > cap || c > std::numeric_limits<std::uint64_t>::max() / (a - i)) {
      return cap + 1;
    }
    c = c * (a - i) / (i + 1);
  }
  return c;
}

BestAlignmentResult brute_force_best(const EmbeddingSequence& audio,
                                     const EmbeddingSequence& text,
                                     FrameMetric metric, std::uint64_t cap) {
  validate_pair(audio, text);
  const std::size_t n = audio.len(), m = text.len(), d = audio.dim();
  std::uint64_t count = count_monotone_alignments(n, m, cap);
  if (count > cap) {
    throw InstanceTooLarge("brute force would enumerate > " +
                           std::to_string(cap) + " alignments for n=" +
                           std::to_string(n) + ", m=" + std::to_string(m));
  }

  // Lexicographic enumeration of monotone non-decreasing sequences;
  // strict < keeps the lexicographically smallest optimum. Candidate
  // sums use the same plain left-to-right accumulation as the DP
  // telescoping, so tie sets match the solvers exactly.
  std::vector<std::size_t> current(n, 0);
  std::vector<std::size_t> best_path;
  double best_sum = std::numeric_limits<double>::infinity();
  for (;;) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += detail::metric_kernel(metric, audio.frame(i).data(),
                                   text.frame(current[i]).data(), d);
    }
    if (sum < best_sum) {
      best_sum = sum;
      best_path = current;
    }
    // Next sequence: bump the last bumpable position, then level the
    // tail to keep monotonicity.
    std::size_t p = n;
    while (p > 0 && current[p - 1] == m - 1) --p;
    if (p == 0) break;
    std::size_t v = current[p - 1] + 1;
    for (std::size_t q = p - 1; q < n; ++q) current[q] = v;
  }

  BestAlignmentResult result;
  result.path = Alignment(std::move(best_path), m);
  result.loss = aligned_loss(audio, text, result.path, metric);
  result.solver = Solver::BruteForce;
  result.n_audio = n;
  result.m_text = m;
  result.dim = d;
  result.metric = metric;
  return result;
}

namespace {

// Recover the path from the argmin table: the choice at (i, j) fixes
// a_i = k and constrains the prefix to text indices <= k.
Alignment backtrack(const CostMatrix& table) {
  const std::size_t n = table.n_audio, m = table.m_text;
  std::vector<std::size_t> path(n, 0);
  std::size_t j = m - 1;
  for (std::size_t i = n; i-- > 0;) {
    j = table.arg(i, j);
    path[i] = j;
  }
  return Alignment(std::move(path), m);
}

BestAlignmentResult finish(const EmbeddingSequence& audio,
                           const EmbeddingSequence& text, FrameMetric metric,
                           Alignment path, Solver solver) {
  BestAlignmentResult result;
  result.loss = aligned_loss(audio, text, path, metric);
  result.path = std::move(path);
  result.solver = solver;
  result.n_audio = audio.len();
  result.m_text = text.len();
  result.dim = audio.dim();
  result.metric = metric;
  return result;
}

}  // namespace

CostMatrix compute_cost_matrix(const EmbeddingSequence& audio,
                               const EmbeddingSequence& text,
                               FrameMetric metric) {
  validate_pair(audio, text);
  const std::size_t n = audio.len(), m = text.len();
  Grid dist = distance_matrix(audio, text, metric);

  CostMatrix table;
  table.n_audio = n;
  table.m_text = m;
  table.values.resize(n * m);
  table.argmin.resize(n * m);

  // Base row: the first audio frame may sit on any text index in the
  // prefix, so C(0, j) = min_{k <= j} d(0, k).
  for (std::size_t j = 0; j < m; ++j) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_k = 0;
    for (std::size_t k = 0; k <= j; ++k) {
      double v = dist.at(0, k);
      if (v < best) {
        best = v;
        best_k = static_cast<std::uint32_t>(k);
      }
    }
    table.values[j] = best;
    table.argmin[j] = best_k;
  }

  // C(i, j) = min_{k <= j} [C(i-1, k) + d(i, k)], literal inner scan.
  for (std::size_t i = 1; i < n; ++i) {
    const double* prev = table.values.data() + (i - 1) * m;
    const double* drow = dist.row(i).data();
    for (std::size_t j = 0; j < m; ++j) {
      double best = std::numeric_limits<double>::infinity();
      std::uint32_t best_k = 0;
      for (std::size_t k = 0; k <= j; ++k) {
        double v = prev[k] + drow[k];
        if (v < best) {
          best = v;
          best_k = static_cast<std::uint32_t>(k);
        }
      }
      table.values[i * m + j] = best;
      table.argmin[i * m + j] = best_k;
    }
  }
  return table;
}

BestAlignmentResult solve_naive(const EmbeddingSequence& audio,
                                const EmbeddingSequence& text,
                                FrameMetric metric) {
  CostMatrix table = compute_cost_matrix(audio, text, metric);
  return finish(audio, text, metric, backtrack(table), Solver::Naive);
}

namespace {

void distance_row(const EmbeddingSequence& audio,
                  const EmbeddingSequence& text, FrameMetric metric,
                  std::size_t i, double* out) {
  const std::size_t m = text.len(), d = audio.dim();
  const double* u = audio.frame(i).data();
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = detail::metric_kernel(metric, u, text.frame(j).data(), d);
  }
}

}  // namespace

BestAlignmentResult solve_optimized(const EmbeddingSequence& audio,
                                    const EmbeddingSequence& text,
                                    FrameMetric metric) {
  validate_pair(audio, text);
  const std::size_t n = audio.len(), m = text.len();

  CostMatrix table;
  table.n_audio = n;
  table.m_text = m;
  table.values.resize(m);  // only the backtracking table is kept in full
  table.argmin.resize(n * m);

  std::vector<double> drow(m), prev(m), cur(m);

  distance_row(audio, text, metric, 0, drow.data());
  {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_k = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (drow[j] < best) {
        best = drow[j];
        best_k = static_cast<std::uint32_t>(j);
      }
      prev[j] = best;
      table.argmin[j] = best_k;
    }
  }

  for (std::size_t i = 1; i < n; ++i) {
    distance_row(audio, text, metric, i, drow.data());
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_k = 0;
    std::uint32_t* arow = table.argmin.data() + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      double v = prev[j] + drow[j];
      if (v < best) {
        best = v;
        best_k = static_cast<std::uint32_t>(j);
      }
      cur[j] = best;
      arow[j] = best_k;
    }
    prev.swap(cur);
  }

  table.values = std::move(prev);  // unused by backtrack; kept for size
  return finish(audio, text, metric, backtrack(table), Solver::Optimized);
}

double solve_optimized_loss(const EmbeddingSequence& audio,
                            const EmbeddingSequence& text,
                            FrameMetric metric) {
  validate_pair(audio, text);
  const std::size_t n = audio.len(), m = text.len();
  std::vector<double> drow(m), prev(m), cur(m);

  distance_row(audio, text, metric, 0, drow.data());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    if (drow[j] < best) best = drow[j];
    prev[j] = best;
  }

  for (std::size_t i = 1; i < n; ++i) {
    distance_row(audio, text, metric, i, drow.data());
    best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      double v = prev[j] + drow[j];
      if (v < best) best = v;
      cur[j] = best;
    }
    prev.swap(cur);
  }
  return prev[m - 1] / static_cast<double>(n);
}

}  // namespace malign
