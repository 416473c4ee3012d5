#include "malign/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "malign/rng.hpp"

namespace malign {

GradientPair consistency_grad(const EmbeddingSequence& audio,
                              const EmbeddingSequence& text,
                              FrameMetric metric) {
  validate_pair(audio, text);
  BestAlignmentResult best = solve_optimized(audio, text, metric);

  const std::size_t n = audio.len(), m = text.len(), d = audio.dim();
  GradientPair out;
  out.d_audio = Grid(n, d);
  out.d_text = Grid(m, d);
  out.loss = best.loss;

  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = best.path[i];
    const double* u = audio.frame(i).data();
    const double* v = text.frame(j).data();
    double* ga = out.d_audio.row(i).data();
    double* gt = out.d_text.row(j).data();
    switch (metric) {
      case FrameMetric::SquaredL2:
        for (std::size_t k = 0; k < d; ++k) {
          double g = 2.0 * inv_n * (u[k] - v[k]);
          ga[k] += g;
          gt[k] -= g;
        }
        break;
      case FrameMetric::L2: {
        double dist = detail::metric_kernel(metric, u, v, d);
        if (dist == 0.0) {
          throw NonDifferentiablePoint(
              "L2 gradient undefined: audio frame " + std::to_string(i) +
              " coincides with text frame " + std::to_string(j));
        }
        for (std::size_t k = 0; k < d; ++k) {
          double g = inv_n * (u[k] - v[k]) / dist;
          ga[k] += g;
          gt[k] -= g;
        }
        break;
      }
      case FrameMetric::L1: {
        double dist = detail::metric_kernel(metric, u, v, d);
        if (dist == 0.0) {
          throw NonDifferentiablePoint(
              "L1 gradient undefined: audio frame " + std::to_string(i) +
              " coincides with text frame " + std::to_string(j));
        }
        for (std::size_t k = 0; k < d; ++k) {
          double diff = u[k] - v[k];
          double s = (diff > 0.0) ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
          ga[k] += inv_n * s;
          gt[k] -= inv_n * s;
        }
        break;
      }
    }
  }
  out.path = std::move(best.path);
  return out;
}

FdCheckReport finite_difference_check(const EmbeddingSequence& audio,
                                      const EmbeddingSequence& text,
                                      FrameMetric metric, double step,
                                      const FdCheckOptions& options) {
  validate_pair(audio, text);
  if (!(step > 0.0)) {
    throw ValidationError("finite-difference step must be > 0");
  }
  GradientPair grad = consistency_grad(audio, text, metric);

  const std::size_t n = audio.len(), m = text.len(), d = audio.dim();
  const std::size_t total = (n + m) * d;

  std::vector<std::size_t> selected;
  if (total > options.max_components) {
    Rng rng(mix_seed(options.seed, total));
    selected = sample_combination(total, options.max_components, rng);
  } else {
    selected.resize(total);
    for (std::size_t c = 0; c < total; ++c) selected[c] = c;
  }

  EmbeddingSequence audio_work = audio;
  EmbeddingSequence text_work = text;

  FdCheckReport report;
  report.step = step;
  report.components_total = total;
  report.components_checked = selected.size();

  for (std::size_t c : selected) {
    const bool is_audio = c < n * d;
    std::vector<double>& buf =
        is_audio ? audio_work.data() : text_work.data();
    const std::size_t flat = is_audio ? c : c - n * d;
    const double saved = buf[flat];
    const double analytic = is_audio
                                ? grad.d_audio.data[flat]
                                : grad.d_text.data[flat];

    buf[flat] = saved + step;
    BestAlignmentResult plus = solve_optimized(audio_work, text_work, metric);
    buf[flat] = saved - step;
    BestAlignmentResult minus = solve_optimized(audio_work, text_work, metric);
    buf[flat] = saved;

    if (plus.path != grad.path || minus.path != grad.path) {
      report.tie_proximal = true;
    }
    double numeric = (plus.loss - minus.loss) / (2.0 * step);
    double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-12});
    double rel = std::abs(analytic - numeric) / denom;
    report.max_rel_error = std::max(report.max_rel_error, rel);
  }
  return report;
}

}  // namespace malign
