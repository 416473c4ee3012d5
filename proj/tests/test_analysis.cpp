#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "malign/analysis.hpp"
#include "malign/synth.hpp"
#include "test_util.hpp"

using namespace malign;
using testutil::rel_diff;

TEST_CASE("baseline rejects degenerate samples") {
  EmbeddingSequence constant(4, 2);
  for (auto& x : constant.data()) x = 1.5;
  CHECK_THROWS_AS(
      baseline_stats(constant, constant, FrameMetric::SquaredL2, 100, 7),
      DegenerateBaseline);
}

TEST_CASE("baseline is deterministic for a fixed seed") {
  Rng rng(60);
  auto audio = testutil::random_seq(12, 4, rng);
  auto text = testutil::random_seq(7, 4, rng);
  auto a = baseline_stats(audio, text, FrameMetric::SquaredL2, 500, 99);
  auto b = baseline_stats(audio, text, FrameMetric::SquaredL2, 500, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.std == b.std);
  auto c = baseline_stats(audio, text, FrameMetric::SquaredL2, 500, 100);
  CHECK(a.mean != c.mean);
}

TEST_CASE("exhaustive baseline equals the grid mean") {
  Rng rng(61);
  auto audio = testutil::random_seq(9, 3, rng);
  auto text = testutil::random_seq(5, 3, rng);
  auto stats = baseline_stats(audio, text, FrameMetric::SquaredL2, 0, 0,
                              BaselineMode::Exhaustive);
  CHECK(stats.n_pairs == 45);
  Grid d = distance_matrix(audio, text, FrameMetric::SquaredL2);
  double mean = 0;
  for (double x : d.data) mean += x;
  mean /= 45.0;
  CHECK(rel_diff(stats.mean, mean) < 1e-12);
}

TEST_CASE("baseline requires n_pairs >= 2 in sampled mode") {
  Rng rng(62);
  auto audio = testutil::random_seq(3, 2, rng);
  CHECK_THROWS_AS(baseline_stats(audio, audio, FrameMetric::L2, 1, 0),
                  ValidationError);
}

TEST_CASE("framewise alignment formula") {
  CHECK(framewise_alignment(4, 2).indices ==
        std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(framewise_alignment(5, 5) == Alignment::identity(5));
  CHECK(framewise_alignment(5, 2).indices ==
        std::vector<std::size_t>{0, 0, 0, 1, 1});
  // Legal even when text is longer than audio (skips allowed).
  auto a = framewise_alignment(3, 7);
  CHECK_NOTHROW(a.validate());
  CHECK(a.indices == std::vector<std::size_t>{0, 2, 4});
}

TEST_CASE("z-score arithmetic") {
  BaselineStats base;
  base.mean = 10.0;
  base.std = 2.0;
  CHECK(z_score(10.0, base) == 0.0);
  CHECK(z_score(8.0, base) == -1.0);
  CHECK(z_score(13.0, base) == 1.5);
  CHECK(describe_z(-3.06) == "stronger than random");
  CHECK(describe_z(0.0) == "no better than random");
  CHECK(describe_z(1.2) == "no better than random");
}

TEST_CASE("consistency report wiring") {
  Rng rng(63);
  auto audio = testutil::random_seq(20, 4, rng);
  auto text = testutil::random_seq(8, 4, rng);
  auto report = consistency_report("layer1", audio, text,
                                   FrameMetric::SquaredL2, 1000, 77);
  CHECK(report.label == "layer1");
  CHECK(rel_diff(report.loss_best,
                 solve_optimized(audio, text, FrameMetric::SquaredL2).loss) <
        1e-15);
  CHECK(rel_diff(report.loss_framewise,
                 aligned_loss(audio, text, framewise_alignment(20, 8),
                              FrameMetric::SquaredL2)) < 1e-15);
  CHECK(report.z_best == z_score(report.loss_best, report.baseline));
  CHECK(std::isfinite(report.z_framewise));
}

TEST_CASE("best alignment never scores above the framewise alignment") {
  Rng rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng.uniform_u64(20);
    std::size_t m = 1 + rng.uniform_u64(20);
    auto audio = testutil::random_seq(n, 3, rng);
    auto text = testutil::random_seq(m, 3, rng);
    auto report = consistency_report("t", audio, text,
                                     FrameMetric::SquaredL2, 200, trial);
    CHECK(report.z_best <= report.z_framewise);
  }
}

TEST_CASE("selection bias probe calibration") {
  auto summary = selection_bias_probe(20, 8, 4, 50, 1234, 500);
  CHECK(summary.trials == 50);
  CHECK(summary.mean_z_framewise > -0.2);
  CHECK(summary.mean_z_framewise < 0.2);
  CHECK(summary.mean_z_best < 0.0);
}

TEST_CASE("selection bias probe is deterministic") {
  auto a = selection_bias_probe(8, 4, 3, 1, 55, 200);
  auto b = selection_bias_probe(8, 4, 3, 1, 55, 200);
  CHECK(a.mean_z_best == b.mean_z_best);
  CHECK(a.mean_z_framewise == b.mean_z_framewise);
  CHECK_THROWS_AS(selection_bias_probe(0, 4, 3, 1, 55), ValidationError);
}
