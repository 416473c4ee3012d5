#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "malign/solver.hpp"
#include "malign/synth.hpp"
#include "test_util.hpp"

using namespace malign;
using testutil::rel_diff;
using testutil::seq1;

namespace {

const std::vector<FrameMetric> kMetrics{FrameMetric::SquaredL2,
                                        FrameMetric::L2, FrameMetric::L1};

}  // namespace

TEST_CASE("brute force on the 4x2 fixture") {
  auto audio = seq1({0, 1, 1, 2});
  auto text = seq1({0, 2});
  auto r = brute_force_best(audio, text, FrameMetric::SquaredL2);
  CHECK(r.loss == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.path.indices == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(r.solver == Solver::BruteForce);
  CHECK(count_monotone_alignments(4, 2, 1000) == 5);

  // The five candidates and their unnormalized sums, by hand:
  // (0000)=6 (0001)=2 (0011)=2 (0111)=2 (1111)=6.
  Alignment all_zero({0, 0, 0, 0}, 2);
  CHECK(aligned_loss(audio, text, all_zero, FrameMetric::SquaredL2) * 4 ==
        6.0);
}

TEST_CASE("brute force degenerate shapes") {
  Rng rng(5);
  auto audio = testutil::random_seq(4, 3, rng);
  SUBCASE("identical sequences give the zero-loss identity path") {
    for (FrameMetric m : kMetrics) {
      auto r = brute_force_best(audio, audio, m);
      CHECK(r.loss == 0.0);
      CHECK(r.path == Alignment::identity(4));
    }
  }
  SUBCASE("single text frame forces the all-zeros path") {
    auto text = testutil::random_seq(1, 3, rng);
    auto r = brute_force_best(audio, text, FrameMetric::SquaredL2);
    CHECK(r.path.indices == std::vector<std::size_t>(4, 0));
    double mean = 0;
    for (int i = 0; i < 4; ++i) {
      mean += frame_distance(FrameMetric::SquaredL2, audio.frame(i),
                             text.frame(0));
    }
    CHECK(rel_diff(r.loss, mean / 4) < 1e-15);
  }
}

TEST_CASE("brute force enumeration cap") {
  Rng rng(6);
  auto audio = testutil::random_seq(30, 2, rng);
  auto text = testutil::random_seq(30, 2, rng);
  CHECK_THROWS_AS(brute_force_best(audio, text, FrameMetric::SquaredL2),
                  InstanceTooLarge);
  auto small_audio = testutil::random_seq(4, 2, rng);
  auto small_text = testutil::random_seq(2, 2, rng);
  CHECK_THROWS_AS(
      brute_force_best(small_audio, small_text, FrameMetric::SquaredL2, 4),
      InstanceTooLarge);
}

TEST_CASE("naive solver reproduces the fixture and degenerate cases") {
  auto audio = seq1({0, 1, 1, 2});
  auto text = seq1({0, 2});
  auto r = solve_naive(audio, text, FrameMetric::SquaredL2);
  CHECK(r.loss == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.path.indices == std::vector<std::size_t>{0, 0, 0, 1});

  // Single audio frame: the path is the (smallest) global argmin.
  auto one = seq1({1.4});
  auto t = seq1({0, 1, 3});
  auto r1 = solve_naive(one, t, FrameMetric::SquaredL2);
  CHECK(r1.path.indices == std::vector<std::size_t>{1});
  CHECK(rel_diff(r1.loss, 0.16) < 1e-12);
}

TEST_CASE("oracle equivalence: naive vs brute force on small instances") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng.uniform_u64(6);
    std::size_t m = 1 + rng.uniform_u64(6);
    std::size_t d = 1 + rng.uniform_u64(4);
    auto audio = testutil::random_seq(n, d, rng);
    auto text = testutil::random_seq(m, d, rng);
    for (FrameMetric metric : kMetrics) {
      auto oracle = brute_force_best(audio, text, metric);
      auto dp = solve_naive(audio, text, metric);
      CHECK(rel_diff(oracle.loss, dp.loss) < 1e-9);
      CHECK(oracle.path == dp.path);
    }
  }
}

TEST_CASE("oracle equivalence with deliberate ties") {
  // Repeated values force argmin ties; both routes must break them
  // toward the smallest index.
  Rng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng.uniform_u64(5);
    std::size_t m = 2 + rng.uniform_u64(4);
    EmbeddingSequence audio(n, 1), text(m, 1);
    for (auto& x : audio.data()) x = static_cast<double>(rng.uniform_u64(3));
    for (auto& x : text.data()) x = static_cast<double>(rng.uniform_u64(3));
    auto oracle = brute_force_best(audio, text, FrameMetric::SquaredL2);
    auto dp = solve_naive(audio, text, FrameMetric::SquaredL2);
    auto opt = solve_optimized(audio, text, FrameMetric::SquaredL2);
    CHECK(oracle.path == dp.path);
    CHECK(dp.path == opt.path);
    CHECK(oracle.loss == dp.loss);
  }
}

TEST_CASE("solver equivalence: optimized vs naive") {
  Rng rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng.uniform_u64(40);
    std::size_t m = 1 + rng.uniform_u64(20);
    std::size_t d = 1 + rng.uniform_u64(8);
    auto audio = testutil::random_seq(n, d, rng);
    auto text = testutil::random_seq(m, d, rng);
    for (FrameMetric metric : kMetrics) {
      auto a = solve_naive(audio, text, metric);
      auto b = solve_optimized(audio, text, metric);
      CHECK(rel_diff(a.loss, b.loss) < 1e-12);
      CHECK(a.path == b.path);
      CHECK(b.solver == Solver::Optimized);
    }
  }
}

TEST_CASE("loss-only mode matches path mode") {
  Rng rng(404);
  auto audio = testutil::random_seq(200, 8, rng);
  auto text = testutil::random_seq(50, 8, rng);
  for (FrameMetric metric : kMetrics) {
    double lo = solve_optimized_loss(audio, text, metric);
    double lp = solve_optimized(audio, text, metric).loss;
    CHECK(rel_diff(lo, lp) < 1e-12);
  }
}

TEST_CASE("distance_matrix values and DP consistency") {
  auto audio = seq1({0, 1});
  auto text = seq1({0, 2});
  Grid g = distance_matrix(audio, text, FrameMetric::SquaredL2);
  CHECK(g.at(0, 0) == 0.0);
  CHECK(g.at(0, 1) == 4.0);
  CHECK(g.at(1, 0) == 1.0);
  CHECK(g.at(1, 1) == 1.0);

  Rng rng(505);
  auto a6 = testutil::random_seq(6, 2, rng);
  auto t4 = testutil::random_seq(4, 2, rng);
  Grid d = distance_matrix(a6, t4, FrameMetric::SquaredL2);
  CHECK(d.at(2, 3) == frame_distance(FrameMetric::SquaredL2, a6.frame(2),
                                     t4.frame(3)));

  // Minimum over all monotone paths through the grid equals n * loss.
  // Enumerated directly over the matrix, independent of the solvers.
  double best_sum = std::numeric_limits<double>::infinity();
  auto enumerate = [&](auto&& self, std::size_t i, std::size_t lo,
                       double acc) -> void {
    if (i == 6) {
      best_sum = std::min(best_sum, acc);
      return;
    }
    for (std::size_t j = lo; j < 4; ++j) {
      self(self, i + 1, j, acc + d.at(i, j));
    }
  };
  enumerate(enumerate, 0, 0, 0.0);
  auto r = solve_naive(a6, t4, FrameMetric::SquaredL2);
  CHECK(rel_diff(best_sum, r.loss * 6) < 1e-12);

  auto self = distance_matrix(a6, a6, FrameMetric::L2);
  for (std::size_t i = 0; i < 6; ++i) CHECK(self.at(i, i) == 0.0);
}

TEST_CASE("cost matrix rows are non-increasing in j") {
  Rng rng(606);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + rng.uniform_u64(10);
    std::size_t m = 1 + rng.uniform_u64(10);
    std::size_t d = 1 + rng.uniform_u64(5);
    auto audio = testutil::random_seq(n, d, rng);
    auto text = testutil::random_seq(m, d, rng);
    CostMatrix table =
        compute_cost_matrix(audio, text, FrameMetric::SquaredL2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 < m; ++j) {
        CHECK(table.at(i, j + 1) <= table.at(i, j));
      }
    }
    CHECK(rel_diff(table.at(n - 1, m - 1) / n,
                   solve_optimized_loss(audio, text, FrameMetric::SquaredL2))
          < 1e-12);
  }
}

TEST_CASE("optimality certificate against sampled alignments") {
  Rng rng(707);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + rng.uniform_u64(12);
    std::size_t m = 1 + rng.uniform_u64(8);
    std::size_t d = 1 + rng.uniform_u64(6);
    auto audio = testutil::random_seq(n, d, rng);
    auto text = testutil::random_seq(m, d, rng);
    auto r = solve_optimized(audio, text, FrameMetric::SquaredL2);
    CHECK(rel_diff(r.loss,
                   aligned_loss(audio, text, r.path, FrameMetric::SquaredL2))
          < 1e-12);
    for (int s = 0; s < 100; ++s) {
      Alignment a = random_monotone_alignment(n, m, rng);
      CHECK(aligned_loss(audio, text, a, FrameMetric::SquaredL2) >=
            r.loss - 1e-12);
    }
  }
}

TEST_CASE("planted alignment recovery") {
  Rng rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.uniform_u64(16);
    std::size_t m = 1 + rng.uniform_u64(8);
    auto inst = generate_planted(n, m, 6, 0.0, rng.next_u64());
    auto r = solve_optimized(inst.audio, inst.text, FrameMetric::SquaredL2);
    CHECK(r.loss <= 1e-12);
  }

  // With distinct text frames and a planted path that is the smallest
  // zero-loss alignment, recovery is exact. An exact-copy instance with
  // distinct frames has a unique zero path, so any planted path works.
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = generate_planted(12, 5, 4, 0.0, 9000 + trial);
    auto r = solve_optimized(inst.audio, inst.text, FrameMetric::SquaredL2);
    CHECK(r.path == inst.planted);
  }
}

TEST_CASE("scaling by c > 0 scales squared-L2 loss by c^2") {
  Rng rng(909);
  auto audio = testutil::random_seq(8, 3, rng);
  auto text = testutil::random_seq(5, 3, rng);
  auto base = solve_optimized(audio, text, FrameMetric::SquaredL2);

  for (double c : {2.0, 0.5, 3.0}) {
    EmbeddingSequence sa = audio, st = text;
    for (auto& x : sa.data()) x *= c;
    for (auto& x : st.data()) x *= c;
    auto scaled = solve_optimized(sa, st, FrameMetric::SquaredL2);
    CHECK(rel_diff(scaled.loss, c * c * base.loss) < 1e-12);
    CHECK(scaled.path == base.path);
  }
}

TEST_CASE("solver names round-trip") {
  for (Solver s : {Solver::Naive, Solver::Optimized, Solver::BruteForce}) {
    CHECK(solver_from_name(solver_name(s)) == s);
  }
  CHECK_THROWS_AS(solver_from_name("quantum"), ValidationError);
}
