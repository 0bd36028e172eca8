#include "framecoh/constructions.hpp"
#include "framecoh/equivalence.hpp"
#include "framecoh/frame_io.hpp"
#include "framecoh/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace framecoh;

namespace {

Frame worked_example() { return load_frame(FRAMECOH_FIXTURES "/example_5x10.frame"); }

Eigen::MatrixXcd random_complex(Index m, Index n, std::uint64_t seed) {
  CounterRng rng(seed);
  Eigen::MatrixXcd f(m, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) f(i, j) = cd(rng.normal(), rng.normal());
  }
  return f;
}

WigglePattern random_wiggle(Index n, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<cd> phases;
  for (Index i = 0; i < n; ++i) phases.push_back(std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform()));
  return WigglePattern(std::move(phases));
}

// Minimum average coherence over all 2^N sign patterns, each evaluated from scratch.
double brute_min_nu(const Frame& f) {
  const Index n = f.cols();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) signs[static_cast<std::size_t>(j)] = ((bits >> j) & 1) ? -1 : 1;
    best = std::min(best, oracle::nu(apply_flip(f, FlipPattern(signs)).to_complex()));
  }
  return best;
}

}  // namespace

TEST_CASE("worked example: greedy flip pattern and average coherence") {
  const Frame f = worked_example();
  CHECK(average_coherence(f) == doctest::Approx(17.0 / 45.0).epsilon(1e-12));
  CHECK(worst_case_coherence(f) / std::sqrt(5.0) == doctest::Approx(0.6 / std::sqrt(5.0)).epsilon(1e-12));
  const FlipResult g = linear_time_flip(f);
  CHECK(g.pattern.to_string() == "+-+--++-++");
  CHECK(average_coherence(g.frame) == doctest::Approx(7.0 / 45.0).epsilon(1e-12));
  CHECK(std::abs(average_coherence(g.frame) - 0.1556) <= 5e-4);
}

TEST_CASE("worked example: exhaustive minimum is 1/9") {
  const FlipOracleResult best = exhaustive_flip_oracle(worked_example());
  CHECK(best.min_nu == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(best.min_nu <= 0.1556 + 1e-9);
  CHECK(best.pattern[0] == 1);
  CHECK(average_coherence(best.frame) == doctest::Approx(best.min_nu));
}

TEST_CASE("oracle agrees with brute force over all 2^N patterns, N <= 12") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Index m = 2 + static_cast<Index>(seed % 3);
    const Index n = 5 + static_cast<Index>(seed);
    const Frame real = build_gaussian({m, n, seed});
    CHECK(exhaustive_flip_oracle(real).min_nu == doctest::Approx(brute_min_nu(real)).epsilon(1e-12));
    if (n <= 10) {
      const Frame cplx = Frame::from_complex(random_complex(m, n, seed));
      CHECK(exhaustive_flip_oracle(cplx).min_nu == doctest::Approx(brute_min_nu(cplx)).epsilon(1e-12));
    }
  }
}

TEST_CASE("oracle crosses scan blocks (N > 13) and never loses to the greedy flip") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Frame f = build_gaussian({4, 16, 50 + seed});
    const FlipOracleResult best = exhaustive_flip_oracle(f);
    const FlipResult g = linear_time_flip(f);
    CHECK(best.min_nu <= average_coherence(g.frame) + 1e-12);
    // The oracle's value is realized by its pattern.
    CHECK(average_coherence(apply_flip(f, best.pattern)) == doctest::Approx(best.min_nu).epsilon(1e-12));
  }
}

TEST_CASE("oracle guard") {
  CHECK_THROWS_WITH_AS(exhaustive_flip_oracle(build_gaussian({2, 25, 1})),
                       "exhaustive flip oracle limited to N <= 24 (got N = 25)", std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_flip_oracle(Frame::identity(1)), std::invalid_argument);
}

TEST_CASE("existence of a low-average-coherence flip in the small regime") {
  // M < (N - 1) / (4 ln 4N) holds at N = 20 only for M = 1.
  const Index n = 20;
  REQUIRE(1.0 < (n - 1.0) / (4.0 * std::log(4.0 * n)));
  REQUIRE_FALSE(2.0 < (n - 1.0) / (4.0 * std::log(4.0 * n)));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Frame f = Frame::from_complex(random_complex(1, n, seed));
    const FlipOracleResult best = exhaustive_flip_oracle(f);
    CHECK(best.min_nu <= worst_case_coherence(best.frame) / std::sqrt(1.0) + 1e-12);
  }
}

TEST_CASE("greedy guarantee in its regime: N >= M^2 + 3M + 3") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FlipResult g = linear_time_flip(build_gaussian({5, 50, seed}));
    CHECK(average_coherence(g.frame) <= worst_case_coherence(g.frame) / std::sqrt(5.0));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FlipResult g = linear_time_flip(Frame::from_complex(random_complex(3, 30, seed)));
    CHECK(average_coherence(g.frame) <= worst_case_coherence(g.frame) / std::sqrt(3.0));
  }
}

TEST_CASE("greedy rule: keep on ties, first element always kept") {
  // f2 orthogonal to f1: both choices tie, so it is kept.
  const FlipResult g = linear_time_flip(Frame::identity(3));
  CHECK(g.pattern.to_string() == "+++");
  Eigen::MatrixXd d(2, 2);
  d << 1, 1, 0, 0.1;
  CHECK(linear_time_flip(Frame::from_real(d)).pattern.to_string() == "+-");
  CHECK(linear_time_flip(Frame::identity(1)).pattern.to_string() == "+");
}

TEST_CASE("flip involution is exact and the field is preserved") {
  const Frame f = build_gaussian({6, 20, 8});
  const FlipResult g = linear_time_flip(f);
  const Frame back = apply_flip(g.frame, g.pattern);
  CHECK(back.is_real());
  CHECK(back.real_matrix() == f.real_matrix());
  const Frame c = Frame::from_complex(random_complex(3, 7, 2));
  const FlipPattern p = FlipPattern::parse("+--+-+-");
  CHECK(apply_flip(apply_flip(c, p), p).complex_matrix() == c.complex_matrix());
  CHECK_FALSE(apply_flip(c, p).is_real());
}

TEST_CASE("wiggling preserves column norms, mu and spectral norm") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Frame f = Frame::from_complex(random_complex(4, 12, seed));
    const Frame g = apply_wiggle(f, random_wiggle(12, seed + 100));
    for (Index j = 0; j < 12; ++j) CHECK(std::abs(g.column(j).norm() - f.column(j).norm()) <= 1e-12);
    CHECK(std::abs(worst_case_coherence(g) - worst_case_coherence(f)) <= 1e-12);
    CHECK(std::abs(spectral_norm(g) - spectral_norm(f)) <= 1e-12);
  }
  // Real frames stay real under flips.
  const Frame r = build_gaussian({3, 5, 1});
  CHECK(apply_wiggle(r, WigglePattern::from_flip(FlipPattern::parse("+-+-+"))).is_real());
  CHECK_FALSE(apply_wiggle(r, random_wiggle(5, 3)).is_real());
}

TEST_CASE("average coherence is not wiggle invariant") {
  const Frame f = worked_example();
  const Frame g = apply_flip(f, FlipPattern::parse("+-+--++-++"));
  CHECK(std::abs(average_coherence(f) - average_coherence(g)) > 0.2);
}

TEST_CASE("pattern validation") {
  CHECK_THROWS_AS(FlipPattern({1, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(FlipPattern::parse("+x-"), std::invalid_argument);
  CHECK_THROWS_AS(WigglePattern({cd(1.1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(apply_flip(Frame::identity(3), FlipPattern::all_keep(4)), std::invalid_argument);
  CHECK(FlipPattern::all_keep(3).to_string() == "+++");
  CHECK(WigglePattern::from_flip(FlipPattern::parse("+-")).is_flip());
  CHECK_FALSE(WigglePattern({cd(0, 1)}).is_flip());
  CHECK(FlipPattern::parse("+-") == FlipPattern({1, -1}));
}
