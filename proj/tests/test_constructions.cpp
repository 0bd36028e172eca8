#include "framecoh/bounds.hpp"
#include "framecoh/constructions.hpp"
#include "framecoh/gf2m.hpp"
#include "framecoh/parallel.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace framecoh;

TEST_CASE("gaussian frames: unit columns, deterministic, thread-count independent") {
  const GaussianFrameSpec spec{16, 300, 12345};
  setenv("FRAMECOH_THREADS", "1", 1);
  const Frame serial = build_gaussian(spec);
  setenv("FRAMECOH_THREADS", "4", 1);
  const Frame parallel = build_gaussian(spec);
  unsetenv("FRAMECOH_THREADS");
  CHECK(serial.real_matrix() == parallel.real_matrix());
  CHECK(column_norm_deviation(serial) < 1e-14);
  CHECK(build_gaussian({16, 300, 12346}).real_matrix() != serial.real_matrix());
  // Column n depends only on (seed, n): a wider frame extends a narrower one.
  const Frame wider = build_gaussian({16, 400, 12345});
  CHECK(wider.real_matrix().leftCols(300) == serial.real_matrix());
}

TEST_CASE("gaussian spec validation and regime flag") {
  CHECK_THROWS_AS(build_gaussian({0, 10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_gaussian({3, 1, 1}), std::invalid_argument);
  CHECK_FALSE(GaussianFrameSpec{64, 2048, 0}.in_theorem_regime());  // 60 ln N ~ 457 > 64
  // The regime needs N large: M = 1000 works once (N-1)/(4 ln N) >= 1000.
  CHECK(GaussianFrameSpec{1000, 100000, 0}.in_theorem_regime());
  const GaussianBounds b = gaussian_bounds(10, 2048);
  CHECK(std::isinf(b.mu));  // sqrt(M) <= sqrt(12 ln N): bound vacuous
}

TEST_CASE("gaussian envelopes hold with room at M = 512, N = 2048") {
  const GaussianBounds b = gaussian_bounds(512, 2048);
  const Frame f = build_gaussian({512, 2048, 3});
  CHECK(worst_case_coherence(f) <= b.mu);
  CHECK(average_coherence(f) <= b.nu);
  CHECK(spectral_norm(f) <= b.spectral_norm);
  CHECK(worst_case_coherence(f) >= best_lower_bound(512, 2048, ScalarField::Real) - 1e-12);
}

TEST_CASE("harmonic frames are tight for every sample") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const HarmonicFrame h = build_harmonic({128, 16, seed});
    const double size = static_cast<double>(h.selected_rows.size());
    const double norm = spectral_norm(h.frame);
    CHECK(std::abs(norm * norm - 128.0 / size) <= 1e-9);
    CHECK(column_norm_deviation(h.frame) < 1e-14);
    CHECK(std::is_sorted(h.selected_rows.begin(), h.selected_rows.end()));
  }
}

TEST_CASE("harmonic entries follow exp(2 pi i k l / N) / sqrt|M|") {
  const Frame f = harmonic_frame_from_rows(12, {1, 5, 7});
  const double s = 1.0 / std::sqrt(3.0);
  for (Index l = 0; l < 12; ++l) {
    for (Index r = 0; r < 3; ++r) {
      const double k = r == 0 ? 1 : r == 1 ? 5 : 7;
      const cd expected = s * std::polar(1.0, 2.0 * std::numbers::pi * k * static_cast<double>(l) / 12.0);
      CHECK(std::abs(f.entry(r, l) - expected) < 1e-14);
    }
  }
  CHECK_THROWS_AS(harmonic_frame_from_rows(12, {}), std::invalid_argument);
}

TEST_CASE("harmonic frame with every row is an orthonormal basis") {
  std::vector<Index> all(64);
  for (Index k = 0; k < 64; ++k) all[static_cast<std::size_t>(k)] = k;
  const Frame f = harmonic_frame_from_rows(64, all);
  CHECK(worst_case_coherence(f) < 1e-13);
  CHECK(spectral_norm(f) == doctest::Approx(1.0).epsilon(1e-12));
  // p = 1 keeps every row.
  CHECK(build_harmonic({64, 64, 9}).selected_rows.size() == 64);
}

TEST_CASE("harmonic average coherence closed form") {
  // Gram row sums are N/|M| [0 in M] - 1 over the off-diagonal.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const HarmonicFrame h = build_harmonic({97, 20, seed});
    const double n = 97.0;
    const double size = static_cast<double>(h.selected_rows.size());
    const bool has_zero = h.selected_rows.front() == 0;
    const double expected = has_zero ? (n - size) / (size * (n - 1.0)) : 1.0 / (n - 1.0);
    CHECK(average_coherence(h.frame) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(average_coherence(h.frame) == doctest::Approx(oracle::nu(h.frame.complex_matrix())).epsilon(1e-10));
  }
}

TEST_CASE("harmonic empty selection resamples with a warning") {
  // p = 1/4096: most seeds select nothing at first.
  Warnings warnings;
  const HarmonicFrame h = build_harmonic({4096, 1, 0}, &warnings);
  CHECK_FALSE(h.selected_rows.empty());
  std::uint64_t seed = 0;
  for (; seed < 100; ++seed) {
    Warnings w;
    build_harmonic({4096, 1, seed}, &w);
    if (!w.empty()) break;
  }
  REQUIRE(seed < 100);
  Warnings w;
  build_harmonic({4096, 1, seed}, &w);
  CHECK(w.front().find("empty row selection") != std::string::npos);
}

TEST_CASE("harmonic spec validation and regime flag") {
  CHECK_THROWS_AS(build_harmonic({10, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_harmonic({10, 11, 1}), std::invalid_argument);
  CHECK_FALSE(HarmonicFrameSpec{1024, 64, 0}.in_theorem_regime());  // 16 ln N ~ 111 > 64
  CHECK(HarmonicFrameSpec{1024, 200, 0}.in_theorem_regime());
  CHECK(harmonic_mu_bound(1024, 200) == doctest::Approx(std::sqrt(118.0 * 824.0 * std::log(1024.0) / (200.0 * 1024.0))));
}

TEST_CASE("code frame shape, entries and column order") {
  const CodeFrameSpec spec{3, 1, std::nullopt};
  const Frame f = build_code_frame(spec);
  CHECK(f.rows() == 8);
  CHECK(f.cols() == 64);
  const double mag = 1.0 / std::sqrt(8.0);
  CHECK((f.real_matrix().cwiseAbs().array() - mag).abs().maxCoeff() < 1e-15);
  // Column 0 is alpha = 0: all entries +.
  CHECK((f.real_matrix().col(0).array() > 0).all());
  // Row x = 0 has Tr(0) = 0 everywhere.
  CHECK((f.real_matrix().row(0).array() > 0).all());

  // Direct evaluation of the defining formula.
  const Gf2m field(3);
  for (std::uint64_t c = 0; c < 64; ++c) {
    const Gf2mElement a0{c & 7}, a1{c >> 3};
    for (std::uint64_t x = 0; x < 8; ++x) {
      const Gf2mElement ex{x};
      const Gf2mElement arg = field.mul(a0, ex) + field.mul(a1, field.pow(ex, 3));
      const double expected = field.trace(arg) ? -mag : mag;
      CHECK(f.real_matrix()(static_cast<Index>(x), static_cast<Index>(c)) == doctest::Approx(expected));
    }
  }
}

TEST_CASE("code frame spec validation and guard") {
  CHECK_THROWS_AS(build_code_frame({0, 1, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(build_code_frame({4, 0, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(build_code_frame({33, 1, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(build_code_frame({20, 3, std::nullopt}), std::invalid_argument);  // 80 bits
  CHECK_THROWS_AS(build_code_frame({13, 1, std::nullopt}), std::length_error);      // 2^26 columns
  CHECK_THROWS_AS(build_code_frame({4, 1, std::uint64_t{0x15}}), std::invalid_argument);
  CHECK(CodeFrameSpec{4, 1, std::nullopt}.mu_bound() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(CodeFrameSpec{6, 2, std::nullopt}.spectral_norm_squared() == 4096.0);
}

TEST_CASE("code frame geometry does not depend on the modulus") {
  const Frame a = build_code_frame({4, 1, std::uint64_t{0x13}});
  const Frame b = build_code_frame({4, 1, std::uint64_t{0x19}});  // x^4 + x^3 + 1
  CHECK(worst_case_coherence(a) == doctest::Approx(worst_case_coherence(b)));
  CHECK(average_coherence(a) == doctest::Approx(average_coherence(b)));
  CHECK(spectral_norm(a) == doctest::Approx(spectral_norm(b)));
}
