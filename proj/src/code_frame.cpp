#include "framecoh/code_frame.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace framecoh {

namespace {

unsigned parity(std::uint64_t v) noexcept { return static_cast<unsigned>(std::popcount(v) & 1); }

std::uint64_t apply_rows(const std::vector<std::uint64_t>& rows, std::uint64_t v) noexcept {
  std::uint64_t out = 0;
  while (v) {
    out ^= rows[static_cast<std::size_t>(std::countr_zero(v))];
    v &= v - 1;
  }
  return out;
}

}  // namespace

CodeFrameOperator::CodeFrameOperator(const CodeFrameSpec& spec)
    : spec_(spec), field_((spec.validate(), spec.m), spec.resolved_modulus()) {
  const unsigned m = spec_.m;
  entry_magnitude_ = (m % 2 == 0) ? std::ldexp(1.0, -static_cast<int>(m / 2))
                                  : 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(m)));
  trace_forms_.resize(m);
  for (unsigned j = 0; j < m; ++j) trace_forms_[j] = field_.trace_form({std::uint64_t{1} << j});
  frobenius_.assign(m, std::vector<std::uint64_t>(m));
  for (unsigned j = 0; j < m; ++j) {
    Gf2mElement image{std::uint64_t{1} << j};
    for (unsigned k = 0; k < m; ++k) {
      frobenius_[k][j] = image.bits;
      image = field_.square(image);
    }
  }
}

unsigned CodeFrameOperator::quadratic_form(std::uint64_t gamma, Gf2mElement x) const noexcept {
  const unsigned m = spec_.m;
  const std::uint64_t low = (std::uint64_t{1} << m) - 1;
  Gf2mElement acc = field_.mul({gamma & low}, x);
  Gf2mElement power = x;
  for (unsigned i = 1; i <= spec_.t; ++i) {
    power = field_.square(power);  // x^(2^i)
    const Gf2mElement coeff{(gamma >> (i * m)) & low};
    if (coeff.bits) acc = acc + field_.mul(coeff, field_.mul(power, x));
  }
  return field_.trace(acc);
}

std::uint64_t CodeFrameOperator::row_mask(std::uint64_t row) const noexcept {
  const Gf2mElement x{row};
  std::uint64_t mask = field_.trace_form(x);
  Gf2mElement power = x;
  for (unsigned i = 1; i <= spec_.t; ++i) {
    power = field_.square(power);
    mask |= field_.trace_form(field_.mul(power, x)) << (i * spec_.m);
  }
  return mask;
}

int CodeFrameOperator::sign(std::uint64_t row, std::uint64_t col) const noexcept {
  return parity(row_mask(row) & col) ? -1 : 1;
}

std::vector<std::uint64_t> CodeFrameOperator::polar_rows(std::uint64_t gamma) const {
  // B(u, v) = sum_k Tr(g_k (u^(2^k) v + u v^(2^k))) = Tr(v w(u)),
  // w(u) = sum_k g_k u^(2^k) + (g_k u)^(2^(m-k)).
  const unsigned m = spec_.m;
  const std::uint64_t low = (std::uint64_t{1} << m) - 1;
  std::vector<std::uint64_t> rows(m, 0);
  for (unsigned j = 0; j < m; ++j) {
    std::uint64_t w = 0;
    for (unsigned k = 1; k <= spec_.t; ++k) {
      const Gf2mElement coeff{(gamma >> (k * m)) & low};
      if (!coeff.bits) continue;
      const unsigned up = k % m;
      w ^= field_.mul(coeff, {frobenius_[up][j]}).bits;
      const std::uint64_t scaled = field_.mul(coeff, {std::uint64_t{1} << j}).bits;
      w ^= apply_rows(frobenius_[(m - up) % m], scaled);
    }
    rows[j] = apply_rows(trace_forms_, w);
  }
  return rows;
}

std::int64_t CodeFrameOperator::character_sum(std::uint64_t gamma) const {
  const unsigned m = spec_.m;
  if (gamma >= cols()) throw std::out_of_range("character_sum: column index out of range");
  const auto rows = polar_rows(gamma);
  const auto q = [&](std::uint64_t v) { return quadratic_form(gamma, {v}); };

  std::vector<std::uint64_t> basis(m);
  for (unsigned j = 0; j < m; ++j) basis[j] = std::uint64_t{1} << j;

  int exponent = 0;  // log2 |S|
  int sign = 1;
  while (!basis.empty()) {
    const std::uint64_t e = basis.back();
    basis.pop_back();
    const std::uint64_t be = apply_rows(rows, e);
    const auto partner = std::find_if(basis.begin(), basis.end(), [&](std::uint64_t u) { return parity(be & u); });
    if (partner == basis.end()) {
      // e is orthogonal to the rest: it joins the radical, where Q is linear.
      if (q(e)) return 0;
      ++exponent;
      continue;
    }
    const std::uint64_t f = *partner;
    basis.erase(partner);
    const std::uint64_t bf = apply_rows(rows, f);
    for (auto& u : basis) {
      std::uint64_t projected = u;
      if (parity(bf & u)) projected ^= e;
      if (parity(be & u)) projected ^= f;
      u = projected;
    }
    // A hyperbolic plane contributes 2 (-1)^(Q(e) Q(f)).
    ++exponent;
    if (q(e) & q(f)) sign = -sign;
  }
  return sign * (std::int64_t{1} << exponent);
}

double CodeFrameOperator::inner_product(std::uint64_t a, std::uint64_t b) const {
  return std::ldexp(static_cast<double>(character_sum(a ^ b)), -static_cast<int>(spec_.m));
}

double CodeFrameOperator::worst_case_coherence() const {
  if (cols() > kMaxCodeFrameColumns) {
    throw std::length_error("worst_case_coherence: " + std::to_string(cols()) +
                            " columns exceed the enumeration guard of " + std::to_string(kMaxCodeFrameColumns));
  }
  std::int64_t best = 0;
  for (std::uint64_t g = 1; g < cols(); ++g) best = std::max(best, std::abs(character_sum(g)));
  return std::ldexp(static_cast<double>(best), -static_cast<int>(spec_.m));
}

double CodeFrameOperator::average_coherence() const {
  const double n = static_cast<double>(cols());
  const double rows_d = static_cast<double>(rows());
  return (n - rows_d) / (rows_d * (n - 1.0));
}

}  // namespace framecoh
