#include "framecoh/gf2m.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace framecoh {

namespace {

constexpr std::array<std::uint64_t, kMaxFieldDegree + 1> kDefaultModuli = {
    0x0,        0x2,        0x7,        0xb,        0x13,       0x25,       0x43,
    0x83,       0x11b,      0x203,      0x409,      0x805,      0x1009,     0x201b,
    0x4021,     0x8003,     0x1002b,    0x20009,    0x40009,    0x80027,    0x100009,
    0x200005,   0x400003,   0x800021,   0x100001b,  0x2000009,  0x400001b,  0x8000027,
    0x10000003, 0x20000005, 0x40000003, 0x80000009, 0x10000008d};

int poly_degree(std::uint64_t p) noexcept { return 63 - std::countl_zero(p); }

}  // namespace

std::uint64_t default_modulus(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree) {
    throw std::invalid_argument("field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "]");
  }
  return kDefaultModuli[m];
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t modulus) noexcept {
  const int dm = poly_degree(modulus);
  while (a && poly_degree(a) >= dm) a ^= modulus << (poly_degree(a) - dm);
  return a;
}

std::optional<std::uint64_t> find_factor(std::uint64_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) throw std::invalid_argument("find_factor: polynomial of degree < 1");
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::uint64_t q = std::uint64_t{1} << k; q < (std::uint64_t{1} << (k + 1)); ++q) {
      if (poly_mod(poly, q) == 0) return q;
    }
  }
  return std::nullopt;
}

std::string polynomial_to_string(std::uint64_t poly) {
  if (poly == 0) return "0";
  std::string s;
  for (int k = poly_degree(poly); k >= 0; --k) {
    if (!((poly >> k) & 1)) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) s += "1";
    else if (k == 1) s += "x";
    else s += "x^" + std::to_string(k);
  }
  return s;
}

Gf2m::Gf2m(unsigned m) : Gf2m(m, default_modulus(m)) {}

Gf2m::Gf2m(unsigned m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > kMaxFieldDegree) {
    throw std::invalid_argument("field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "]");
  }
  if (poly_degree(modulus) != static_cast<int>(m)) {
    throw std::invalid_argument("modulus " + polynomial_to_string(modulus) + " does not have degree " +
                                std::to_string(m));
  }
  if (const auto factor = find_factor(modulus)) {
    throw std::invalid_argument("modulus " + polynomial_to_string(modulus) + " is reducible: divisible by " +
                                polynomial_to_string(*factor));
  }
  for (unsigned j = 0; j < m_; ++j) {
    trace_mask_ |= static_cast<std::uint64_t>(trace({std::uint64_t{1} << j})) << j;
  }
}

Gf2mElement Gf2m::mul(Gf2mElement a, Gf2mElement b) const noexcept {
  return {poly_mod(clmul(a.bits, b.bits), modulus_)};
}

Gf2mElement Gf2m::frobenius(Gf2mElement a, unsigned i) const noexcept {
  for (unsigned k = 0; k < i; ++k) a = square(a);
  return a;
}

Gf2mElement Gf2m::pow(Gf2mElement a, std::uint64_t e) const noexcept {
  Gf2mElement result{1};
  while (e) {
    if (e & 1) result = mul(result, a);
    a = square(a);
    e >>= 1;
  }
  return result;
}

Gf2mElement Gf2m::inverse(Gf2mElement a) const {
  if (a.bits == 0) throw std::domain_error("zero has no inverse");
  return pow(a, size() - 2);
}

unsigned Gf2m::trace(Gf2mElement a) const noexcept {
  Gf2mElement sum{0};
  Gf2mElement image = a;
  for (unsigned i = 0; i < m_; ++i) {
    sum = sum + image;
    image = square(image);
  }
  // The trace lies in the prime subfield {0, 1}.
  return static_cast<unsigned>(sum.bits & 1);
}

unsigned Gf2m::fast_trace(Gf2mElement a) const noexcept {
  return static_cast<unsigned>(std::popcount(a.bits & trace_mask_) & 1);
}

std::uint64_t Gf2m::trace_form(Gf2mElement u) const noexcept {
  std::uint64_t mask = 0;
  Gf2mElement basis_times_u = u;
  for (unsigned j = 0; j < m_; ++j) {
    mask |= static_cast<std::uint64_t>(fast_trace(basis_times_u)) << j;
    basis_times_u = mul(basis_times_u, Gf2mElement{2});
  }
  return mask;
}

}  // namespace framecoh
