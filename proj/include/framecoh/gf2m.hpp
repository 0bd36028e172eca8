#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace framecoh {

/// Element of GF(2^m) in the polynomial basis: bit i is the coefficient of z^i.
struct Gf2mElement {
  std::uint64_t bits = 0;

  friend constexpr Gf2mElement operator+(Gf2mElement a, Gf2mElement b) noexcept {
    return {a.bits ^ b.bits};
  }
  friend constexpr bool operator==(Gf2mElement, Gf2mElement) noexcept = default;
};

inline constexpr unsigned kMaxFieldDegree = 32;

/// Lexicographically least irreducible polynomial of degree m, 1 <= m <= 32.
std::uint64_t default_modulus(unsigned m);

/// Smallest nontrivial factor (as a GF(2)[x] bitmask) of a polynomial of degree >= 1,
/// or nullopt when it is irreducible. Trial division up to degree deg/2.
std::optional<std::uint64_t> find_factor(std::uint64_t poly);

std::string polynomial_to_string(std::uint64_t poly);

/// Carry-less product of two polynomials of degree < 32.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept;

/// GF(2)[x] remainder.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t modulus) noexcept;

/// Arithmetic in GF(2^m) = GF(2)[z] / (modulus).
class Gf2m {
 public:
  /// Uses default_modulus(m).
  explicit Gf2m(unsigned m);
  /// Throws std::invalid_argument if modulus is not an irreducible of degree m,
  /// naming a factor when it is reducible.
  Gf2m(unsigned m, std::uint64_t modulus);

  unsigned degree() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }

  Gf2mElement mul(Gf2mElement a, Gf2mElement b) const noexcept;
  Gf2mElement square(Gf2mElement a) const noexcept { return mul(a, a); }
  /// a^(2^i): i applications of the Frobenius map.
  Gf2mElement frobenius(Gf2mElement a, unsigned i) const noexcept;
  Gf2mElement pow(Gf2mElement a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for zero.
  Gf2mElement inverse(Gf2mElement a) const;

  /// Tr(a) = sum_{i<m} a^(2^i), evaluated by summing Frobenius images.
  unsigned trace(Gf2mElement a) const noexcept;

  /// Tr is GF(2)-linear: trace(a) == parity(a.bits & trace_mask()).
  std::uint64_t trace_mask() const noexcept { return trace_mask_; }
  unsigned fast_trace(Gf2mElement a) const noexcept;

  /// Mask L(u) with Tr(alpha * u) == parity(alpha.bits & L(u)) for every alpha.
  std::uint64_t trace_form(Gf2mElement u) const noexcept;

 private:
  unsigned m_;
  std::uint64_t modulus_;
  std::uint64_t trace_mask_ = 0;
};

}  // namespace framecoh
