#include "framecoh/rng.hpp"

#include <cmath>
#include <numbers>

namespace framecoh {

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return r % bound;
}

double CounterRng::normal() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

}  // namespace framecoh
