#pragma once

#include <cstddef>

namespace framecoh {

struct Interval {
  double lower;
  double upper;
};

/// 95% Wilson score interval for `successes` out of `trials`.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

}  // namespace framecoh
