#pragma once

#include <complex>

namespace lcp {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace lcp
