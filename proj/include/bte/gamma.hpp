#pragma once

#include "bte/errors.hpp"

namespace bte {

// log Gamma(z) for complex z off the poles, Lanczos (g = 7, n = 9) with
// reflection for Re z < 0.5. Only exp() of the result is meaningful: the
// imaginary part is not tied to a particular branch. Relative accuracy of
// exp(log_gamma) is ~1e-13 or better for |z| up to a few thousand.
Complex log_gamma(Complex z);

// 1/Gamma(z), entire; zero at the poles of Gamma.
Complex rgamma(Complex z);

}  // namespace bte
