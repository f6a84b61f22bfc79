#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "pprod/modular.hpp"

namespace pprod::detail {

// Neumaier-compensated accumulator for real and imaginary parts separately.
class CompensatedComplexSum {
public:
    void add(std::complex<double> z) {
        add_part(re_, re_c_, z.real());
        add_part(im_, im_c_, z.imag());
    }
    std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& sum, double& comp, double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

// e^{2 pi i j / m} for a reduced j in [0, m); the angle is taken in (-pi, pi].
inline std::complex<double> unit_root(u64 j, u64 m) {
    const double signed_j =
        2 * j > m ? -static_cast<double>(m - j) : static_cast<double>(j);
    const double angle = 2.0 * std::numbers::pi * signed_j / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace pprod::detail
