#include "kinknet/kink.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kinknet {

double lorentz_factor(double c) {
    if (!(std::abs(c) < 1.0))
        throw std::domain_error("kink speed |c| must be < 1, got " + std::to_string(c));
    return 1.0 / std::sqrt(1.0 - c * c);
}

double kink_u(double x, double t, const KinkSpec& k) {
    const double g = lorentz_factor(k.c);
    const double phase = g * (x + k.x0 - k.c * t);
    return static_cast<double>(k.polarity) * 4.0 * std::atan(std::exp(phase));
}

double kink_v(double x, double t, const KinkSpec& k) {
    const double g = lorentz_factor(k.c);
    const double phase = g * (x + k.x0 - k.c * t);
    // sech via 1/cosh keeps the tails finite (cosh overflows before 1/cosh underflows)
    return -k.c * static_cast<double>(k.polarity) * 2.0 * g / std::cosh(phase);
}

double kink_energy(double c) {
    return 8.0 * lorentz_factor(c);
}

}  // namespace kinknet
