#pragma once

namespace kinknet {

// Traveling kink u(x,t) = polarity * 4*atan(exp(gamma*(x + x0 - c*t))).
// x0 is a phase offset, not an initial position; the profile center sits at
// x = c*t - x0.
struct KinkSpec {
    double c = 0.0;     // celerity, |c| < 1
    double x0 = 0.0;    // phase offset
    int polarity = +1;  // +1: 0 -> 2*pi, -1: 0 -> -2*pi
};

// 1/sqrt(1 - c^2); throws std::domain_error unless |c| < 1.
double lorentz_factor(double c);

double kink_u(double x, double t, const KinkSpec& k);

// Exact time derivative of kink_u: -c * polarity * 2*gamma * sech(theta).
double kink_v(double x, double t, const KinkSpec& k);

// Field energy of a single kink, 8*gamma.
double kink_energy(double c);

}  // namespace kinknet
