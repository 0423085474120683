#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kinknet {

// Nonlinearity of u_tt - u_xx + f(u) = 0 together with its potential
// density V, V' = f. V >= 0 with V = 0 on the ground states.
struct NonlinearPotential {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> V;
};

NonlinearPotential sine_gordon_potential();  // f = sin u,  V = 1 - cos u
NonlinearPotential klein_gordon_potential(); // f = u,      V = u^2/2
NonlinearPotential free_wave_potential();    // f = 0,      V = 0

// Throws std::invalid_argument for unknown names.
NonlinearPotential potential_by_name(const std::string& name);
std::vector<std::string> potential_names();

}  // namespace kinknet
