#include "kinknet/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace kinknet {

NonlinearPotential sine_gordon_potential() {
    return {"sine_gordon",
            [](double u) { return std::sin(u); },
            [](double u) { return 1.0 - std::cos(u); }};
}

NonlinearPotential klein_gordon_potential() {
    return {"klein_gordon",
            [](double u) { return u; },
            [](double u) { return 0.5 * u * u; }};
}

NonlinearPotential free_wave_potential() {
    return {"free_wave",
            [](double) { return 0.0; },
            [](double) { return 0.0; }};
}

NonlinearPotential potential_by_name(const std::string& name) {
    if (name == "sine_gordon") return sine_gordon_potential();
    if (name == "klein_gordon") return klein_gordon_potential();
    if (name == "free_wave") return free_wave_potential();
    throw std::invalid_argument("unknown potential `" + name + "`");
}

std::vector<std::string> potential_names() {
    return {"sine_gordon", "klein_gordon", "free_wave"};
}

}  // namespace kinknet
