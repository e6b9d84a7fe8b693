#include "tcqb/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcqb {

int BatteryConfig::excitation_span() const {
    return n_cells < n_photons ? n_cells : n_photons;
}

void BatteryConfig::validate() const {
    if (n_cells < 1) {
        throw std::invalid_argument("BatteryConfig: n_cells must be >= 1, got " +
                                    std::to_string(n_cells));
    }
    if (n_photons < 1) {
        throw std::invalid_argument("BatteryConfig: n_photons must be >= 1, got " +
                                    std::to_string(n_photons));
    }
    if (!(omega > 0.0)) {
        throw std::invalid_argument("BatteryConfig: omega must be > 0");
    }
    if (!(coupling > 0.0)) {
        throw std::invalid_argument("BatteryConfig: coupling must be > 0");
    }
}

double coupling_element(const BatteryConfig& cfg, int j) {
    cfg.validate();
    const int d = cfg.excitation_span();
    if (j < 1 || j > d) {
        throw std::invalid_argument("coupling_element: j must lie in [1, " +
                                    std::to_string(d) + "], got " + std::to_string(j));
    }
    const double jj = static_cast<double>(j);
    return cfg.coupling *
           std::sqrt(jj * (cfg.n_cells - jj + 1.0) * (cfg.n_photons - jj + 1.0));
}

TridiagonalHamiltonian build_hamiltonian(const BatteryConfig& cfg) {
    cfg.validate();
    const int d = cfg.excitation_span();
    TridiagonalHamiltonian h;
    h.dim = d + 1;
    h.diagonal.assign(static_cast<std::size_t>(d) + 1, 0.0);
    h.off_diagonal.resize(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
        h.off_diagonal[static_cast<std::size_t>(j - 1)] = coupling_element(cfg, j);
    }
    return h;
}

double su2_rabi_frequency(const BatteryConfig& cfg, Su2Regime regime) {
    cfg.validate();
    const double radicand = regime == Su2Regime::ChargerDominant
                                ? cfg.n_photons - (cfg.n_cells - 1) / 2.0
                                : cfg.n_cells - (cfg.n_photons - 1) / 2.0;
    if (!(radicand > 0.0)) {
        throw std::domain_error("su2_rabi_frequency: nonpositive radicand " +
                                std::to_string(radicand) +
                                "; the requested limit does not apply");
    }
    return 2.0 * cfg.coupling * std::sqrt(radicand);
}

TridiagonalHamiltonian su2_limit_hamiltonian(const BatteryConfig& cfg, Su2Regime regime) {
    const double rabi = su2_rabi_frequency(cfg, regime);
    // two_dbar = 2*spin of the limiting representation
    const int two_dbar =
        regime == Su2Regime::ChargerDominant ? cfg.n_cells : cfg.n_photons;
    TridiagonalHamiltonian h;
    h.dim = two_dbar + 1;
    h.diagonal.assign(static_cast<std::size_t>(two_dbar) + 1, 0.0);
    h.off_diagonal.resize(static_cast<std::size_t>(two_dbar));
    for (int j = 1; j <= two_dbar; ++j) {
        const double f = std::sqrt(static_cast<double>(j) * (two_dbar - j + 1.0));
        h.off_diagonal[static_cast<std::size_t>(j - 1)] = 0.5 * rabi * f;
    }
    return h;
}

}  // namespace tcqb
