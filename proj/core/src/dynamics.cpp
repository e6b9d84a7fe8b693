#include "tcqb/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "tcqb/optimizer.hpp"

namespace tcqb {

SubspaceState evolve(const EigenDecomposition& decomp, double t) {
    const int n = decomp.dim;
    SubspaceState state;
    state.time = t;
    state.amplitudes.assign(static_cast<std::size_t>(n), {0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        const double* col = decomp.column(k);
        // weight of eigenmode k in the initial basis state e1, phase-advanced
        const std::complex<double> w =
            col[0] * std::polar(1.0, -decomp.eigenvalues[k] * t);
        for (int j = 0; j < n; ++j) {
            state.amplitudes[j] += col[j] * w;
        }
    }
    return state;
}

BatteryPopulations populations(const SubspaceState& state) {
    BatteryPopulations pops;
    pops.populations.reserve(state.amplitudes.size());
    for (const auto& a : state.amplitudes) {
        pops.populations.push_back(std::norm(a));
    }
    return pops;
}

double stored_energy(const BatteryConfig& cfg, const BatteryPopulations& pops) {
    double mean_excitation = 0.0;
    for (std::size_t m = 1; m < pops.populations.size(); ++m) {
        mean_excitation += static_cast<double>(m) * pops.populations[m];
    }
    return cfg.omega * mean_excitation;
}

double entanglement_entropy(const BatteryPopulations& pops) {
    constexpr double kFloor = 1e-15;
    double s = 0.0;
    for (double p : pops.populations) {
        if (p > kFloor) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

ChargingReport charging_trace(const BatteryConfig& cfg, double t_max, int n_steps,
                              double tolerance) {
    cfg.validate();
    if (!(t_max > 0.0)) {
        throw std::invalid_argument("charging_trace: t_max must be > 0");
    }
    if (n_steps < 2) {
        throw std::invalid_argument("charging_trace: n_steps must be >= 2");
    }

    const EigenDecomposition decomp = decompose(build_hamiltonian(cfg));

    ChargingReport report;
    report.times.reserve(static_cast<std::size_t>(n_steps));
    report.energy.reserve(static_cast<std::size_t>(n_steps));
    report.entropy.reserve(static_cast<std::size_t>(n_steps));
    report.populations.reserve(static_cast<std::size_t>(n_steps));
    for (int i = 0; i < n_steps; ++i) {
        const double t = t_max * static_cast<double>(i) / (n_steps - 1);
        const BatteryPopulations pops = populations(evolve(decomp, t));
        report.times.push_back(t);
        report.energy.push_back(stored_energy(cfg, pops));
        report.entropy.push_back(entanglement_entropy(pops));
        report.populations.push_back(pops.populations);
    }

    const OptimizationResult opt =
        find_charging_time(cfg, decomp, t_max, 4096, tolerance);
    report.charging_time = opt.tau;
    report.capacity = opt.capacity;
    report.entropy_at_tau =
        entanglement_entropy(populations(evolve(decomp, opt.tau)));
    report.optimal = opt.optimal;
    report.optimality_gap = opt.optimality_gap;
    report.tolerance = tolerance;
    return report;
}

}  // namespace tcqb
