// optimizer.hpp — Charging-time search: tau = argmax_t of the stored energy.

#pragma once

#include <stdexcept>
#include <utility>

#include "tcqb/model.hpp"
#include "tcqb/tridiag_eigen.hpp"

namespace tcqb {

// Raised when the search encounters non-finite energies.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OptimizationResult {
    double tau = 0.0;             // located charging time
    double capacity = 0.0;        // stored energy at tau
    bool optimal = false;         // optimality_gap <= tolerance * omega * d
    double optimality_gap = 0.0;  // omega * d - capacity, clamped at zero
    double window_max = 0.0;      // search window (0, window_max]
    int grid_points = 0;
};

// Heuristic search window: several periods of the estimated Rabi scale,
// 4*pi / (2g*sqrt(|n_photons - (n_cells-1)/2| + 1)).
double auto_window(const BatteryConfig& cfg);

// Two-stage global search: a coarse grid over (0, t_max] resolves the basin
// of the global maximum, golden-section refines it, and a bisection on the
// analytic time derivative polishes tau to near machine precision. Grid
// maxima that tie within tolerance resolve to the smallest tau. Passing
// t_max <= 0 selects the auto window.
OptimizationResult find_charging_time(const BatteryConfig& cfg, double t_max = 0.0,
                                      int grid_points = 4096, double tolerance = 1e-3);

// Same search against a cached decomposition of build_hamiltonian(cfg).
OptimizationResult find_charging_time(const BatteryConfig& cfg,
                                      const EigenDecomposition& decomp, double t_max,
                                      int grid_points, double tolerance);

// Per-cell averages (capacity / n_cells, entropy / n_cells) used to compare
// batteries of different sizes.
std::pair<double, double> average_metrics(const BatteryConfig& cfg,
                                          const OptimizationResult& result,
                                          double entropy_at_tau);

}  // namespace tcqb
