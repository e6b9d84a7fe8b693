// dynamics.hpp — Subspace time evolution and the battery observables built on it.
//
// With H = U E U^T the evolved amplitude vector is psi(t) = U exp(-iEt) U^T e1.
// The battery's reduced density matrix is diagonal in the Dicke basis, so all
// observables reduce to the populations |psi_m(t)|^2: the stored energy is
// omega * sum_m m*p_m and the battery-charger entanglement is the Shannon
// entropy of the populations in bits (log base 2).

#pragma once

#include <complex>
#include <vector>

#include "tcqb/model.hpp"
#include "tcqb/tridiag_eigen.hpp"

namespace tcqb {

// Normalized complex amplitudes over the invariant basis at one time.
struct SubspaceState {
    std::vector<std::complex<double>> amplitudes;
    double time = 0.0;
};

// Probabilities of the Dicke levels m = 0..d; they sum to one.
struct BatteryPopulations {
    std::vector<double> populations;
};

// Time-gridded charging record plus the located charging time.
struct ChargingReport {
    std::vector<double> times;
    std::vector<double> energy;                    // stored energy, units of omega
    std::vector<double> entropy;                   // bits
    std::vector<std::vector<double>> populations;  // one row per time point
    double charging_time = 0.0;                    // tau = argmax of the stored energy
    double capacity = 0.0;                         // energy at tau
    double entropy_at_tau = 0.0;
    bool optimal = false;                          // capacity within tolerance of omega*d
    double optimality_gap = 0.0;                   // omega*d - capacity
    double tolerance = 0.0;                        // relative tolerance behind `optimal`
};

// psi(t) = U exp(-iEt) U^T e1.
SubspaceState evolve(const EigenDecomposition& decomp, double t);

BatteryPopulations populations(const SubspaceState& state);

// omega * sum_m m * p_m. Equals the offset form
// (N_b/2)omega + sum_j (j - N_b/2 - 1)|psi_j|^2 omega because populations sum
// to one; the plain mean-excitation form is used throughout.
double stored_energy(const BatteryConfig& cfg, const BatteryPopulations& pops);

// Von Neumann entropy of the battery marginal in bits. Populations below
// 1e-15 contribute zero.
double entanglement_entropy(const BatteryPopulations& pops);

// Uniform grid of n_steps points over [0, t_max] with the charging time
// located by the optimizer over the same window.
ChargingReport charging_trace(const BatteryConfig& cfg, double t_max, int n_steps,
                              double tolerance = 1e-3);

}  // namespace tcqb
