// model.hpp — Tavis-Cummings battery parameters and the invariant-subspace Hamiltonian.
//
// A battery of n_cells two-level atoms is charged by a resonant cavity mode
// prepared in an n_photons Fock state. Starting from the product of the atomic
// ground state and the Fock state, the dynamics closes on the
// (d+1)-dimensional chain of paired Dicke/Fock states, d = min(n_cells,
// n_photons), where the Hamiltonian is real symmetric tridiagonal with zero
// diagonal and couplings u_j = g*sqrt(j*(n_cells-j+1)*(n_photons-j+1)).

#pragma once

#include <vector>

namespace tcqb {

// Physical parameters of one battery/charger instance. Energies are in units
// of omega; time is in inverse-energy units (hbar = 1).
struct BatteryConfig {
    int n_cells = 1;        // number of battery cells (atoms)
    int n_photons = 1;      // initial Fock photon number of the charger
    double omega = 1.0;     // shared resonance frequency of cells and cavity
    double coupling = 1.0;  // flip-flop interaction strength g

    // d = min(n_cells, n_photons); the dynamics lives in a (d+1)-dim subspace.
    int excitation_span() const;
    int subspace_dim() const { return excitation_span() + 1; }

    // Throws std::invalid_argument unless n_cells >= 1, n_photons >= 1,
    // omega > 0, coupling > 0.
    void validate() const;
};

// Real symmetric tridiagonal matrix stored as diagonal + off-diagonal arrays.
// The subspace Hamiltonian has zero diagonal and strictly positive couplings,
// so its spectrum is simple and symmetric about zero.
struct TridiagonalHamiltonian {
    int dim = 0;
    std::vector<double> diagonal;       // dim entries
    std::vector<double> off_diagonal;   // dim - 1 entries; [j] couples rows j, j+1
};

// Coupling u_j between chain sites j-1 and j (one-based j in [1, d]).
double coupling_element(const BatteryConfig& cfg, int j);

// The (d+1) x (d+1) interaction-picture Hamiltonian over the invariant basis.
TridiagonalHamiltonian build_hamiltonian(const BatteryConfig& cfg);

// Limiting regimes in which the chain reduces to a single SU(2) rotation.
enum class Su2Regime {
    ChargerDominant,   // n_photons >> n_cells: spin-(n_cells/2) rotation
    BatteryDominant,   // n_cells >> n_photons: spin-(n_photons/2) rotation
};

// Generalized Rabi frequency of the limiting rotation:
//   ChargerDominant:  2g*sqrt(n_photons - (n_cells - 1)/2)
//   BatteryDominant:  2g*sqrt(n_cells - (n_photons - 1)/2)
// Throws std::domain_error when the radicand is nonpositive.
double su2_rabi_frequency(const BatteryConfig& cfg, Su2Regime regime);

// The limiting Hamiltonian Omega * J^x as a tridiagonal matrix in the
// spin-(n_cells/2) (ChargerDominant) or spin-(n_photons/2) (BatteryDominant)
// representation. Intended for n_photons > n_cells (resp. n_cells >
// n_photons), but callers may probe the approximation anywhere the Rabi
// radicand stays positive.
TridiagonalHamiltonian su2_limit_hamiltonian(const BatteryConfig& cfg, Su2Regime regime);

}  // namespace tcqb
