// closed_forms.hpp — Analytic solutions for the tractable charging regimes.
//
// Three regimes admit closed forms: a single cell (Rabi oscillation at
// g*sqrt(n_photons)), two cells (a 3x3 chain solved exactly), and the
// dominant-subsystem limits where the chain collapses onto a single SU(2)
// rotation at the generalized Rabi frequency. These double as fast paths and
// as oracles for the numerical pipeline.

#pragma once

#include <array>

#include <Eigen/Dense>

#include "tcqb/model.hpp"

namespace tcqb {

// Spin-(two_dbar/2) generators in the ascending-weight basis; sz is diagonal
// with entries -dbar..dbar.
struct SpinMatrices {
    int dimension = 0;  // two_dbar + 1
    Eigen::MatrixXcd sx, sy, sz;
};

SpinMatrices spin_generators(int two_dbar);

// Binary Shannon entropy h(x) = -x log2 x - (1-x) log2(1-x), h(0) = h(1) = 0.
double binary_entropy(double x);

// --- single cell (Jaynes-Cummings) --------------------------------------

// omega * sin^2(g sqrt(n_photons) t); requires n_cells == 1.
double jc_energy(const BatteryConfig& cfg, double t);

// pi / (2 g sqrt(n_photons)): the cell reaches full charge here.
double jc_charging_time(const BatteryConfig& cfg);

// --- two cells -----------------------------------------------------------

struct TwoCellSolution {
    std::array<double, 3> populations;
    double energy;
};

// Exact populations and stored energy for n_cells == 2, n_photons >= 2;
// everything oscillates at delta = g sqrt(4 n_photons - 2).
TwoCellSolution two_cell_solution(const BatteryConfig& cfg, double t);

double two_cell_charging_time(const BatteryConfig& cfg);  // pi / delta

// Capacity omega * [2 - 2/(2 n_photons - 1)^2] reached at the charging time.
double capacity_two_cell(const BatteryConfig& cfg);

// Entanglement at the charging time: h(1/(2 n_photons - 1)^2) bits.
double entropy_two_cell(const BatteryConfig& cfg);

// --- SU(2) limits ----------------------------------------------------------

// (d omega / 2)(1 - cos(Omega t)) with d = n_cells (ChargerDominant) or
// n_photons (BatteryDominant). Throws std::domain_error if the Rabi radicand
// is nonpositive.
double su2_limit_energy(const BatteryConfig& cfg, Su2Regime regime, double t);

double su2_charging_time(const BatteryConfig& cfg, Su2Regime regime);  // pi / Omega

// Heisenberg-picture rotation of J^z about J^x by `angle`:
// sin(angle) * sy + cos(angle) * sz, equal to
// exp(i angle sx) sz exp(-i angle sx).
Eigen::MatrixXcd bch_rotated_jz(const SpinMatrices& spin, double angle);

}  // namespace tcqb
