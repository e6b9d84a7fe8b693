#include "tcqb/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tcqb {

namespace {

// Stored energy (and its time derivative) evaluated straight from the cached
// eigendecomposition; one evaluation is O(dim^2).
class EnergyEvaluator {
public:
    EnergyEvaluator(const EigenDecomposition& decomp, double omega)
        : decomp_(decomp), omega_(omega),
          re_(static_cast<std::size_t>(decomp.dim)),
          im_(static_cast<std::size_t>(decomp.dim)),
          dre_(static_cast<std::size_t>(decomp.dim)),
          dim_(static_cast<std::size_t>(decomp.dim)) {}

    double value(double t) {
        accumulate(t, false);
        double mean = 0.0;
        for (int j = 1; j < decomp_.dim; ++j) {
            mean += j * (re_[j] * re_[j] + im_[j] * im_[j]);
        }
        return omega_ * mean;
    }

    double derivative(double t) {
        accumulate(t, true);
        double dmean = 0.0;
        for (int j = 1; j < decomp_.dim; ++j) {
            dmean += j * 2.0 * (re_[j] * dre_[j] + im_[j] * dim_[j]);
        }
        return omega_ * dmean;
    }

private:
    void accumulate(double t, bool with_derivative) {
        const int n = decomp_.dim;
        std::fill(re_.begin(), re_.end(), 0.0);
        std::fill(im_.begin(), im_.end(), 0.0);
        if (with_derivative) {
            std::fill(dre_.begin(), dre_.end(), 0.0);
            std::fill(dim_.begin(), dim_.end(), 0.0);
        }
        for (int k = 0; k < n; ++k) {
            const double* col = decomp_.column(k);
            const double energy = decomp_.eigenvalues[k];
            const double wr = col[0] * std::cos(energy * t);
            const double wi = -col[0] * std::sin(energy * t);
            for (int j = 0; j < n; ++j) {
                re_[j] += col[j] * wr;
                im_[j] += col[j] * wi;
            }
            if (with_derivative) {
                // d/dt multiplies mode k by -i*E_k
                const double dr = energy * wi;
                const double di = -energy * wr;
                for (int j = 0; j < n; ++j) {
                    dre_[j] += col[j] * dr;
                    dim_[j] += col[j] * di;
                }
            }
        }
    }

    const EigenDecomposition& decomp_;
    double omega_;
    std::vector<double> re_, im_, dre_, dim_;
};

struct Candidate {
    double tau;
    double value;
};

// Golden-section ascent on [lo, hi], then a bisection on the analytic
// derivative over the same bracket. Golden-section alone stalls once energy
// differences fall below the roundoff floor (the maximizer is then only known
// to ~sqrt(eps)), so the derivative root supplies the final digits.
Candidate refine_maximum(EnergyEvaluator& f, double lo, double hi, double width_tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    const double glo = lo;
    const double ghi = hi;

    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f.value(x1);
    double f2 = f.value(x2);
    while (hi - lo > width_tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f.value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f.value(x1);
        }
    }
    double tau = 0.5 * (lo + hi);
    double best = f.value(tau);

    if (f.derivative(glo) > 0.0 && f.derivative(ghi) < 0.0) {
        double a = glo;
        double b = ghi;
        for (int iter = 0; iter < 200 && b - a > 1e-16 * std::max(1.0, b); ++iter) {
            const double mid = 0.5 * (a + b);
            if (f.derivative(mid) > 0.0) {
                a = mid;
            } else {
                b = mid;
            }
        }
        const double root = 0.5 * (a + b);
        const double froot = f.value(root);
        if (froot >= best) {
            tau = root;
            best = froot;
        }
    }
    return {tau, best};
}

}  // namespace

double auto_window(const BatteryConfig& cfg) {
    cfg.validate();
    const double rabi_estimate =
        2.0 * cfg.coupling *
        std::sqrt(std::abs(cfg.n_photons - (cfg.n_cells - 1) / 2.0) + 1.0);
    return 4.0 * std::numbers::pi / rabi_estimate;
}

OptimizationResult find_charging_time(const BatteryConfig& cfg, double t_max,
                                      int grid_points, double tolerance) {
    cfg.validate();
    const EigenDecomposition decomp = decompose(build_hamiltonian(cfg));
    return find_charging_time(cfg, decomp, t_max, grid_points, tolerance);
}

OptimizationResult find_charging_time(const BatteryConfig& cfg,
                                      const EigenDecomposition& decomp, double t_max,
                                      int grid_points, double tolerance) {
    cfg.validate();
    if (t_max <= 0.0) {
        t_max = auto_window(cfg);
    }
    if (grid_points < 2) {
        throw std::invalid_argument("find_charging_time: grid_points must be >= 2");
    }

    EnergyEvaluator energy(decomp, cfg.omega);
    const double step = t_max / grid_points;

    std::vector<double> values(static_cast<std::size_t>(grid_points) + 1, 0.0);
    double grid_max = 0.0;
    for (int i = 1; i <= grid_points; ++i) {
        const double v = energy.value(i * step);
        if (!std::isfinite(v)) {
            throw NumericalError("find_charging_time: non-finite energy at t = " +
                                 std::to_string(i * step));
        }
        values[i] = v;
        grid_max = std::max(grid_max, v);
    }

    const double scale = cfg.omega * cfg.excitation_span();
    const double basin_window = 0.01 * scale;  // generous: grid samples undershoot peaks
    const double tie_tol = 1e-9 * scale;
    const double width_tol = 1e-10 * t_max;

    Candidate best{0.0, -1.0};
    for (int i = 1; i <= grid_points; ++i) {
        const double left = values[i - 1];
        const double right = i < grid_points ? values[i + 1] : -1.0;
        if (values[i] < left || values[i] < right) {
            continue;  // not a grid-local maximum
        }
        if (values[i] < grid_max - basin_window) {
            continue;
        }
        const double lo = (i - 1) * step;
        const double hi = std::min(t_max, (i + 1) * step);
        const Candidate c = refine_maximum(energy, lo, hi, width_tol);
        const bool better = c.value > best.value + tie_tol;
        const bool tied_earlier =
            std::abs(c.value - best.value) <= tie_tol && c.tau < best.tau;
        if (better || tied_earlier) {
            best = c;
        }
    }

    OptimizationResult result;
    result.tau = best.tau;
    result.capacity = best.value;
    result.optimality_gap = std::max(0.0, scale - best.value);
    result.optimal = result.optimality_gap <= tolerance * scale;
    result.window_max = t_max;
    result.grid_points = grid_points;
    return result;
}

std::pair<double, double> average_metrics(const BatteryConfig& cfg,
                                          const OptimizationResult& result,
                                          double entropy_at_tau) {
    const double cells = static_cast<double>(cfg.n_cells);
    return {result.capacity / cells, entropy_at_tau / cells};
}

}  // namespace tcqb
