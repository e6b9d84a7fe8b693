#include "tcqb/tridiag_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tcqb {

namespace {

constexpr int kMaxSweeps = 50;

// Symmetric tridiagonal QL with implicit Wilkinson shifts and eigenvector
// accumulation, after the classic Bowdler-Martin-Reinsch-Wilkinson procedure
// (EISPACK tql2 lineage). d holds the diagonal and is overwritten with
// eigenvalues; e holds the off-diagonal in e[0..n-2] with e[n-1] scratch;
// z is the column-major rotation accumulator, seeded with the identity.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& z, int n) {
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                // deflate when e[m] is negligible against its neighbors
                if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1]))) {
                    break;
                }
            }
            if (m != l) {
                if (iter++ == kMaxSweeps) {
                    throw EigenSolverError(n, l);
                }
                // Wilkinson shift from the leading 2x2 of the active block
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    // apply the rotation to eigenvector columns i and i+1
                    double* zi = z.data() + static_cast<std::size_t>(i) * n;
                    double* zj = zi + n;
                    for (int k = 0; k < n; ++k) {
                        f = zj[k];
                        zj[k] = s * zi[k] + c * f;
                        zi[k] = c * zi[k] - s * f;
                    }
                }
                if (underflow) {
                    continue;
                }
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void fix_column_signs(std::vector<double>& z, int n) {
    for (int k = 0; k < n; ++k) {
        double* col = z.data() + static_cast<std::size_t>(k) * n;
        double peak = 0.0;
        for (int i = 0; i < n; ++i) {
            peak = std::max(peak, std::abs(col[i]));
        }
        // first component that is unambiguously nonzero sets the sign
        const double threshold = 1e-6 * peak;
        for (int i = 0; i < n; ++i) {
            if (std::abs(col[i]) > threshold) {
                if (col[i] < 0.0) {
                    for (int j = 0; j < n; ++j) {
                        col[j] = -col[j];
                    }
                }
                break;
            }
        }
    }
}

}  // namespace

EigenDecomposition decompose(const TridiagonalHamiltonian& h) {
    const int n = h.dim;
    if (n < 1) {
        throw std::invalid_argument("decompose: dim must be >= 1");
    }
    if (static_cast<int>(h.diagonal.size()) != n ||
        static_cast<int>(h.off_diagonal.size()) != n - 1) {
        throw std::invalid_argument("decompose: inconsistent tridiagonal storage");
    }

    std::vector<double> d = h.diagonal;
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    std::copy(h.off_diagonal.begin(), h.off_diagonal.end(), e.begin());

    std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        z[static_cast<std::size_t>(k) * n + k] = 1.0;
    }

    if (n > 1) {
        ql_implicit_shift(d, e, z, n);
    }

    // sort eigenvalues ascending, permuting eigenvector columns alongside
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&d](int a, int b) { return d[a] < d[b]; });

    EigenDecomposition out;
    out.dim = n;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = d[order[k]];
        const double* src = z.data() + static_cast<std::size_t>(order[k]) * n;
        double* dst = out.eigenvectors.data() + static_cast<std::size_t>(k) * n;
        std::copy(src, src + n, dst);
    }
    fix_column_signs(out.eigenvectors, n);
    return out;
}

}  // namespace tcqb
