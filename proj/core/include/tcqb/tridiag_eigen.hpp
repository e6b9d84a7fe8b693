// tridiag_eigen.hpp — Full eigendecomposition of real symmetric tridiagonal matrices.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tcqb/model.hpp"

namespace tcqb {

// Raised when the QL iteration fails to converge within the sweep cap.
class EigenSolverError : public std::runtime_error {
public:
    EigenSolverError(int dim, int index)
        : std::runtime_error("tridiagonal QL failed to converge: dim=" +
                             std::to_string(dim) + ", eigenvalue index=" +
                             std::to_string(index)),
          dim_(dim),
          index_(index) {}

    int dim() const { return dim_; }
    int failing_index() const { return index_; }

private:
    int dim_;
    int index_;
};

// Eigenvalues sorted ascending; eigenvector k stored as the contiguous
// column k of a column-major dim x dim orthogonal matrix. The gauge is fixed
// by making each eigenvector's first significant component positive, so the
// decomposition is reproducible run to run.
struct EigenDecomposition {
    int dim = 0;
    std::vector<double> eigenvalues;    // ascending
    std::vector<double> eigenvectors;   // column-major, column k <-> eigenvalue k

    const double* column(int k) const {
        return eigenvectors.data() + static_cast<std::size_t>(k) * dim;
    }
    double entry(int row, int col) const {
        return eigenvectors[static_cast<std::size_t>(col) * dim + row];
    }
};

// Implicit-shift QL with Wilkinson shifts. Deterministic for identical input.
// Throws EigenSolverError after 50 sweeps without deflation on one eigenvalue.
EigenDecomposition decompose(const TridiagonalHamiltonian& h);

}  // namespace tcqb
