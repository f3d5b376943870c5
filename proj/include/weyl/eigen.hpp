#pragma once

#include <vector>

#include "weyl/matrix.hpp"

namespace weyl {

struct EigenDecomposition {
    std::vector<double> values;  // ascending; ties keep original index order
    ComplexMatrix vectors;       // unitary, column k belongs to values[k]
};

// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Eigenvector
// phases are fixed by making each column's largest-magnitude component real
// positive, so decompositions are reproducible. Throws NotHermitian when
// ||h - h*||_F > tol * ||h||_F and NoConvergence past 100 sweeps.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h, double tol = 1e-12);

}  // namespace weyl
