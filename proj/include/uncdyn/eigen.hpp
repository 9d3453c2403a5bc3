#pragma once

#include "uncdyn/matrix.hpp"

namespace uncdyn {

/// Eigenvalues ascending (ties keep original index order); eigenvector k is
/// column k of `eigenvectors`. Satisfies V†V = I and H = V diag(lambda) V†
/// to around 1e-14.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi on a complex Hermitian matrix. Rejects non-Hermitian input
/// (defect above 1e-10 * max(1, ||h||_max)); throws after 100 sweeps without
/// reaching off-diagonal Frobenius mass <= 1e-14 * ||h||_F.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h);

/// U(s) = V diag(e^{i s lambda}) V† from a precomputed decomposition.
ComplexMatrix unitary_exponential(const EigenDecomposition& eig, double s);

/// e^{i s h} a e^{-i s h}, computed through the eigendecomposition of h.
/// Hermitian input a yields Hermitian output up to roundoff.
ComplexMatrix unitary_conjugation_exponential(const ComplexMatrix& h, double s,
                                              const ComplexMatrix& a);
ComplexMatrix unitary_conjugation_exponential(const EigenDecomposition& eig, double s,
                                              const ComplexMatrix& a);

}  // namespace uncdyn
