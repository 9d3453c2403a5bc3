#pragma once

#include "uncdyn/eigen.hpp"
#include "uncdyn/matrix.hpp"

namespace uncdyn {

/// Normalized pure state |Psi>. Rejects vectors whose 2-norm deviates from 1
/// by more than 1e-12.
class StateVector {
public:
    explicit StateVector(std::vector<complexd> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<complexd>& amplitudes() const { return amplitudes_; }
    const complexd& operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    std::vector<complexd> amplitudes_;
};

/// <a|b> with the conjugate on the left argument.
complexd inner(const std::vector<complexd>& a, const std::vector<complexd>& b);

/// A time-independent Hamiltonian plus hbar. The eigendecomposition is
/// computed once at construction and shared by every evolution, so a
/// QuantumSystem is immutable and safe to use from many threads.
class QuantumSystem {
public:
    QuantumSystem(ComplexMatrix hamiltonian, double hbar);

    std::size_t dim() const { return hamiltonian_.dim(); }
    double hbar() const { return hbar_; }
    const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
    const EigenDecomposition& eigensystem() const { return eig_; }

private:
    ComplexMatrix hamiltonian_;
    double hbar_;
    EigenDecomposition eig_;
};

/// One grid point of the two-time uncertainty relation:
/// lhs = dA(t1) dB(t2), rhs = |<[A(t1),B(t2)]>| / 2, slack = lhs - rhs.
struct TwoTimeUncertaintyRecord {
    double t1 = 0.0;
    double t2 = 0.0;
    double delta_a_t1 = 0.0;
    double delta_b_t2 = 0.0;
    double lhs = 0.0;
    complexd commutator_expectation;
    double rhs = 0.0;
    double slack = 0.0;
};

struct SchwarzDecomposition {
    double product_sq = 0.0;           // (dA(t1))^2 (dB(t2))^2
    double commutator_term = 0.0;      // |<[A(t1),B(t2)]>|^2 / 4
    double anticommutator_term = 0.0;  // |<{dA(t1),dB(t2)}>|^2 / 4
};

/// A(t) = e^{iHt/hbar} A e^{-iHt/hbar}. Requires Hermitian a.
ComplexMatrix evolve_observable(const QuantumSystem& sys, const ComplexMatrix& a, double t);

/// <Psi|A|Psi>
complexd expectation(const StateVector& psi, const ComplexMatrix& a);

/// dA = A - <A> I, so that <Psi|dA|Psi> = 0.
ComplexMatrix fluctuation_operator(const StateVector& psi, const ComplexMatrix& a_t);

/// dA(t) = sqrt(<A^2(t)> - <A(t)>^2). Radicands in [-1e-12, 0) clamp to 0;
/// anything more negative signals an inconsistency and throws.
double variance(const StateVector& psi, const QuantumSystem& sys, const ComplexMatrix& a,
                double t);

/// Same, for an observable already evolved to its measurement time.
double variance_of_evolved(const StateVector& psi, const ComplexMatrix& a_t);

/// [A(t1), B(t2)]
ComplexMatrix two_time_commutator(const QuantumSystem& sys, const ComplexMatrix& a, double t1,
                                  const ComplexMatrix& b, double t2);

/// The Schwarz-inequality split: product_sq >= commutator_term +
/// anticommutator_term, with the commutator expectation purely imaginary and
/// the fluctuation anticommutator expectation purely real.
SchwarzDecomposition schwarz_decomposition(const StateVector& psi, const QuantumSystem& sys,
                                           const ComplexMatrix& a, double t1,
                                           const ComplexMatrix& b, double t2);

TwoTimeUncertaintyRecord uncertainty_record(const StateVector& psi, const QuantumSystem& sys,
                                            const ComplexMatrix& a, double t1,
                                            const ComplexMatrix& b, double t2);

/// Record from observables already evolved to t1 and t2; the building block
/// for grid sweeps that reuse evolved matrices across grid points.
TwoTimeUncertaintyRecord uncertainty_record_evolved(const StateVector& psi,
                                                    const ComplexMatrix& a_t1, double t1,
                                                    const ComplexMatrix& b_t2, double t2);

/// (1/i hbar) [A(t), H], the right-hand side of the equation of motion.
ComplexMatrix heisenberg_rhs(const QuantumSystem& sys, const ComplexMatrix& a, double t);

}  // namespace uncdyn
