#include "uncdyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uncdyn {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kRadicandFloor = -1e-12;

}  // namespace

StateVector::StateVector(std::vector<complexd> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw std::invalid_argument("StateVector: empty amplitude vector");
    double norm_sq = 0.0;
    for (const complexd& c : amplitudes_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("StateVector: non-finite amplitude");
        }
        norm_sq += std::norm(c);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: norm " + std::to_string(std::sqrt(norm_sq)) +
                                    " is not 1 within 1e-12");
    }
}

complexd inner(const std::vector<complexd>& a, const std::vector<complexd>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
    complexd acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

QuantumSystem::QuantumSystem(ComplexMatrix hamiltonian, double hbar)
    : hamiltonian_(std::move(hamiltonian)), hbar_(hbar) {
    if (!(hbar_ > 0.0)) {
        throw std::invalid_argument("QuantumSystem: hbar must be positive, got " +
                                    std::to_string(hbar_));
    }
    require_hermitian(hamiltonian_, "QuantumSystem hamiltonian");
    eig_ = hermitian_eigendecomposition(hamiltonian_);
}

ComplexMatrix evolve_observable(const QuantumSystem& sys, const ComplexMatrix& a, double t) {
    require_same_dim(sys.hamiltonian(), a, "evolve_observable");
    require_hermitian(a, "evolve_observable observable");
    if (t == 0.0) return a;

    // A(t) = V e^{i s L} (V† A V) e^{-i s L} V†: the middle factor is an
    // entrywise phase twist, leaving two dense products per evaluation.
    const EigenDecomposition& eig = sys.eigensystem();
    const std::size_t n = a.dim();
    const double s = t / sys.hbar();
    ComplexMatrix in_basis = mat_mul(mat_mul(adjoint(eig.eigenvectors), a), eig.eigenvectors);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            in_basis(i, j) *= std::polar(1.0, s * (eig.eigenvalues[i] - eig.eigenvalues[j]));
    return mat_mul(mat_mul(eig.eigenvectors, in_basis), adjoint(eig.eigenvectors));
}

complexd expectation(const StateVector& psi, const ComplexMatrix& a) {
    if (psi.dim() != a.dim()) {
        throw std::invalid_argument("expectation: dimension mismatch (" +
                                    std::to_string(psi.dim()) + " vs " + std::to_string(a.dim()) +
                                    ")");
    }
    return inner(psi.amplitudes(), a * psi.amplitudes());
}

ComplexMatrix fluctuation_operator(const StateVector& psi, const ComplexMatrix& a_t) {
    const complexd mean = expectation(psi, a_t);
    ComplexMatrix out = a_t;
    for (std::size_t i = 0; i < out.dim(); ++i) out(i, i) -= mean;
    return out;
}

namespace {

// <A^2> - <A>^2, clamping radicands in the roundoff band [-1e-12, 0) to 0.
double variance_sq_of_evolved(const StateVector& psi, const ComplexMatrix& a_t) {
    const std::vector<complexd> a_psi = a_t * psi.amplitudes();
    const double mean = inner(psi.amplitudes(), a_psi).real();
    const double second = inner(psi.amplitudes(), a_t * a_psi).real();
    const double radicand = second - mean * mean;
    if (radicand < kRadicandFloor) {
        throw std::runtime_error("variance: radicand " + std::to_string(radicand) +
                                 " below the -1e-12 roundoff floor");
    }
    return radicand < 0.0 ? 0.0 : radicand;
}

}  // namespace

double variance_of_evolved(const StateVector& psi, const ComplexMatrix& a_t) {
    return std::sqrt(variance_sq_of_evolved(psi, a_t));
}

double variance(const StateVector& psi, const QuantumSystem& sys, const ComplexMatrix& a,
                double t) {
    return variance_of_evolved(psi, evolve_observable(sys, a, t));
}

ComplexMatrix two_time_commutator(const QuantumSystem& sys, const ComplexMatrix& a, double t1,
                                  const ComplexMatrix& b, double t2) {
    return commutator(evolve_observable(sys, a, t1), evolve_observable(sys, b, t2));
}

SchwarzDecomposition schwarz_decomposition(const StateVector& psi, const QuantumSystem& sys,
                                           const ComplexMatrix& a, double t1,
                                           const ComplexMatrix& b, double t2) {
    const ComplexMatrix a_t1 = evolve_observable(sys, a, t1);
    const ComplexMatrix b_t2 = evolve_observable(sys, b, t2);

    SchwarzDecomposition out;
    out.product_sq = variance_sq_of_evolved(psi, a_t1) * variance_sq_of_evolved(psi, b_t2);

    const complexd comm = expectation(psi, commutator(a_t1, b_t2));
    const ComplexMatrix da = fluctuation_operator(psi, a_t1);
    const ComplexMatrix db = fluctuation_operator(psi, b_t2);
    const complexd anti = expectation(psi, anticommutator(da, db));

    out.commutator_term = 0.25 * std::norm(comm);
    out.anticommutator_term = 0.25 * std::norm(anti);
    return out;
}

TwoTimeUncertaintyRecord uncertainty_record_evolved(const StateVector& psi,
                                                    const ComplexMatrix& a_t1, double t1,
                                                    const ComplexMatrix& b_t2, double t2) {
    TwoTimeUncertaintyRecord rec;
    rec.t1 = t1;
    rec.t2 = t2;
    rec.delta_a_t1 = variance_of_evolved(psi, a_t1);
    rec.delta_b_t2 = variance_of_evolved(psi, b_t2);
    rec.lhs = rec.delta_a_t1 * rec.delta_b_t2;
    rec.commutator_expectation = expectation(psi, commutator(a_t1, b_t2));
    rec.rhs = 0.5 * std::abs(rec.commutator_expectation);
    rec.slack = rec.lhs - rec.rhs;
    return rec;
}

TwoTimeUncertaintyRecord uncertainty_record(const StateVector& psi, const QuantumSystem& sys,
                                            const ComplexMatrix& a, double t1,
                                            const ComplexMatrix& b, double t2) {
    return uncertainty_record_evolved(psi, evolve_observable(sys, a, t1), t1,
                                      evolve_observable(sys, b, t2), t2);
}

ComplexMatrix heisenberg_rhs(const QuantumSystem& sys, const ComplexMatrix& a, double t) {
    const ComplexMatrix a_t = evolve_observable(sys, a, t);
    return complexd(0.0, -1.0 / sys.hbar()) * commutator(a_t, sys.hamiltonian());
}

}  // namespace uncdyn
