#include "uncdyn/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uncdyn {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSweepTol = 1e-14;

double off_diagonal_mass(const ComplexMatrix& h) {
    const std::size_t n = h.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

// One Jacobi rotation zeroing h(p,q). The pivot's phase is folded into the
// rotation so the 2x2 subproblem reduces to the real symmetric case.
void rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const complexd b = h(p, q);
    const double w = std::abs(b);
    if (w == 0.0) return;

    const complexd phase = b / w;             // e^{i beta}
    const complexd phase_conj = std::conj(phase);

    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const double theta = (aqq - app) / (2.0 * w);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const std::size_t n = h.dim();
    // columns p,q: H <- H G with G(p,p)=c, G(p,q)=s, G(q,p)=-s e^{-ib}, G(q,q)=c e^{-ib}
    for (std::size_t i = 0; i < n; ++i) {
        const complexd hip = h(i, p);
        const complexd hiq = h(i, q);
        h(i, p) = c * hip - s * phase_conj * hiq;
        h(i, q) = s * hip + c * phase_conj * hiq;
    }
    // rows p,q: H <- G† H
    for (std::size_t j = 0; j < n; ++j) {
        const complexd hpj = h(p, j);
        const complexd hqj = h(q, j);
        h(p, j) = c * hpj - s * phase * hqj;
        h(q, j) = s * hpj + c * phase * hqj;
    }
    // the 2x2 block is now diagonal up to roundoff dust
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = complexd(app - t * w, 0.0);
    h(q, q) = complexd(aqq + t * w, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const complexd vip = v(i, p);
        const complexd viq = v(i, q);
        v(i, p) = c * vip - s * phase_conj * viq;
        v(i, q) = s * vip + c * phase_conj * viq;
    }
}

}  // namespace

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h) {
    require_hermitian(h, "hermitian_eigendecomposition");
    const std::size_t n = h.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eigendecomposition: empty matrix");

    ComplexMatrix work = h;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = kSweepTol * std::max(frobenius_norm(h), 1e-300);

    bool converged = off_diagonal_mass(work) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(work, v, p, q);
        converged = off_diagonal_mass(work) <= target;
    }
    if (!converged) {
        throw std::runtime_error("hermitian_eigendecomposition: no convergence after " +
                                 std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return work(a, a).real() < work(b, b).real();
    });

    EigenDecomposition eig;
    eig.eigenvalues.resize(n);
    eig.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        eig.eigenvalues[k] = work(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) eig.eigenvectors(i, k) = v(i, order[k]);
    }
    return eig;
}

ComplexMatrix unitary_exponential(const EigenDecomposition& eig, double s) {
    const std::size_t n = eig.eigenvectors.dim();
    ComplexMatrix scaled(n);
    for (std::size_t k = 0; k < n; ++k) {
        const complexd phase = std::polar(1.0, s * eig.eigenvalues[k]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) = eig.eigenvectors(i, k) * phase;
    }
    return mat_mul(scaled, adjoint(eig.eigenvectors));
}

ComplexMatrix unitary_conjugation_exponential(const EigenDecomposition& eig, double s,
                                              const ComplexMatrix& a) {
    require_same_dim(eig.eigenvectors, a, "unitary_conjugation_exponential");
    const ComplexMatrix u = unitary_exponential(eig, s);
    return mat_mul(mat_mul(u, a), adjoint(u));
}

ComplexMatrix unitary_conjugation_exponential(const ComplexMatrix& h, double s,
                                              const ComplexMatrix& a) {
    return unitary_conjugation_exponential(hermitian_eigendecomposition(h), s, a);
}

}  // namespace uncdyn
