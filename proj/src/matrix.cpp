#include "uncdyn/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uncdyn {

namespace {

// Row-parallel kernels only pay off once a row holds enough work; below this
// the dims seen here (2..32) lose to thread fork overhead.
constexpr std::size_t kParallelMinDim = 64;

// ikj loop order: for each output entry the k-accumulation runs in ascending
// order, so serial and row-parallel execution are bit-identical.
void mul_rows(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out,
              std::size_t row_begin, std::size_t row_end) {
    const std::size_t n = a.dim();
    for (std::size_t i = row_begin; i < row_end; ++i) {
        complexd* out_row = out.data() + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const complexd aik = a(i, k);
            const complexd* b_row = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                out_row[j] += aik * b_row[j];
            }
        }
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<complexd>> rows) {
    ComplexMatrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.dim()) {
            throw std::invalid_argument("ComplexMatrix::from_rows: ragged row " +
                                        std::to_string(i));
        }
        std::size_t j = 0;
        for (const complexd& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
}

ComplexMatrix mat_mul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "mat_mul");
    ComplexMatrix out(a.dim());
    mul_rows(a, b, out, 0, a.dim());
    return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "mat_mul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
#ifdef _OPENMP
    if (n >= kParallelMinDim) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            mul_rows(a, b, out, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
        }
        return out;
    }
#endif
    mul_rows(a, b, out, 0, n);
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return mat_mul(a, b) - mat_mul(b, a);
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "anticommutator");
    return mat_mul(a, b) + mat_mul(b, a);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator+");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = a.data()[i] + b.data()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator-");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = a.data()[i] - b.data()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = -a.data()[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

ComplexMatrix operator*(complexd scale, const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n * n; ++i) out.data()[i] = scale * a.data()[i];
    return out;
}

std::vector<complexd> operator*(const ComplexMatrix& a, const std::vector<complexd>& v) {
    const std::size_t n = a.dim();
    if (v.size() != n) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch (" +
                                    std::to_string(n) + " vs " + std::to_string(v.size()) + ")");
    }
    std::vector<complexd> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        complexd acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n * n; ++i) m = std::max(m, std::abs(a.data()[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n * n; ++i) s += std::norm(a.data()[i]);
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& a) {
    double m = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

bool all_finite(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n * n; ++i) {
        if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag())) return false;
    }
    return true;
}

double hermitian_tolerance(const ComplexMatrix& a) {
    return 1e-10 * std::max(1.0, max_abs(a));
}

bool is_hermitian(const ComplexMatrix& a) {
    return hermiticity_defect(a) <= hermitian_tolerance(a);
}

void require_hermitian(const ComplexMatrix& a, const char* what) {
    if (!all_finite(a)) {
        throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
    }
    if (!is_hermitian(a)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian (defect " +
                                    std::to_string(hermiticity_defect(a)) + ")");
    }
}

}  // namespace uncdyn
