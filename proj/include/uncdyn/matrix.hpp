#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace uncdyn {

using complexd = std::complex<double>;

/// Dense square complex matrix, row-major. The universal operator
/// representation for every observable and Hamiltonian in this library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<complexd>> rows);

    std::size_t dim() const { return dim_; }

    complexd& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const complexd& operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    complexd* data() { return data_.data(); }
    const complexd* data() const { return data_.data(); }

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<complexd> data_;
};

// Kernels. mat_mul dispatches to an OpenMP row-parallel loop above a size
// threshold; mat_mul_serial is the plain reference kept for testing and
// benchmarking. Both produce identical floating-point results: the per-entry
// accumulation order does not depend on the thread count.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_mul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);

/// ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// ab + ba
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd scale, const ComplexMatrix& a);
std::vector<complexd> operator*(const ComplexMatrix& a, const std::vector<complexd>& v);

/// max_ij |a(i,j)|
double max_abs(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// max_ij |a(i,j) - conj(a(j,i))|
double hermiticity_defect(const ComplexMatrix& a);
bool all_finite(const ComplexMatrix& a);

/// Tolerance under which a matrix is accepted as Hermitian:
/// 1e-10 * max(1, ||a||_max). Inputs failing it are rejected, never
/// symmetrized.
double hermitian_tolerance(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a);
void require_hermitian(const ComplexMatrix& a, const char* what);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace uncdyn
