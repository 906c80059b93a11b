#pragma once
#include <complex>
#include <vector>

// dense complex linear algebra for multi-qubit operators; dimensions stay <= 64,
// so everything is row-major dense and eigensolves use cyclic Jacobi sweeps.
//
// index convention: qubit 1 is the most significant bit of a composite index,
// |up> -> 0, |down> -> 1; kron(a, b) puts a on the more significant qubits.

namespace entclone {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;                       // largest entrywise modulus
    bool is_hermitian(double tol = 1e-12) const;  // max |M - M^dag| <= tol

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

// tensor product; dims multiply, first factor most significant
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// reduce a 2^n x 2^n operator to the listed qubits (1-based labels, kept in
// ascending label order); trace is preserved
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& keep);

// transpose the tensor factors of the listed qubits only; hermiticity is preserved
ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<int>& qubits);

struct EigenSystem {
    std::vector<double> values;  // real, sorted descending
    ComplexMatrix vectors;       // unitary, column k belongs to values[k]
};

// cyclic Jacobi for Hermitian matrices; throws std::invalid_argument when the
// input is not Hermitian within 1e-10
EigenSystem herm_eig(const ComplexMatrix& m);

// Hermitian square root of a positive semidefinite matrix; eigenvalues in
// [-1e-10, 0] are clamped to zero, anything lower throws
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// extend an n x k matrix with orthonormal columns to an n x n unitary; the
// first k columns of the result equal the input bit-for-bit
ComplexMatrix complete_isometry(const ComplexMatrix& v);

}  // namespace entclone
