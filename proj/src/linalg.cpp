#include "entclone/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entclone {

namespace {

int qubit_count(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    int n = 0;
    while ((1 << n) < m.rows()) ++n;
    if ((1 << n) != m.rows()) throw std::invalid_argument("dimension must be a power of 2");
    return n;
}

// bit of qubit q (1-based, qubit 1 most significant) inside an n-qubit index
inline int qubit_bit(int index, int q, int n) { return (index >> (n - q)) & 1; }

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

cplx ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& keep) {
    const int n = qubit_count(m);
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty()) throw std::invalid_argument("partial_trace: empty keep set");
    for (int q : kept)
        if (q < 1 || q > n) throw std::invalid_argument("partial_trace: qubit label out of range");

    std::vector<int> traced;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    const int dk = 1 << nk, dt = 1 << nt;

    // scatter the bits of a reduced index and a traced assignment into a full index
    auto full_index = [&](int kbits, int tbits) {
        int x = 0;
        for (int p = 0; p < nk; ++p) x |= ((kbits >> (nk - 1 - p)) & 1) << (n - kept[p]);
        for (int p = 0; p < nt; ++p) x |= ((tbits >> (nt - 1 - p)) & 1) << (n - traced[p]);
        return x;
    };

    ComplexMatrix out(dk, dk);
    for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk; ++b) {
            cplx s = 0.0;
            for (int t = 0; t < dt; ++t) s += m(full_index(a, t), full_index(b, t));
            out(a, b) = s;
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<int>& qubits) {
    const int n = qubit_count(m);
    for (int q : qubits)
        if (q < 1 || q > n) throw std::invalid_argument("partial_transpose: qubit label out of range");

    const int d = m.rows();
    ComplexMatrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // swap the designated qubits' bits between row and column index
            int ip = i, jp = j;
            for (int q : qubits) {
                const int shift = n - q;
                const int bi = qubit_bit(i, q, n), bj = qubit_bit(j, q, n);
                ip = (ip & ~(1 << shift)) | (bj << shift);
                jp = (jp & ~(1 << shift)) | (bi << shift);
            }
            out(ip, jp) = m(i, j);
        }
    return out;
}

EigenSystem herm_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("herm_eig: non-square input");
    if (!m.is_hermitian(1e-10)) throw std::invalid_argument("herm_eig: input not Hermitian");

    const int n = m.rows();
    // iterate on the hermitized copy so tiny asymmetries cannot bias the sweeps
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double target = 1e-14 * a.frobenius_norm();
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 60 && off_norm() > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                // factor the phase out of a(p,q), then a real Jacobi rotation applies
                const cplx u = a(p, q) / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx gqp = -s * std::conj(u), gqq = c * std::conj(u);
                for (int k = 0; k < n; ++k) {  // columns: A <- A G, V <- V G
                    const cplx ap = a(k, p), aq = a(k, q);
                    a(k, p) = c * ap + gqp * aq;
                    a(k, q) = s * ap + gqq * aq;
                    const cplx vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp + gqp * vq;
                    v(k, q) = s * vp + gqq * vq;
                }
                for (int k = 0; k < n; ++k) {  // rows: A <- G^dag A
                    const cplx ap = a(p, k), aq = a(q, k);
                    a(p, k) = c * ap - s * u * aq;
                    a(q, k) = s * ap + c * u * aq;
                }
            }
    }
    if (off_norm() > target) throw std::runtime_error("herm_eig: Jacobi sweeps did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigenSystem es = herm_eig(m);
    const int n = m.rows();
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        double lam = es.values[k];
        if (lam < -1e-10) throw std::invalid_argument("psd_sqrt: significantly negative eigenvalue");
        lam = std::max(lam, 0.0);
        const double s = std::sqrt(lam);
        if (s == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const cplx vi = s * es.vectors(i, k);
            for (int j = 0; j < n; ++j) out(i, j) += vi * std::conj(es.vectors(j, k));
        }
    }
    return out;
}

ComplexMatrix complete_isometry(const ComplexMatrix& v) {
    const int n = v.rows(), k = v.cols();
    if (k > n) throw std::invalid_argument("complete_isometry: more columns than rows");
    ComplexMatrix gram = v.adjoint() * v;
    if ((gram - ComplexMatrix::identity(k)).max_abs() > 1e-10)
        throw std::invalid_argument("complete_isometry: columns not orthonormal");

    ComplexMatrix u(n, n);
    int filled = 0;
    for (int j = 0; j < k; ++j, ++filled)
        for (int i = 0; i < n; ++i) u(i, filled) = v(i, j);

    // modified Gram-Schmidt against the canonical basis; two passes per
    // candidate for orthogonality at working precision
    std::vector<cplx> w(n);
    for (int cand = 0; cand < n && filled < n; ++cand) {
        for (int i = 0; i < n; ++i) w[i] = (i == cand) ? 1.0 : 0.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int c = 0; c < filled; ++c) {
                cplx dot = 0.0;
                for (int i = 0; i < n; ++i) dot += std::conj(u(i, c)) * w[i];
                for (int i = 0; i < n; ++i) w[i] -= dot * u(i, c);
            }
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) norm2 += std::norm(w[i]);
        const double norm = std::sqrt(norm2);
        if (norm < 1e-8) continue;  // candidate lies in the span already
        for (int i = 0; i < n; ++i) u(i, filled) = w[i] / norm;
        ++filled;
    }
    if (filled < n) throw std::runtime_error("complete_isometry: completion failed");
    return u;
}

}  // namespace entclone
