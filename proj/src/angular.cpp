#include "entclone/angular.hpp"

#include <cmath>
#include <stdexcept>

namespace entclone::angular {

namespace {

// exact in doubles up to 18!
double factorial(int n) {
    static const double table[] = {
        1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0, 362880.0,
        3628800.0, 39916800.0, 479001600.0, 6227020800.0, 87178291200.0,
        1307674368000.0, 20922789888000.0, 355687428096000.0, 6402373705728000.0};
    if (n < 0 || n > 18) throw std::invalid_argument("factorial argument out of range");
    return table[n];
}

// factorial of x2/2 where x2 is a doubled integer; negative means the term is
// outside the summation range and must have been excluded already
double fact2(int x2) { return factorial(x2 / 2); }

int to_doubled(double x, const char* what) {
    const double d = 2.0 * x;
    const int t = static_cast<int>(std::lround(d));
    if (std::abs(d - t) > 1e-9) throw std::invalid_argument(std::string(what) + " is not a half-integer");
    return t;
}

// (J,M) labels of the coupled basis in storage order
constexpr int kCoupledJ[4] = {1, 1, 1, 0};
constexpr int kCoupledM[4] = {1, 0, -1, 0};

// 4x4 basis change from coupled to pair product basis (columns are |J,M>)
const ComplexMatrix& pair_basis() {
    static const ComplexMatrix b = [] {
        const double r = 1.0 / std::sqrt(2.0);
        ComplexMatrix m(4, 4);
        m(0, 0) = 1.0;               // |1,1>  = |uu>
        m(1, 1) = m(2, 1) = r;       // |1,0>  = (|ud>+|du>)/sqrt2
        m(3, 2) = 1.0;               // |1,-1> = |dd>
        m(1, 3) = r;                 // |0,0>  = (|ud>-|du>)/sqrt2
        m(2, 3) = -r;
        return m;
    }();
    return b;
}

void check_op_index(int ja, int jb, int k, int q) {
    if ((ja != 0 && ja != 1) || (jb != 0 && jb != 1))
        throw std::invalid_argument("tensor op: Ja, Jb must be 0 or 1");
    if (k < std::abs(ja - jb) || k > ja + jb)
        throw std::invalid_argument("tensor op: rank violates the triangle rule");
    if (q < -k || q > k) throw std::invalid_argument("tensor op: component out of range");
}

// embedded ops for both pairs in canonical label order, built once
const std::array<ComplexMatrix, 16>& embedded_ops(Pair p) {
    static const auto tables = [] {
        std::array<std::array<ComplexMatrix, 16>, 2> t;
        for (int pi = 0; pi < 2; ++pi)
            for (int i = 0; i < 16; ++i) {
                const OpLabel& l = op_labels()[i];
                t[pi][i] = tensor_op({pi == 0 ? Pair::P13 : Pair::P24, l.ja, l.jb, l.k, l.q});
            }
        return t;
    }();
    return tables[p == Pair::P13 ? 0 : 1];
}

}  // namespace

double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    const int tj[3] = {to_doubled(j1, "j1"), to_doubled(j2, "j2"), to_doubled(j3, "j3")};
    const int tm[3] = {to_doubled(m1, "m1"), to_doubled(m2, "m2"), to_doubled(m3, "m3")};
    for (int i = 0; i < 3; ++i) {
        if (tj[i] < 0) throw std::invalid_argument("wigner_3j: negative angular momentum");
        if (std::abs(tm[i]) > tj[i]) throw std::invalid_argument("wigner_3j: |m| exceeds j");
        if ((tj[i] - tm[i]) % 2 != 0) throw std::invalid_argument("wigner_3j: j, m parity mismatch");
    }
    if (tm[0] + tm[1] + tm[2] != 0) return 0.0;
    if (std::abs(tj[0] - tj[1]) > tj[2] || tj[2] > tj[0] + tj[1]) return 0.0;
    if ((tj[0] + tj[1] + tj[2]) % 2 != 0) return 0.0;

    const int j1d = tj[0], j2d = tj[1], j3d = tj[2];
    const int m1d = tm[0], m2d = tm[1], m3d = tm[2];

    const double delta = fact2(j1d + j2d - j3d) * fact2(j1d - j2d + j3d) *
                         fact2(-j1d + j2d + j3d) / fact2(j1d + j2d + j3d + 2);
    const double pref = fact2(j1d + m1d) * fact2(j1d - m1d) * fact2(j2d + m2d) *
                        fact2(j2d - m2d) * fact2(j3d + m3d) * fact2(j3d - m3d);

    const int tmin = std::max({0, (j2d - j3d - m1d) / 2, (j1d - j3d + m2d) / 2});
    const int tmax = std::min({(j1d + j2d - j3d) / 2, (j1d - m1d) / 2, (j2d + m2d) / 2});
    double sum = 0.0;
    for (int t = tmin; t <= tmax; ++t) {
        const double den = factorial(t) * fact2(j1d + j2d - j3d - 2 * t) *
                           fact2(j1d - m1d - 2 * t) * fact2(j2d + m2d - 2 * t) *
                           fact2(j3d - j2d + m1d + 2 * t) * fact2(j3d - j1d - m2d + 2 * t);
        sum += (t % 2 == 0 ? 1.0 : -1.0) / den;
    }
    const int phase_exp = (j1d - j2d - m3d) / 2;
    const double phase = (phase_exp % 2 == 0) ? 1.0 : -1.0;
    return phase * std::sqrt(delta * pref) * sum;
}

ComplexMatrix coupled_state(int j, int m) {
    for (int c = 0; c < 4; ++c)
        if (kCoupledJ[c] == j && kCoupledM[c] == m) {
            ComplexMatrix v(4, 1);
            for (int i = 0; i < 4; ++i) v(i, 0) = pair_basis()(i, c);
            return v;
        }
    throw std::invalid_argument("coupled_state: invalid (J,M)");
}

ComplexMatrix coupled_to_product(int j, int m, int jp, int mp) {
    const ComplexMatrix v13 = coupled_state(j, m);
    const ComplexMatrix v24 = coupled_state(jp, mp);
    ComplexMatrix out(16, 1);
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            for (int b3 = 0; b3 < 2; ++b3)
                for (int b4 = 0; b4 < 2; ++b4)
                    out(b1 * 8 + b2 * 4 + b3 * 2 + b4, 0) =
                        v13(b1 * 2 + b3, 0) * v24(b2 * 2 + b4, 0);
    return out;
}

const ComplexMatrix& coupled_basis_16() {
    static const ComplexMatrix b = [] {
        ComplexMatrix m(16, 16);
        for (int c13 = 0; c13 < 4; ++c13)
            for (int c24 = 0; c24 < 4; ++c24) {
                const ComplexMatrix col = coupled_to_product(kCoupledJ[c13], kCoupledM[c13],
                                                             kCoupledJ[c24], kCoupledM[c24]);
                for (int i = 0; i < 16; ++i) m(i, 4 * c13 + c24) = col(i, 0);
            }
        return m;
    }();
    return b;
}

ComplexMatrix tensor_op_pair(int ja, int jb, int k, int q) {
    check_op_index(ja, jb, k, q);
    ComplexMatrix t(4, 4);  // in the coupled basis first
    for (int ia = 0; ia < 4; ++ia)
        for (int ib = 0; ib < 4; ++ib) {
            if (kCoupledJ[ia] != ja || kCoupledJ[ib] != jb) continue;
            const int ma = kCoupledM[ia], mb = kCoupledM[ib];
            const double phase = ((ja - ma) % 2 == 0) ? 1.0 : -1.0;
            t(ia, ib) = phase * std::sqrt(2.0 * k + 1.0) * wigner_3j(ja, jb, k, ma, -mb, -q);
        }
    return pair_basis() * t * pair_basis().adjoint();
}

ComplexMatrix tensor_op(const TensorOpIndex& idx) {
    const ComplexMatrix t = tensor_op_pair(idx.ja, idx.jb, idx.k, idx.q);
    ComplexMatrix out(16, 16);
    for (int r = 0; r < 16; ++r) {
        const int b1 = (r >> 3) & 1, b2 = (r >> 2) & 1, b3 = (r >> 1) & 1, b4 = r & 1;
        for (int c = 0; c < 16; ++c) {
            const int c1 = (c >> 3) & 1, c2 = (c >> 2) & 1, c3 = (c >> 1) & 1, c4 = c & 1;
            if (idx.pair == Pair::P13) {
                if (b2 == c2 && b4 == c4) out(r, c) = t(b1 * 2 + b3, c1 * 2 + c3);
            } else {
                if (b1 == c1 && b3 == c3) out(r, c) = t(b2 * 2 + b4, c2 * 2 + c4);
            }
        }
    }
    return out;
}

const std::array<OpLabel, 16>& op_labels() {
    static const std::array<OpLabel, 16> labels = [] {
        std::array<OpLabel, 16> l{};
        int n = 0;
        constexpr int jj[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (const auto& p : jj)
            for (int k = std::abs(p[0] - p[1]); k <= p[0] + p[1]; ++k)
                for (int q = -k; q <= k; ++q) l[n++] = {p[0], p[1], k, q};
        return l;
    }();
    return labels;
}

int op_index(int ja, int jb, int k, int q) {
    const auto& labels = op_labels();
    for (int i = 0; i < 16; ++i) {
        const OpLabel& l = labels[i];
        if (l.ja == ja && l.jb == jb && l.k == k && l.q == q) return i;
    }
    throw std::invalid_argument("op_index: no such tensor operator label");
}

CoeffTable tensor_coeffs(const ComplexMatrix& rho) {
    if (rho.rows() != 16 || rho.cols() != 16)
        throw std::invalid_argument("tensor_coeffs: expected a 16x16 operator");
    const auto& e13 = embedded_ops(Pair::P13);
    const auto& e24 = embedded_ops(Pair::P24);
    CoeffTable c{};
    for (int j = 0; j < 16; ++j) {
        const ComplexMatrix x = e24[j].adjoint() * rho;
        for (int i = 0; i < 16; ++i) {
            // Tr(T13^dag T24^dag rho) as the Frobenius inner product <T13, T24^dag rho>
            cplx s = 0.0;
            for (int r = 0; r < 16; ++r)
                for (int t = 0; t < 16; ++t) s += std::conj(e13[i](r, t)) * x(r, t);
            c[i][j] = s;
        }
    }
    return c;
}

ComplexMatrix synthesize(const CoeffTable& c) {
    const auto& e13 = embedded_ops(Pair::P13);
    const auto& e24 = embedded_ops(Pair::P24);
    ComplexMatrix out(16, 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            if (c[i][j] == cplx(0.0, 0.0)) continue;
            out += c[i][j] * (e13[i] * e24[j]);
        }
    return out;
}

}  // namespace entclone::angular
