#include "entclone/measures.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace entclone::measures {

namespace {

void require_density(const ComplexMatrix& rho, int dim) {
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("density matrix has the wrong dimension");
    if (!rho.is_hermitian(1e-10))
        throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(rho.trace() - cplx(1.0, 0.0)) > 1e-10)
        throw std::invalid_argument("density matrix must have unit trace");
    const auto eigs = herm_eig(rho).values;
    if (eigs.back() < -1e-10)
        throw std::invalid_argument("density matrix must be positive semidefinite");
}

int qubit_count(const ComplexMatrix& rho) {
    int n = 0;
    while ((1 << n) < rho.rows()) ++n;
    if ((1 << n) != rho.rows())
        throw std::invalid_argument("matrix dimension is not a power of two");
    return n;
}

}  // namespace

double concurrence(const ComplexMatrix& rho) {
    require_density(rho, 4);

    // spin flip: (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)
    ComplexMatrix flip(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    ComplexMatrix conj_rho(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) conj_rho(r, c) = std::conj(rho(r, c));
    const ComplexMatrix rho_tilde = flip * conj_rho * flip;

    const ComplexMatrix root = psd_sqrt(rho);
    const auto eigs = herm_eig(root * rho_tilde * root).values;

    // rank-deficient states leave eigenvalue dust whose square roots would
    // dominate the error budget, so clamp relative to the leading eigenvalue
    const double cut = 1e-14 * std::max(eigs.front(), 0.0);
    double c = 0.0;
    for (std::size_t k = 0; k < eigs.size(); ++k) {
        const double lam = (eigs[k] > cut) ? std::sqrt(eigs[k]) : 0.0;
        c += (k == 0) ? lam : -lam;
    }
    return std::max(c, 0.0);
}

double entropy(const ComplexMatrix& rho) {
    if (rho.rows() != rho.cols() || !rho.is_hermitian(1e-10))
        throw std::invalid_argument("entropy needs a Hermitian square matrix");
    if (std::abs(rho.trace() - cplx(1.0, 0.0)) > 1e-10)
        throw std::invalid_argument("density matrix must have unit trace");
    const auto eigs = herm_eig(rho).values;
    if (eigs.back() < -1e-10)
        throw std::invalid_argument("density matrix must be positive semidefinite");
    double s = 0.0;
    for (double lam : eigs) {
        if (lam <= 0.0) continue;  // 0 ln 0 = 0, and dust below zero is clamped
        s -= lam * std::log(lam);
    }
    return s;
}

double index_of_correlation(const ComplexMatrix& rho, const std::vector<int>& part_a) {
    const int n = qubit_count(rho);
    const std::set<int> a(part_a.begin(), part_a.end());
    if (a.empty() || static_cast<int>(a.size()) == n)
        throw std::invalid_argument("bipartition must be a proper nonempty subset");
    for (int q : a)
        if (q < 1 || q > n) throw std::invalid_argument("qubit label out of range");

    std::vector<int> b;
    for (int q = 1; q <= n; ++q)
        if (!a.count(q)) b.push_back(q);

    const ComplexMatrix rho_a = partial_trace(rho, std::vector<int>(a.begin(), a.end()));
    const ComplexMatrix rho_b = partial_trace(rho, b);
    return entropy(rho_a) + entropy(rho_b) - entropy(rho);
}

double negativity(const ComplexMatrix& rho, const std::vector<int>& transposed) {
    require_density(rho, rho.rows());
    const auto eigs = herm_eig(partial_transpose(rho, transposed)).values;
    double total = 0.0;
    for (double lam : eigs)
        if (lam < 0.0) total -= lam;
    return total;
}

ClosedFormCurves closed_form_curves(const cloner::EntanglementClass& cls,
                                    const cloner::ClonerParams& params) {
    const double alpha2 = cls.alpha() * cls.alpha();
    const double beta2 = 1.0 - alpha2;
    const double ab = cls.alpha() * cls.beta();

    ClosedFormCurves curves;
    curves.c_in = 2.0 * ab;

    curves.i_in = 0.0;
    if (alpha2 > 0.0) curves.i_in -= 2.0 * alpha2 * std::log(alpha2);
    if (beta2 > 0.0) curves.i_in -= 2.0 * beta2 * std::log(beta2);

    const double a6 = params.a[6].real();
    const double a11 = params.a[11].real();
    curves.c12_formula = std::max(0.0, (4.0 * ab + 1.0) * (2.0 * a6 + a11) - 8.0) / 16.0;
    curves.c13_formula = 0.25 * std::max(0.0, std::abs(-4.0 + 3.0 * a6) - 3.0 * a6 * ab);
    return curves;
}

double find_threshold(const std::function<double(double)>& curve, ThresholdKind kind,
                      double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("bracket must satisfy lo < hi");
    constexpr double kWidth = 1e-8;  // comfortably inside the 1e-6 contract

    if (kind == ThresholdKind::ZeroCrossing) {
        const auto positive = [&](double x) { return curve(x) > 1e-12; };
        bool plo = positive(lo);
        if (plo == positive(hi)) throw std::invalid_argument("feature not bracketed");
        while (hi - lo > kWidth) {
            const double mid = 0.5 * (lo + hi);
            if (positive(mid) == plo)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    // golden section; maxima are found by minimizing the negated curve
    const double sign = (kind == ThresholdKind::Minimum) ? 1.0 : -1.0;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = sign * curve(x1);
    double f2 = sign * curve(x2);
    while (hi - lo > kWidth) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = sign * curve(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = sign * curve(x2);
        }
    }
    return 0.5 * (lo + hi);
}

MeasureReport measure_report(const cloner::EntanglementClass& cls) {
    const cloner::ClonerParams params = cloner::optimal_params(cls);
    const cloner::OutputState out = cloner::assemble_blocks(cls, params);

    const ComplexMatrix psi = cloner::canonical_state(cls);
    ComplexMatrix rho_in(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rho_in(r, c) = psi(r, 0) * std::conj(psi(c, 0));

    const ComplexMatrix rho12 = partial_trace(out.rho, {1, 2});
    const ComplexMatrix rho13 = partial_trace(out.rho, {1, 3});

    MeasureReport rep;
    rep.alpha = cls.alpha();
    rep.c_in = concurrence(rho_in);
    rep.c12 = concurrence(rho12);
    rep.c13 = concurrence(rho13);
    rep.i_in = index_of_correlation(rho_in, {1});
    rep.i12 = index_of_correlation(rho12, {1});
    rep.i13 = index_of_correlation(rho13, {1});
    rep.i_pair = index_of_correlation(out.rho, {1, 2});
    rep.negativity = negativity(out.rho, {3, 4});
    rep.f_max = cloner::f_max(cls);
    rep.f1_prime = cloner::single_pair_fidelities(out).first;
    return rep;
}

}  // namespace entclone::measures
