#pragma once
#include <functional>
#include <vector>

#include "entclone/cloner.hpp"
#include "entclone/linalg.hpp"

// entanglement and correlation diagnostics: concurrence, von Neumann entropy
// (natural log), index of correlation, negativity, the closed-form
// concurrence curves of the optimal output, and threshold location

namespace entclone::measures {

// two-qubit concurrence via the Hermitian route: descending eigenvalues of
// sqrt(rho) rho~ sqrt(rho) with rho~ the spin-flipped conjugate
double concurrence(const ComplexMatrix& rho);

// -sum lambda ln lambda in nats; 0 ln 0 = 0, eigenvalue dust clamped
double entropy(const ComplexMatrix& rho);

// S(rho_a) + S(rho_b) - S(rho) for the bipartition picked out by the
// 1-based qubit labels of subsystem a
double index_of_correlation(const ComplexMatrix& rho, const std::vector<int>& part_a);

// sum of the absolute values of the negative partial-transpose eigenvalues;
// the listed qubits are the transposed ones
double negativity(const ComplexMatrix& rho, const std::vector<int>& transposed);

struct ClosedFormCurves {
    double c_in;          // input concurrence 2 alpha beta
    double i_in;          // input correlation index
    double c12_formula;   // copy-pair concurrence from the parameters
    double c13_formula;   // cross-pair concurrence from the parameters
};

ClosedFormCurves closed_form_curves(const cloner::EntanglementClass& cls,
                                    const cloner::ClonerParams& params);

enum class ThresholdKind { ZeroCrossing, Minimum, Maximum };

// locate a feature of a continuous curve on [lo, hi] to 1e-6 in alpha:
// bisection on sign for zero crossings, golden section for extrema; throws
// when a zero crossing is not bracketed
double find_threshold(const std::function<double(double)>& curve, ThresholdKind kind,
                      double lo, double hi);

// everything the sweep prints for one class, computed on the optimal output
struct MeasureReport {
    double alpha;
    double c_in, c12, c13;
    double i_in, i12, i13, i_pair;
    double negativity;
    double f_max, f1_prime;
};

MeasureReport measure_report(const cloner::EntanglementClass& cls);

}  // namespace entclone::measures
