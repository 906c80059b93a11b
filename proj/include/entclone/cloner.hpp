#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "entclone/linalg.hpp"

// the covariant two-qubit copying family: a 17-parameter output ansatz on four
// qubits, its positivity constraints, the fidelity functional and its closed
// optimum, plus a brute-force grid oracle that maximizes the fidelity without
// using the closed-form solution.

namespace entclone::cloner {

// one class of locally equivalent pure two-qubit inputs alpha|uu> + beta|dd>,
// with alpha restricted to the canonical range [0, 1/sqrt(2)]
class EntanglementClass {
public:
    explicit EntanglementClass(double alpha);  // throws outside the canonical range

    // map any alpha in [0,1] onto its canonical class representative
    static EntanglementClass folded(double alpha);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double x() const { return alpha_ * alpha_ * beta_ * beta_; }  // alpha^2 (1-alpha^2)

private:
    double alpha_, beta_;
};

// the 17 expansion coefficients of the output ansatz, 1-based like the
// published labels (a[0] unused); a1, a2, a4, a5, a6, a8, a13, a14, a16 are
// constrained real, and (9 a6 + 3 a8 + 3 a14 + a16)/16 = 1 normalizes the trace
struct ClonerParams {
    std::array<cplx, 18> a{};

    double trace_value() const;
    bool reality_ok(double tol = 1e-14) const;
};

struct OutputState {
    ComplexMatrix rho;  // 16x16 in qubit order (1,2,3,4)
    double alpha;
    ClonerParams params;
};

// canonical input vector alpha|uu> + beta|dd> on one qubit pair
ComplexMatrix canonical_state(const EntanglementClass& cls);

// (u1 x u2)(alpha|uu> + beta|dd>); throws when u1 or u2 is not unitary
ComplexMatrix omega_state(const EntanglementClass& cls, const ComplexMatrix& u1,
                          const ComplexMatrix& u2);

// |psi><psi| on qubits (1,2) times the maximally mixed pair (3,4)
ComplexMatrix input_state(const EntanglementClass& cls);

// output density matrix from the explicit block form (five blocks labelled by
// the conserved difference of the two magnetic quantum numbers)
OutputState assemble_blocks(const EntanglementClass& cls, const ClonerParams& p);

// the same state built independently by weighting the input's tensor-operator
// expansion coefficient by coefficient; must agree with assemble_blocks
OutputState assemble_tensor(const EntanglementClass& cls, const ClonerParams& p);

// the block matrix in the coupled product basis, before the 1/16 normalization
// (block eigenvalues are 16 times the output-state eigenvalues)
ComplexMatrix coupled_block_matrix(const EntanglementClass& cls, const ClonerParams& p);

struct InequalityCheck {
    std::string id;
    bool satisfied;
    double margin;  // signed slack, >= 0 when satisfied
};

// necessary positivity conditions on the parameters: sign and modulus bounds
// from the block diagonal (pos1), three witness-state bounds (pos2), and the
// degenerate-case bound pos3 that applies only when a1 = a6 > 0
std::vector<InequalityCheck> check_inequalities(const EntanglementClass& cls,
                                                const ClonerParams& p);

// <psi x psi| rho_out |psi x psi>
double fidelity_direct(const OutputState& out);

// the same fidelity evaluated from the parameters alone
double fidelity_formula(const EntanglementClass& cls, const ClonerParams& p);

// overlap of each output pair with the ideal state: Tr{(P_psi x 1) rho} and
// Tr{(1 x P_psi) rho}
std::pair<double, double> single_pair_fidelities(const OutputState& out);

// auxiliary curve parameter of the optimum, defined for alpha in [0,1]
double v_parameter(double alpha);

// peak fidelity as a function of alpha on [0,1]; depends on alpha only
// through alpha^2 (1 - alpha^2), hence symmetric about 1/sqrt(2)
double f_max_raw(double alpha);
double f_max(const EntanglementClass& cls);

// the parameter set attaining f_max
ClonerParams optimal_params(const EntanglementClass& cls);

// fidelity upper bound as a function of the single parameter a6 in [0, 16/9]
double upper_bound_curve(const EntanglementClass& cls, double a6);

struct OracleResult {
    ClonerParams params;
    double fidelity;
};

// grid maximization of fidelity_formula over the real parameters
// (a1, a2 + a5, a6, a11) with a16 pinned by the trace constraint, feasibility
// decided by block eigenvalues; refines the grid around the best point
OracleResult oracle_optimize(const EntanglementClass& cls, int resolution);

}  // namespace entclone::cloner
