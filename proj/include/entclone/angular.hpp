#pragma once
#include <array>
#include <vector>

#include "entclone/linalg.hpp"

// Wigner 3j symbols (Racah sum, Condon-Shortley phases), the coupled basis of a
// two-qubit pair, and rank-K irreducible tensor operators
//
//   T(Ja,Jb)_KQ = sum_{Ma,Mb} (-1)^(Ja-Ma) sqrt(2K+1) 3j(Ja,Jb,K; Ma,-Mb,-Q) |Ja Ma><Jb Mb|
//
// living on the qubit pairs (1,3) and (2,4) of the four-qubit register. The
// interleaved pairing is the whole point: pair operators are embedded by bit
// bookkeeping, not by a naive kron.

namespace entclone::angular {

// value of the 3j symbol; zero outside the selection rules, throws on malformed
// quantum numbers (negative j, |m| > j, or j/m parity mismatch)
double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3);

enum class Pair { P13, P24 };

struct TensorOpIndex {
    Pair pair;
    int ja, jb;  // each 0 or 1
    int k;       // |ja-jb| <= k <= ja+jb
    int q;       // -k .. k
};

// |J,M> of one pair as a 4-component column over its product basis
// (|1,1>=|uu>, |1,0>=(|ud>+|du>)/sqrt2, |1,-1>=|dd>, |0,0>=(|ud>-|du>)/sqrt2)
ComplexMatrix coupled_state(int j, int m);

// |JM;J'M'> = |JM>_(1,3) x |J'M'>_(2,4) as a 16-component column in qubit
// order (1,2,3,4)
ComplexMatrix coupled_to_product(int j, int m, int jp, int mp);

// 16x16 basis change, column 4*i13 + i24 with (J,M) enumerated as
// (1,1),(1,0),(1,-1),(0,0) on each pair
const ComplexMatrix& coupled_basis_16();

// tensor operator on the pair's 4-dim product space
ComplexMatrix tensor_op_pair(int ja, int jb, int k, int q);

// the same operator embedded in the 16-dim register (identity on the other pair)
ComplexMatrix tensor_op(const TensorOpIndex& idx);

// canonical enumeration of all 16 single-pair operator labels, fixed order
struct OpLabel {
    int ja, jb, k, q;
};
const std::array<OpLabel, 16>& op_labels();
int op_index(int ja, int jb, int k, int q);

// expansion coefficients c[i][j] = Tr{ T13_i^dag T24_j^dag rho } over the
// canonical label order; synthesize() inverts the expansion
using CoeffTable = std::array<std::array<cplx, 16>, 16>;
CoeffTable tensor_coeffs(const ComplexMatrix& rho);
ComplexMatrix synthesize(const CoeffTable& c);

}  // namespace entclone::angular
