#pragma once
#include <Eigen/Dense>
#include <vector>

#include "fockspin/clifford.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/parametrize.hpp"

namespace fockspin {

// (a, b) = top coefficient of transpose(a) ^ b. Invariant under the identity
// component of the group; symmetric for d = 4k, antisymmetric for d = 4k+2.
cplx mukai_pairing(const FockState& a, const FockState& b);

// Unscaled moment matrix of a state, block layout [A, beta; B, -A^T] with
//   A^i_k   = ((f^i)+ f_k phi, phi) - (1/2) delta^i_k (phi, phi)
//   B_jk    = (f_j f_k phi, phi)
//   beta^il = ((f^i)+ (f^l)+ phi, phi).
// The diagonal term mirrors the -Tr(A)/2 scalar of the dual generator; it
// vanishes for d = 4k+2 and makes the whole map vanish for d = 4k.
// The associated element of the orthogonal algebra is M / (8(d-1)).
struct MomentMapMatrix {
    int d = 0;
    double scale = 0.0;  // squared norm of the source state, the natural size of m
    Eigen::MatrixXcd m;

    Eigen::MatrixXcd block_a() const { return m.topLeftCorner(d, d); }
    Eigen::MatrixXcd block_b() const { return m.bottomLeftCorner(d, d); }
    Eigen::MatrixXcd block_beta() const { return m.topRightCorner(d, d); }
    double max_abs() const { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
};

// Operator-application route (ground truth). Even d, fixed parity sector.
MomentMapMatrix moment_map(const FockState& phi);

// Amplitude-contraction route through the dual amplitudes
// dual(K) = amp(complement K) * merge_sign(K, complement K); independent
// oracle for moment_map. Even d, fixed sector.
MomentMapMatrix moment_map_explicit(const FockState& phi);

// q_k = (1/2) (8(d-1))^{2-k} Tr(M^k) for k = 1..k_max; odd k vanish.
std::vector<cplx> q_invariants(const FockState& phi, int k_max);

// Singular values below rel_tol * sigma_max count as zero.
int matrix_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-9);
// Rank cut anchored at max(sigma_max, scale) so a map that vanishes up to
// rounding reports rank 0.
int moment_rank(const MomentMapMatrix& m);

// Perfect-matching recursion, n <= 8 even; Pf(m)^2 = det(m).
cplx pfaffian(const Eigen::MatrixXcd& m, double antisym_tol = 1e-12);

// (C x D)^{ab} = 1/4 eps^{abcdef} C_cd D_ef on 6x6 antisymmetric matrices.
Eigen::MatrixXcd cross_d6(const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e);

// Quartic invariant of the even d=6 amplitudes:
// (eta xi + 1/2 Tr(yx))^2 + 4 eta Pf(x) + 4 xi Pf(y)
//   - 1/2 ((Tr(yx))^2 - 2 Tr(yxyx)).
// Equals q_2/6 of the packed state.
cplx quartic_even_closed(const EvenD6& p);

// Quartic invariant of the odd d=6 amplitudes:
// 6 (w.u)^2 - 4 w^i u_j (K_P)^j_i + Tr(K_P^2). Equals q_2 of the packed state.
cplx quartic_odd_closed(const OddD6& p);

// (K_P)^i_k = (1/(3! 2!)) P_kab P_cde eps^{iabcde}; rank 6/3/1/0 labels the
// three-fermion entanglement class.
Eigen::MatrixXcd k_matrix(const AntisymRank3& p);

// v_phi defined by form(u, v_phi) = (u phi, phi) for every vector u; creation
// part 2 (f_i phi, phi), annihilation part 2 ((f^i)+ phi, phi). Odd d only.
CliffordVector vector_covariant(const FockState& phi);

}  // namespace fockspin
