#pragma once
#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "fockspin/classify.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/spin_action.hpp"

namespace fockspin {

// Two-qubit amplitudes x(i, j) on computational basis |ij>.
struct TwoQubitState {
    Eigen::Matrix2cd x = Eigen::Matrix2cd::Zero();
};

// Three-qubit amplitudes Phi_ijk, stored at index (i << 2) | (j << 1) | k.
struct ThreeQubitState {
    std::array<cplx, 8> amp{};

    cplx& at(int i, int j, int k) { return amp[static_cast<std::size_t>((i << 2) | (j << 1) | k)]; }
    cplx at(int i, int j, int k) const {
        return amp[static_cast<std::size_t>((i << 2) | (j << 1) | k)];
    }
    double norm() const;

    static ThreeQubitState basis(int i, int j, int k);
    static ThreeQubitState ghz();      // |000> + |111>, unnormalized
    static ThreeQubitState w_state();  // |001> + |010> + |100>, unnormalized
};

ThreeQubitState random_three_qubit(std::uint64_t seed);

// |x> = sum_ij x_ij f^{i+1}+ f^{j+3}+ |0>: qubit values select modes {1,2} x {3,4}.
FockState embed_two_qubit_d4(const TwoQubitState& x);

// 2|Pf(xi)| of a d=4 even state; on embedded two-qubit states this equals the
// pure-state concurrence 2|det x|.
double concurrence_d4(const FockState& phi);
double concurrence(const TwoQubitState& x);

// Single occupancy: sum Phi_ijk f^{i+1}+ f^{j+3}+ f^{k+5}+ |0>; qubit l lives
// on the mode pair {2l-1, 2l}.
FockState embed_three_qubit_odd(const ThreeQubitState& psi);

// Double occupancy: eta = Phi_000, xi = -Phi_111, y carries Phi_100, Phi_010,
// Phi_001 and x carries -Phi_011, -Phi_101, -Phi_110 at the pair slots
// (1,4), (2,5), (3,6); qubit l lives on the mode pair {l, l+3}.
FockState embed_three_qubit_even(const ThreeQubitState& psi);

// Phi'_{i'j'k'} = sum_{ijk} g1(i,i') g2(j,j') g3(k,k') Phi_{ijk}: the old index
// contracts the gate row. Both embeddings transport local gates in exactly
// this convention.
ThreeQubitState apply_local(const Eigen::Matrix2cd& g1, const Eigen::Matrix2cd& g2,
                            const Eigen::Matrix2cd& g3, const ThreeQubitState& psi);

enum class SloccKind { b_block, beta_block, a_block };

// d=6 generator whose exponential acts on the even embedding as the local
// gate triple slocc_gate_matrices(kind, a, b, c). a_block needs a, b, c != 0.
SpinGenerator slocc_gate_generator(SloccKind kind, cplx a, cplx b, cplx c);

// Qubit-side gates: b_block -> [[1,p],[0,1]], beta_block -> [[1,0],[p,1]],
// a_block -> diag(p, 1/p), with p = a, b, c on qubits 1, 2, 3.
std::array<Eigen::Matrix2cd, 3> slocc_gate_matrices(SloccKind kind, cplx a, cplx b, cplx c);

// A = blockdiag(log g1, log g2, log g3) on the odd-embedding mode pairs
// {1,2}, {3,4}, {5,6}. exp_apply(gen) on an odd embedding equals
// scalar * embed_three_qubit_odd(apply_local(g1, g2, g3, psi)).
struct BlockGlGenerator {
    SpinGenerator gen{6};
    cplx scalar{1.0, 0.0};  // exp(-Tr A / 2), the global (det g)^{-1/2} factor
};
BlockGlGenerator block_gl_generator(const Eigen::Matrix2cd& g1, const Eigen::Matrix2cd& g2,
                                    const Eigen::Matrix2cd& g3);

// Cayley hyperdeterminant, degree 4, normalized so Det(|000> + |111>) = 1.
cplx cayley_hyperdeterminant(const ThreeQubitState& psi);

// 4|Det|: the three-tangle of a normalized state.
double three_tangle(const ThreeQubitState& psi);

// SLOCC class from Det and the three single-qubit flattening ranks:
// Det != 0 -> ghz_class; ranks {2,2,2} -> w_class; one rank-1 leg -> bisep;
// all legs rank 1 -> sep; zero state -> null_state.
OrbitLabel three_qubit_class(const ThreeQubitState& psi, double tol = default_tolerance());

// Classifies psi three ways and checks the orbit dictionary
// ghz/w/bisep/sep/null <-> rank K_P 6/3/1/0/- <-> even rank4/3/2/1/0.
struct DualityReport {
    OrbitLabel qubit_class = OrbitLabel::null_state;
    OrbitLabel odd_class = OrbitLabel::null_state;   // three-fermion label of the odd embedding
    OrbitLabel even_label = OrbitLabel::rank0;       // decision-chain label of the even embedding
    int k_rank = 0;
    int even_moment_rank = 0;
    cplx det{0.0, 0.0};
    cplx q2_even{0.0, 0.0};
    bool consistent = false;
};
DualityReport duality_check(const ThreeQubitState& psi, double tol = default_tolerance());

}  // namespace fockspin
