#pragma once
#include <Eigen/Dense>

#include "fockspin/fock_state.hpp"

namespace fockspin {

// Block data (A, B, beta) of a generator of the orthogonal Lie algebra on
// W + W*. B and beta are antisymmetric (checked at construction).
struct SpinGenerator {
    int d = 0;
    Eigen::MatrixXcd A;
    Eigen::MatrixXcd B;
    Eigen::MatrixXcd beta;

    explicit SpinGenerator(int d_)
        : d(d_),
          A(Eigen::MatrixXcd::Zero(d_, d_)),
          B(Eigen::MatrixXcd::Zero(d_, d_)),
          beta(Eigen::MatrixXcd::Zero(d_, d_)) {}

    static SpinGenerator from_blocks(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                     const Eigen::MatrixXcd& bet, double antisym_tol = 1e-12);

    SpinGenerator operator-() const;
    SpinGenerator scaled(cplx t) const;
};

// T|s> with T = A^i_j (f^j)+ f_i - 1/2 B_ij (f^i)+(f^j)+ - 1/2 beta^ij f_i f_j
// - 1/2 TrA. Parity-preserving.
FockState apply_generator(const SpinGenerator& gen, const FockState& s);

// Dense 2^d x 2^d matrix of apply_generator; d <= 8.
Eigen::MatrixXcd spinor_operator(const SpinGenerator& gen);

// 2d x 2d block matrix [A, beta; B, -A^T] in the basis
// ((f^1)+, ..., (f^d)+, f_1, ..., f_d). Satisfies M^T g + g M = 0 for the
// off-diagonal block metric g.
Eigen::MatrixXcd vector_matrix(const SpinGenerator& gen);

// Generator of [T1, T2]. In the row convention of vector_matrix the bracket
// reverses: vector_matrix(lie_bracket(g1, g2)) = M2 M1 - M1 M2.
SpinGenerator lie_bracket(const SpinGenerator& g1, const SpinGenerator& g2);

// exp of the spinor lift (2^d x 2^d); d <= 8.
Eigen::MatrixXcd exp_spinor(const SpinGenerator& gen);

// Matrix of x -> O x O^{-1} on coordinate vectors (u; v); column i is the
// image of basis operator i, so exp_vector(gen) = exp(vector_matrix(gen)^T).
// Lands in SO(2d, C) for the off-diagonal block metric.
Eigen::MatrixXcd exp_vector(const SpinGenerator& gen);

// exp(T)|s> without forming the 2^d matrix; dense route for d <= 8, scaled
// Taylor iteration beyond.
FockState exp_apply(const SpinGenerator& gen, const FockState& s);

// O|0> = e^{-TrA/2} sum_k (-w_B)^k / k! wedged onto the vacuum, where
// w_B = sum_{i<j} B_ij |{i,j}>. Requires beta = 0; equals exp(T)|0> whenever
// the A and B parts commute (in particular for single-block generators).
FockState vacuum_orbit_state(const SpinGenerator& gen);

// True iff A is antihermitian and beta equals the entrywise conjugate of B,
// i.e. the spinor exponential is unitary.
bool is_unitary_generator(const SpinGenerator& gen, double tol = 1e-12);

// S = N^dag O N with N = (1/sqrt2) [I, iI; I, -iI]. For O unitary with
// O g O^T = g (both checked at 1e-9) the result is real orthogonal.
Eigen::MatrixXcd compact_form_image(const Eigen::MatrixXcd& o_vec);

// Closed-form update of the even d=6 amplitudes (eta, y, x, xi) under exp(T)
// for a generator with exactly one nonzero block; independent oracle for
// exp_spinor.
FockState closed_form_even_d6(const SpinGenerator& gen, const FockState& s);

// Deterministic random generators for property tests and orbit sampling.
// Entries ~ scale * standard complex normal; the unitary variant draws A
// antihermitian and sets beta = conj(B).
SpinGenerator random_generator(int d, std::uint64_t seed, double scale = 0.3);
SpinGenerator random_unitary_generator(int d, std::uint64_t seed, double scale = 0.3);

}  // namespace fockspin
