#pragma once
#include <Eigen/Dense>

#include "fockspin/fock_state.hpp"

namespace fockspin {

// Element x = sum_i u_i f^i+ + sum_i v_i f_i of the 2d-dimensional space of
// mode operators. Coordinates follow the fixed basis order
// (f^1+, ..., f^d+, f_1, ..., f_d) used by every matrix in the repo.
struct CliffordVector {
    int d = 0;
    Eigen::VectorXcd u;
    Eigen::VectorXcd v;

    CliffordVector() = default;
    explicit CliffordVector(int d_)
        : d(d_), u(Eigen::VectorXcd::Zero(d_)), v(Eigen::VectorXcd::Zero(d_)) {}
    CliffordVector(Eigen::VectorXcd u_, Eigen::VectorXcd v_);

    Eigen::VectorXcd coords() const;  // (u; v), length 2d
    static CliffordVector from_coords(int d, const Eigen::VectorXcd& c);
};

// Anticommutator bilinear form: (x, y) = 1/2 (u_x . v_y + u_y . v_x),
// plain bilinear dots. apply(x, apply(x, s)) = form(x, x) * s.
cplx form(const CliffordVector& x, const CliffordVector& y);

FockState apply_vector(const CliffordVector& x, const FockState& s);

// Clifford conjugation y x y^{-1} = (2 form(x,y) / form(y,y)) y - x.
// Rejects isotropic y.
CliffordVector reflect(const CliffordVector& y, const CliffordVector& x);

// Even-length product O = x_1 ... x_r of vectors with form(x_i, x_i) = +-1.
struct VectorChain {
    int d = 0;
    std::vector<CliffordVector> factors;
};

// O|s>: factors act right to left.
FockState apply_chain(const VectorChain& o, const FockState& s);

// Matrix of x -> O x O^{-1} in the fixed basis; column j is the image of
// basis vector j. Lies in SO(2d, C) for the off-diagonal block metric.
Eigen::MatrixXcd chain_to_vector_matrix(const VectorChain& o);

}  // namespace fockspin
