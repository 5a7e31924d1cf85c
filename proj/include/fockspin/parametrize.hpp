#pragma once
#include <Eigen/Dense>

#include "fockspin/fock_state.hpp"

namespace fockspin {

// Dense totally antisymmetric rank-3 tensor with d-valued indices (0-based).
struct AntisymRank3 {
    int d = 0;
    std::vector<cplx> t;  // size d^3, all permutations stored

    AntisymRank3() = default;
    explicit AntisymRank3(int d_) : d(d_), t(static_cast<std::size_t>(d_) * d_ * d_) {}

    cplx operator()(int a, int b, int c) const {
        return t[(static_cast<std::size_t>(a) * d + b) * d + c];
    }
    // Writes all six permutations of (a, b, c) with alternating signs.
    // Repeated indices throw: those entries are forced to zero by antisymmetry.
    void set(int a, int b, int c, cplx v);
    double max_abs() const;
};

// Block amplitudes of sector states. Conventions, with all tensors totally
// antisymmetric and modes 1-based in the monomials:
//
// d=6 even:  |phi> = eta |0> + (1/2!) y_ab f^a+ f^b+ |0>
//                  + (1/2!4!) x^{ab} eps_abcdef f^c+ f^d+ f^e+ f^f+ |0>
//                  + (1/6!) xi eps_abcdef f^a+ ... f^f+ |0>
// d=6 odd:   |psi> = u_a f^a+ |0> + (1/3!) P_abc f^a+ f^b+ f^c+ |0>
//                  + (1/5!) w^l eps_labcde f^a+ ... f^e+ |0>
// d=5 even:  |phi> = eta |0> + (1/2!) xi_ij f^i+ f^j+ |0>
//                  + (1/4!) chi^n eps_nijkl f^i+ f^j+ f^k+ f^l+ |0>
// d=4 even:  |phi> = eta |0> + (1/2!) xi_ij f^i+ f^j+ |0>
//                  + (1/4!) rho eps_ijkl f^i+ f^j+ f^k+ f^l+ |0>
// d=4 odd:   |psi> = v_i f^i+ |0> + (1/3!) P_ijk f^i+ f^j+ f^k+ |0>

struct EvenD6 {
    cplx eta{0.0};
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(6, 6);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(6, 6);
    cplx xi{0.0};
};

struct OddD6 {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(6);
    AntisymRank3 P{6};
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(6);
};

struct EvenD5 {
    cplx eta{0.0};
    Eigen::MatrixXcd xi = Eigen::MatrixXcd::Zero(5, 5);
    Eigen::VectorXcd chi = Eigen::VectorXcd::Zero(5);
};

struct EvenD4 {
    cplx eta{0.0};
    Eigen::MatrixXcd xi = Eigen::MatrixXcd::Zero(4, 4);
    cplx rho{0.0};
};

struct OddD4 {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    AntisymRank3 P{4};
};

EvenD6 unpack_even_d6(const FockState& s);
FockState pack_even_d6(const EvenD6& a);
OddD6 unpack_odd_d6(const FockState& s);
FockState pack_odd_d6(const OddD6& a);
EvenD5 unpack_even_d5(const FockState& s);
FockState pack_even_d5(const EvenD5& a);
EvenD4 unpack_even_d4(const FockState& s);
FockState pack_even_d4(const EvenD4& a);
OddD4 unpack_odd_d4(const FockState& s);
FockState pack_odd_d4(const OddD4& a);

}  // namespace fockspin
