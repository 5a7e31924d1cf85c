#include "fockspin/embed.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "fockspin/invariants.hpp"
#include "fockspin/parametrize.hpp"

namespace fockspin {

namespace {

cplx det2(const Eigen::Matrix2cd& g) { return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0); }

void check_bit(int v) {
    if (v != 0 && v != 1) throw std::invalid_argument("qubit values must be 0 or 1");
}

}  // namespace

double ThreeQubitState::norm() const {
    double out = 0.0;
    for (const cplx& a : amp) out += std::norm(a);
    return std::sqrt(out);
}

ThreeQubitState ThreeQubitState::basis(int i, int j, int k) {
    check_bit(i);
    check_bit(j);
    check_bit(k);
    ThreeQubitState s;
    s.at(i, j, k) = 1.0;
    return s;
}

ThreeQubitState ThreeQubitState::ghz() {
    ThreeQubitState s;
    s.at(0, 0, 0) = 1.0;
    s.at(1, 1, 1) = 1.0;
    return s;
}

ThreeQubitState ThreeQubitState::w_state() {
    ThreeQubitState s;
    s.at(0, 0, 1) = 1.0;
    s.at(0, 1, 0) = 1.0;
    s.at(1, 0, 0) = 1.0;
    return s;
}

ThreeQubitState random_three_qubit(std::uint64_t seed) {
    std::seed_seq seq{seed, std::uint64_t{0x717562}};
    std::mt19937_64 rng(seq);
    ThreeQubitState s;
    for (cplx& a : s.amp) a = detail::standard_complex_normal(rng);
    return s;
}

FockState embed_two_qubit_d4(const TwoQubitState& x) {
    FockState s(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            // Modes i+1 < j+3 are already ascending, so no reorder sign.
            s.amp[(1u << i) | (1u << (j + 2))] = x.x(i, j);
        }
    return s;
}

double concurrence_d4(const FockState& phi) {
    const EvenD4 p = unpack_even_d4(phi);
    return 2.0 * std::abs(pfaffian(p.xi));
}

double concurrence(const TwoQubitState& x) { return concurrence_d4(embed_two_qubit_d4(x)); }

FockState embed_three_qubit_odd(const ThreeQubitState& psi) {
    FockState s(6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                s.amp[(1u << i) | (1u << (j + 2)) | (1u << (k + 4))] = psi.at(i, j, k);
    return s;
}

FockState embed_three_qubit_even(const ThreeQubitState& psi) {
    EvenD6 p;
    p.eta = psi.at(0, 0, 0);
    p.xi = -psi.at(1, 1, 1);
    const auto set_pair = [](Eigen::MatrixXcd& m, int a, int b, cplx v) {
        m(a, b) = v;
        m(b, a) = -v;
    };
    set_pair(p.y, 0, 3, psi.at(1, 0, 0));
    set_pair(p.y, 1, 4, psi.at(0, 1, 0));
    set_pair(p.y, 2, 5, psi.at(0, 0, 1));
    set_pair(p.x, 0, 3, -psi.at(0, 1, 1));
    set_pair(p.x, 1, 4, -psi.at(1, 0, 1));
    set_pair(p.x, 2, 5, -psi.at(1, 1, 0));
    return pack_even_d6(p);
}

ThreeQubitState apply_local(const Eigen::Matrix2cd& g1, const Eigen::Matrix2cd& g2,
                            const Eigen::Matrix2cd& g3, const ThreeQubitState& psi) {
    ThreeQubitState out;
    for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
                cplx acc{0.0, 0.0};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k)
                            acc += g1(i, i2) * g2(j, j2) * g3(k, k2) * psi.at(i, j, k);
                out.at(i2, j2, k2) = acc;
            }
    return out;
}

SpinGenerator slocc_gate_generator(SloccKind kind, cplx a, cplx b, cplx c) {
    SpinGenerator gen(6);
    const std::array<cplx, 3> p{a, b, c};
    switch (kind) {
        case SloccKind::b_block:
            for (int q = 0; q < 3; ++q) {
                gen.B(q, q + 3) = -p[q];
                gen.B(q + 3, q) = p[q];
            }
            break;
        case SloccKind::beta_block:
            for (int q = 0; q < 3; ++q) {
                gen.beta(q, q + 3) = p[q];
                gen.beta(q + 3, q) = -p[q];
            }
            break;
        case SloccKind::a_block:
            for (int q = 0; q < 3; ++q) {
                if (p[q] == cplx{0.0, 0.0})
                    throw std::invalid_argument("diagonal gate parameters must be nonzero");
                // diag(log 1/p) repeated on both pair slots; with the -Tr A/2
                // factor this exponentiates to diag(p, 1/p) on the qubit.
                gen.A(q, q) = -std::log(p[q]);
                gen.A(q + 3, q + 3) = -std::log(p[q]);
            }
            break;
    }
    return gen;
}

std::array<Eigen::Matrix2cd, 3> slocc_gate_matrices(SloccKind kind, cplx a, cplx b, cplx c) {
    const std::array<cplx, 3> p{a, b, c};
    std::array<Eigen::Matrix2cd, 3> out;
    for (int q = 0; q < 3; ++q) {
        Eigen::Matrix2cd g = Eigen::Matrix2cd::Identity();
        switch (kind) {
            case SloccKind::b_block: g(0, 1) = p[q]; break;
            case SloccKind::beta_block: g(1, 0) = p[q]; break;
            case SloccKind::a_block:
                if (p[q] == cplx{0.0, 0.0})
                    throw std::invalid_argument("diagonal gate parameters must be nonzero");
                g(0, 0) = p[q];
                g(1, 1) = 1.0 / p[q];
                break;
        }
        out[static_cast<std::size_t>(q)] = g;
    }
    return out;
}

BlockGlGenerator block_gl_generator(const Eigen::Matrix2cd& g1, const Eigen::Matrix2cd& g2,
                                    const Eigen::Matrix2cd& g3) {
    const std::array<const Eigen::Matrix2cd*, 3> gs{&g1, &g2, &g3};
    BlockGlGenerator out;
    for (int q = 0; q < 3; ++q) {
        const Eigen::Matrix2cd& g = *gs[static_cast<std::size_t>(q)];
        const double scale = g.cwiseAbs().maxCoeff();
        if (std::abs(det2(g)) <= 1e-12 * std::max(1.0, scale * scale))
            throw std::invalid_argument("local gate must be invertible");
        out.gen.A.block<2, 2>(2 * q, 2 * q) = g.log();
    }
    out.scalar = std::exp(-0.5 * out.gen.A.trace());
    return out;
}

cplx cayley_hyperdeterminant(const ThreeQubitState& s) {
    const cplx a000 = s.at(0, 0, 0), a001 = s.at(0, 0, 1), a010 = s.at(0, 1, 0),
               a011 = s.at(0, 1, 1), a100 = s.at(1, 0, 0), a101 = s.at(1, 0, 1),
               a110 = s.at(1, 1, 0), a111 = s.at(1, 1, 1);
    const cplx d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                    a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    const cplx d2 = a000 * a111 * (a011 * a100 + a101 * a010 + a110 * a001) +
                    a011 * a100 * (a101 * a010 + a110 * a001) + a101 * a010 * a110 * a001;
    const cplx d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return d1 - 2.0 * d2 + 4.0 * d3;
}

double three_tangle(const ThreeQubitState& s) {
    return 4.0 * std::abs(cayley_hyperdeterminant(s));
}

OrbitLabel three_qubit_class(const ThreeQubitState& s, double tol) {
    const double n = s.norm();
    if (n == 0.0) return OrbitLabel::null_state;
    if (std::abs(cayley_hyperdeterminant(s)) > tol * n * n * n * n) return OrbitLabel::ghz_class;
    std::array<int, 3> ranks{};
    for (int leg = 0; leg < 3; ++leg) {
        Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(2, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    const std::array<int, 3> v{i, j, k};
                    std::array<int, 2> rest{};
                    int r = 0;
                    for (int l = 0; l < 3; ++l)
                        if (l != leg) rest[static_cast<std::size_t>(r++)] = v[static_cast<std::size_t>(l)];
                    f(v[static_cast<std::size_t>(leg)], 2 * rest[0] + rest[1]) = s.at(i, j, k);
                }
        ranks[static_cast<std::size_t>(leg)] = matrix_rank(f);
    }
    const auto ones = std::count(ranks.begin(), ranks.end(), 1);
    if (ones == 0) return OrbitLabel::w_class;
    if (ones == 1) return OrbitLabel::bisep;
    return OrbitLabel::sep;
}

DualityReport duality_check(const ThreeQubitState& psi, double tol) {
    DualityReport r;
    r.det = cayley_hyperdeterminant(psi);
    r.qubit_class = three_qubit_class(psi, tol);

    // The odd embedding has u = w = 0 exactly, so the three-fermion
    // classifier applies directly (and handles the zero state).
    const OddD6 podd = unpack_odd_d6(embed_three_qubit_odd(psi));
    r.k_rank = matrix_rank(k_matrix(podd.P));
    r.odd_class = classify_d6_odd_threefermion(podd.P, tol);

    const ClassificationReport er = classify(embed_three_qubit_even(psi), tol);
    r.even_label = er.label;
    r.even_moment_rank = er.moment_rank;
    r.q2_even = er.q2.value_or(cplx{0.0, 0.0});

    OrbitLabel expected_even = OrbitLabel::rank0;
    switch (r.qubit_class) {
        case OrbitLabel::ghz_class: expected_even = OrbitLabel::rank4; break;
        case OrbitLabel::w_class: expected_even = OrbitLabel::rank3; break;
        case OrbitLabel::bisep: expected_even = OrbitLabel::rank2; break;
        case OrbitLabel::sep: expected_even = OrbitLabel::rank1; break;
        default: break;
    }
    r.consistent = r.odd_class == r.qubit_class && r.even_label == expected_even;
    return r;
}

}  // namespace fockspin
