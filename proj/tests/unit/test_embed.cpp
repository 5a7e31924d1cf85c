#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fockspin/classify.hpp"
#include "fockspin/embed.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/invariants.hpp"
#include "fockspin/parametrize.hpp"
#include "fockspin/spin_action.hpp"

using namespace fockspin;

namespace {

Eigen::Matrix2cd random_gate(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = detail::standard_complex_normal(rng);
    return g;
}

// exp of a traceless matrix: unit determinant, safe matrix logarithm.
Eigen::Matrix2cd random_sl2(std::uint64_t seed) {
    Eigen::Matrix2cd t = 0.4 * random_gate(seed);
    t(1, 1) = -t(0, 0);
    return t.exp();
}

std::uint32_t odd_mask(int i, int j, int k) {
    return (1u << i) | (1u << (j + 2)) | (1u << (k + 4));
}

double dist(const ThreeQubitState& a, const ThreeQubitState& b) {
    double m = 0.0;
    for (int t = 0; t < 8; ++t) m = std::max(m, std::abs(a.amp[t] - b.amp[t]));
    return m;
}

}  // namespace

TEST_CASE("basis correspondence of both embeddings") {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const ThreeQubitState b = ThreeQubitState::basis(i, j, k);

                // Single occupancy: one fermion per qubit pair, |0> on pair l
                // means the odd mode 2l-1.
                const FockState odd = embed_three_qubit_odd(b);
                CHECK(parity_sector(odd) == ParitySector::odd);
                CHECK(odd.amp[odd_mask(i, j, k)] == cplx(1.0, 0.0));
                CHECK(norm(odd) == 1.0);
            }

    // Double occupancy basis images, qubit l on the pair {l, l+3}.
    CHECK(embed_three_qubit_even(ThreeQubitState::basis(0, 0, 0)).amp[0] == cplx(1.0, 0.0));
    CHECK(embed_three_qubit_even(ThreeQubitState::basis(1, 1, 1)).amp[63] == cplx(-1.0, 0.0));
    CHECK(embed_three_qubit_even(ThreeQubitState::basis(1, 0, 0)).amp[0b001001] ==
          cplx(1.0, 0.0));
    CHECK(embed_three_qubit_even(ThreeQubitState::basis(0, 1, 0)).amp[0b010010] ==
          cplx(1.0, 0.0));
    CHECK(embed_three_qubit_even(ThreeQubitState::basis(0, 0, 1)).amp[0b100100] ==
          cplx(1.0, 0.0));

    // GHZ goes to vacuum + top monomial (with the xi sign) resp. the
    // two complementary Slater states.
    const FockState ghz_even = embed_three_qubit_even(ThreeQubitState::ghz());
    CHECK(ghz_even.amp[0] == cplx(1.0, 0.0));
    CHECK(ghz_even.amp[63] == cplx(-1.0, 0.0));
    const FockState ghz_odd = embed_three_qubit_odd(ThreeQubitState::ghz());
    CHECK(ghz_odd.amp[0b010101] == cplx(1.0, 0.0));
    CHECK(ghz_odd.amp[0b101010] == cplx(1.0, 0.0));
}

TEST_CASE("two-qubit embedding and concurrence") {
    TwoQubitState bell;
    bell.x(0, 0) = 1.0 / std::sqrt(2.0);
    bell.x(1, 1) = 1.0 / std::sqrt(2.0);
    const FockState fb = embed_two_qubit_d4(bell);
    CHECK(fb.amp[0b0101] == bell.x(0, 0));  // |00> -> modes {1,3}
    CHECK(fb.amp[0b1010] == bell.x(1, 1));  // |11> -> modes {2,4}
    CHECK(concurrence(bell) == doctest::Approx(1.0));
    CHECK(concurrence_d4(fb) == doctest::Approx(1.0));

    // Entanglement tracks purity of the embedded state.
    CHECK_FALSE(is_pure_spinor(fb));
    TwoQubitState prod;
    prod.x(0, 0) = 0.6;
    prod.x(0, 1) = 0.8;
    CHECK(concurrence(prod) == doctest::Approx(0.0));
    CHECK(is_pure_spinor(embed_two_qubit_d4(prod)));

    // Concurrence is 2|Pf(xi)| = 2|det x| on the embedding.
    const ThreeQubitState r = random_three_qubit(707);
    TwoQubitState rnd;
    rnd.x << r.amp[0], r.amp[1], r.amp[2], r.amp[3];
    CHECK(concurrence(rnd) == doctest::Approx(2.0 * std::abs(rnd.x.determinant())));
    CHECK(concurrence_d4(embed_two_qubit_d4(rnd)) == doctest::Approx(concurrence(rnd)));

    CHECK_THROWS_AS(concurrence_d4(random_state(6, ParitySector::even, 708)),
                    std::domain_error);
}

TEST_CASE("apply_local contracts the gate row against the old index") {
    // X on the first qubit only: Phi'_{1jk} picks up Phi_{0jk}.
    Eigen::Matrix2cd x_gate;
    x_gate << 0.0, 1.0, 1.0, 0.0;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    const ThreeQubitState w = ThreeQubitState::w_state();
    const ThreeQubitState flipped = apply_local(x_gate, id, id, w);
    CHECK(flipped.at(1, 0, 1) == cplx(1.0, 0.0));
    CHECK(flipped.at(1, 1, 0) == cplx(1.0, 0.0));
    CHECK(flipped.at(0, 0, 0) == cplx(1.0, 0.0));

    // Composition order: transforming by g then h equals the product h*g
    // acting once, because the old index contracts rows.
    const ThreeQubitState psi = random_three_qubit(711);
    const Eigen::Matrix2cd g = random_gate(712), h = random_gate(713);
    const ThreeQubitState two_step = apply_local(h, id, id, apply_local(g, id, id, psi));
    const ThreeQubitState one_step = apply_local((g * h).eval(), id, id, psi);
    CHECK(dist(two_step, one_step) < 1e-12);
}

TEST_CASE("hyperdeterminant values and the tangle") {
    CHECK(cayley_hyperdeterminant(ThreeQubitState::ghz()) == cplx(1.0, 0.0));
    CHECK(std::abs(cayley_hyperdeterminant(ThreeQubitState::w_state())) < 1e-14);
    CHECK(std::abs(cayley_hyperdeterminant(ThreeQubitState::basis(1, 0, 1))) < 1e-14);

    ThreeQubitState bisep;  // |0>(|00> + |11>) on the 1|23 cut
    bisep.at(0, 0, 0) = 1.0;
    bisep.at(0, 1, 1) = 1.0;
    CHECK(std::abs(cayley_hyperdeterminant(bisep)) < 1e-14);

    // Normalized GHZ has tangle 1; Det is degree 4 in the amplitudes.
    ThreeQubitState ghz_n = ThreeQubitState::ghz();
    for (auto& a : ghz_n.amp) a /= std::sqrt(2.0);
    CHECK(three_tangle(ghz_n) == doctest::Approx(1.0));
    ThreeQubitState doubled = ThreeQubitState::ghz();
    for (auto& a : doubled.amp) a *= 2.0;
    CHECK(std::abs(cayley_hyperdeterminant(doubled) - cplx(16.0, 0.0)) < 1e-12);

    // Det is invariant under unit-determinant local gates.
    const ThreeQubitState psi = random_three_qubit(721);
    const ThreeQubitState moved = apply_local(random_sl2(722), random_sl2(723), random_sl2(724), psi);
    CHECK(std::abs(cayley_hyperdeterminant(moved) - cayley_hyperdeterminant(psi)) < 1e-10);
}

TEST_CASE("quartic invariant of the even embedding is the hyperdeterminant") {
    for (std::uint64_t k = 0; k < 20; ++k) {
        const ThreeQubitState psi = random_three_qubit(731 + k);
        const auto q = q_invariants(embed_three_qubit_even(psi), 2);
        CHECK(std::abs(q[1] / 6.0 - cayley_hyperdeterminant(psi)) < 1e-10);
    }
}

TEST_CASE("three-qubit SLOCC classes from Det and flattening ranks") {
    CHECK(three_qubit_class(ThreeQubitState::ghz()) == OrbitLabel::ghz_class);
    CHECK(three_qubit_class(ThreeQubitState::w_state()) == OrbitLabel::w_class);
    CHECK(three_qubit_class(ThreeQubitState::basis(0, 1, 1)) == OrbitLabel::sep);
    CHECK(three_qubit_class(ThreeQubitState{}) == OrbitLabel::null_state);

    // One entangled cut per leg.
    for (int leg = 0; leg < 3; ++leg) {
        ThreeQubitState b;
        b.at(0, 0, 0) = 1.0;
        if (leg == 0) b.at(0, 1, 1) = 1.0;  // qubit 1 factors out
        if (leg == 1) b.at(1, 0, 1) = 1.0;
        if (leg == 2) b.at(1, 1, 0) = 1.0;
        CHECK(three_qubit_class(b) == OrbitLabel::bisep);
    }

    // Local invertible gates never change the class.
    const ThreeQubitState moved_w =
        apply_local(random_gate(741), random_gate(742), random_gate(743), ThreeQubitState::w_state());
    CHECK(three_qubit_class(moved_w) == OrbitLabel::w_class);
    const ThreeQubitState moved_ghz =
        apply_local(random_gate(744), random_gate(745), random_gate(746), ThreeQubitState::ghz());
    CHECK(three_qubit_class(moved_ghz) == OrbitLabel::ghz_class);
}

TEST_CASE("SLOCC gate generators transport the even embedding") {
    const cplx a(0.4, 0.3), b(-0.7, 0.2), c(0.5, -0.6);
    const ThreeQubitState psi = random_three_qubit(751);

    for (SloccKind kind : {SloccKind::b_block, SloccKind::beta_block, SloccKind::a_block}) {
        const SpinGenerator gen = slocc_gate_generator(kind, a, b, c);
        const auto gates = slocc_gate_matrices(kind, a, b, c);
        const FockState lhs = exp_apply(gen, embed_three_qubit_even(psi));
        const FockState rhs =
            embed_three_qubit_even(apply_local(gates[0], gates[1], gates[2], psi));
        CHECK(norm(lhs - rhs) < 1e-9 * norm(rhs));
    }

    // Words of gates compose on both sides.
    const SpinGenerator g1 = slocc_gate_generator(SloccKind::b_block, a, b, c);
    const SpinGenerator g2 = slocc_gate_generator(SloccKind::beta_block, c, a, b);
    const auto m1 = slocc_gate_matrices(SloccKind::b_block, a, b, c);
    const auto m2 = slocc_gate_matrices(SloccKind::beta_block, c, a, b);
    const FockState lhs = exp_apply(g2, exp_apply(g1, embed_three_qubit_even(psi)));
    const ThreeQubitState qs =
        apply_local(m2[0], m2[1], m2[2], apply_local(m1[0], m1[1], m1[2], psi));
    CHECK(norm(lhs - embed_three_qubit_even(qs)) < 1e-9);

    // The diagonal kind is the only one needing nonzero parameters.
    CHECK_THROWS_AS(slocc_gate_generator(SloccKind::a_block, cplx(0.0, 0.0), b, c),
                    std::invalid_argument);
    CHECK_NOTHROW(slocc_gate_generator(SloccKind::b_block, cplx(0.0, 0.0), b, c));
}

TEST_CASE("block GL generators transport the odd embedding") {
    const ThreeQubitState psi = random_three_qubit(761);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    // Identity gates: identity transport, unit scalar.
    const BlockGlGenerator trivial = block_gl_generator(id, id, id);
    CHECK(std::abs(trivial.scalar - cplx(1.0, 0.0)) < 1e-14);
    CHECK(norm(exp_apply(trivial.gen, embed_three_qubit_odd(psi)) -
               embed_three_qubit_odd(psi)) < 1e-12);

    // Unit-determinant gates: exact correspondence, no scalar.
    const Eigen::Matrix2cd g1 = random_sl2(762), g2 = random_sl2(763), g3 = random_sl2(764);
    const BlockGlGenerator bg = block_gl_generator(g1, g2, g3);
    CHECK(std::abs(bg.scalar - cplx(1.0, 0.0)) < 1e-12);
    const FockState lhs = exp_apply(bg.gen, embed_three_qubit_odd(psi));
    const FockState rhs = embed_three_qubit_odd(apply_local(g1, g2, g3, psi));
    CHECK(norm(lhs - rhs) < 1e-10 * norm(rhs));

    // General determinants surface as the scalar factor.
    const Eigen::Matrix2cd s1 = cplx(1.3, 0.4) * random_sl2(765);
    const BlockGlGenerator bs = block_gl_generator(s1, g2, g3);
    const FockState lhs2 = exp_apply(bs.gen, embed_three_qubit_odd(psi));
    const FockState rhs2 =
        bs.scalar * embed_three_qubit_odd(apply_local(s1, g2, g3, psi));
    CHECK(norm(lhs2 - rhs2) < 1e-10 * norm(rhs2));

    CHECK_THROWS_AS(block_gl_generator(Eigen::Matrix2cd::Zero(), id, id), std::invalid_argument);
}

TEST_CASE("duality of the two three-qubit realizations") {
    struct Row {
        ThreeQubitState psi;
        OrbitLabel qubit;
        int krank;
        OrbitLabel even;
    };
    ThreeQubitState bisep;
    bisep.at(0, 0, 0) = 1.0;
    bisep.at(1, 1, 0) = 1.0;  // qubit 3 factors out
    const std::vector<Row> rows = {
        {ThreeQubitState::ghz(), OrbitLabel::ghz_class, 6, OrbitLabel::rank4},
        {ThreeQubitState::w_state(), OrbitLabel::w_class, 3, OrbitLabel::rank3},
        {bisep, OrbitLabel::bisep, 1, OrbitLabel::rank2},
        {ThreeQubitState::basis(1, 1, 1), OrbitLabel::sep, 0, OrbitLabel::rank1},
        {ThreeQubitState{}, OrbitLabel::null_state, 0, OrbitLabel::rank0},
    };
    for (const Row& row : rows) {
        const DualityReport r = duality_check(row.psi);
        CHECK(r.consistent);
        CHECK(r.qubit_class == row.qubit);
        CHECK(r.odd_class == row.qubit);
        CHECK(r.k_rank == row.krank);
        CHECK(r.even_label == row.even);
    }

    // A generic random state is GHZ class with probability one.
    const DualityReport rr = duality_check(random_three_qubit(771));
    CHECK(rr.consistent);
    CHECK(rr.qubit_class == OrbitLabel::ghz_class);
    CHECK(rr.even_moment_rank == 12);
    CHECK(std::abs(rr.q2_even / 6.0 - rr.det) < 1e-10);

    // Transported by local gates, the report stays consistent and the class fixed.
    const ThreeQubitState moved =
        apply_local(random_gate(772), random_gate(773), random_gate(774), ThreeQubitState::w_state());
    const DualityReport rm = duality_check(moved);
    CHECK(rm.consistent);
    CHECK(rm.qubit_class == OrbitLabel::w_class);
    CHECK(rm.k_rank == 3);
}
