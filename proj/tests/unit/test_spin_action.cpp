#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fockspin/clifford.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/spin_action.hpp"

using namespace fockspin;

namespace {

FockState mixed_random(int d, std::uint64_t seed) {
    return random_state(d, ParitySector::even, seed) + random_state(d, ParitySector::odd, seed + 1);
}

CliffordVector random_vector(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CliffordVector x(d);
    for (int i = 0; i < d; ++i) {
        x.u(i) = detail::standard_complex_normal(rng);
        x.v(i) = detail::standard_complex_normal(rng);
    }
    return x;
}

// Direct reading of the quadratic lift, term by term.
FockState apply_by_contract(const SpinGenerator& gen, const FockState& s) {
    FockState out = (-0.5 * gen.A.trace()) * s;
    for (int i = 1; i <= gen.d; ++i)
        for (int j = 1; j <= gen.d; ++j) {
            if (gen.A(i - 1, j - 1) != cplx(0.0, 0.0))
                out += gen.A(i - 1, j - 1) * create(j, annihilate(i, s));
            if (gen.B(i - 1, j - 1) != cplx(0.0, 0.0))
                out += -0.5 * gen.B(i - 1, j - 1) * create(i, create(j, s));
            if (gen.beta(i - 1, j - 1) != cplx(0.0, 0.0))
                out += -0.5 * gen.beta(i - 1, j - 1) * annihilate(i, annihilate(j, s));
        }
    return out;
}

Eigen::MatrixXcd pairing_metric(int d) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    g.topRightCorner(d, d) = Eigen::MatrixXcd::Identity(d, d);
    g.bottomLeftCorner(d, d) = Eigen::MatrixXcd::Identity(d, d);
    return g;
}

}  // namespace

TEST_CASE("generator construction checks blocks") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(3, 3);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(3, 3);
    b(0, 1) = 1.0;
    b(1, 0) = -1.0;
    CHECK_NOTHROW(SpinGenerator::from_blocks(a, b, Eigen::MatrixXcd::Zero(3, 3)));

    Eigen::MatrixXcd bad = b;
    bad(1, 0) = 1.0;
    CHECK_THROWS_AS(SpinGenerator::from_blocks(a, bad, Eigen::MatrixXcd::Zero(3, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpinGenerator::from_blocks(a, b, Eigen::MatrixXcd::Zero(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("apply_generator realizes the quadratic lift") {
    const int d = 4;
    const SpinGenerator gen = random_generator(d, 201);
    const FockState s = mixed_random(d, 202);

    CHECK(norm(apply_generator(gen, s) - apply_by_contract(gen, s)) < 1e-13 * norm(s));

    // Dense matrix route agrees entrywise by columns.
    const Eigen::MatrixXcd m = spinor_operator(gen);
    Eigen::VectorXcd c(s.dim());
    for (std::uint32_t k = 0; k < s.dim(); ++k) c(k) = s.amp[k];
    const Eigen::VectorXcd tc = m * c;
    const FockState ts = apply_generator(gen, s);
    for (std::uint32_t k = 0; k < s.dim(); ++k) CHECK(std::abs(ts.amp[k] - tc(k)) < 1e-12);

    // Parity superselection: the lift is quadratic in mode operators.
    CHECK(parity_sector(apply_generator(gen, random_state(d, ParitySector::even, 203))) ==
          ParitySector::even);
    CHECK(parity_sector(apply_generator(gen, random_state(d, ParitySector::odd, 204))) ==
          ParitySector::odd);
}

TEST_CASE("vector_matrix block layout and algebra membership") {
    const int d = 4;
    const SpinGenerator gen = random_generator(d, 211);
    const Eigen::MatrixXcd m = vector_matrix(gen);

    CHECK((m.topLeftCorner(d, d) - gen.A).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.topRightCorner(d, d) - gen.beta).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.bottomLeftCorner(d, d) - gen.B).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.bottomRightCorner(d, d) + gen.A.transpose()).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::MatrixXcd g = pairing_metric(d);
    CHECK((m.transpose() * g + g * m).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("commutator with a vector is the transposed matrix on coordinates") {
    const int d = 4;
    const SpinGenerator gen = random_generator(d, 221);
    const CliffordVector x = random_vector(d, 222);
    const FockState s = mixed_random(d, 223);

    const FockState lhs =
        apply_generator(gen, apply_vector(x, s)) - apply_vector(x, apply_generator(gen, s));
    const CliffordVector tx =
        CliffordVector::from_coords(d, vector_matrix(gen).transpose() * x.coords());
    CHECK(norm(lhs - apply_vector(tx, s)) < 1e-12 * norm(s));
}

TEST_CASE("lie_bracket matches both representations") {
    const int d = 3;
    const SpinGenerator g1 = random_generator(d, 231);
    const SpinGenerator g2 = random_generator(d, 232);
    const SpinGenerator br = lie_bracket(g1, g2);

    const Eigen::MatrixXcd m1 = vector_matrix(g1);
    const Eigen::MatrixXcd m2 = vector_matrix(g2);
    CHECK((vector_matrix(br) - (m2 * m1 - m1 * m2)).cwiseAbs().maxCoeff() < 1e-12);

    const Eigen::MatrixXcd s1 = spinor_operator(g1);
    const Eigen::MatrixXcd s2 = spinor_operator(g2);
    CHECK((spinor_operator(br) - (s1 * s2 - s2 * s1)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exponentials: group inverse, conjugation, double cover") {
    const int d = 3;
    const SpinGenerator gen = random_generator(d, 241);

    const Eigen::MatrixXcd o = exp_spinor(gen);
    const Eigen::MatrixXcd oi = exp_spinor(-gen);
    CHECK((o * oi - Eigen::MatrixXcd::Identity(o.rows(), o.cols())).cwiseAbs().maxCoeff() < 1e-11);

    // exp_vector gives the coordinates of O x O^{-1}.
    const CliffordVector x = random_vector(d, 242);
    const FockState s = mixed_random(d, 243);
    const CliffordVector ox = CliffordVector::from_coords(d, exp_vector(gen) * x.coords());
    const FockState lhs = exp_apply(gen, apply_vector(x, s));
    const FockState rhs = apply_vector(ox, exp_apply(gen, s));
    CHECK(norm(lhs - rhs) < 1e-10 * norm(s));

    // exp_vector lands in SO for the pairing metric.
    const Eigen::MatrixXcd ov = exp_vector(gen);
    const Eigen::MatrixXcd g = pairing_metric(d);
    CHECK((ov * g * ov.transpose() - g).cwiseAbs().maxCoeff() < 1e-11);
    CHECK(std::abs(ov.determinant() - cplx(1.0, 0.0)) < 1e-10);

    // A full phase rotation is trivial on vectors but flips the spinor sign.
    SpinGenerator turn(1);
    turn.A(0, 0) = cplx(0.0, 2.0 * std::numbers::pi);
    CHECK((exp_vector(turn) - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((exp_spinor(turn) + Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("exp_apply Taylor path agrees with exact diagonal action") {
    const int d = 10;  // beyond the dense 2^d matrix route
    SpinGenerator gen(d);
    std::mt19937_64 rng(251);
    for (int i = 0; i < d; ++i) gen.A(i, i) = detail::standard_complex_normal(rng);

    const FockState s = mixed_random(d, 252);
    const FockState got = exp_apply(gen, s);
    const cplx half_trace = 0.5 * gen.A.trace();
    for (std::uint32_t m = 0; m < s.dim(); ++m) {
        cplx phase = -half_trace;
        for (int i = 0; i < d; ++i)
            if (m & (1u << i)) phase += gen.A(i, i);
        CHECK(std::abs(got.amp[m] - std::exp(phase) * s.amp[m]) < 1e-12);
    }
}

TEST_CASE("exp_apply Taylor path: unitary norm preservation and halving") {
    const int d = 9;
    const SpinGenerator ugen = random_unitary_generator(d, 261, 0.2);
    const FockState s = mixed_random(d, 262);
    CHECK(norm(exp_apply(ugen, s)) == doctest::Approx(norm(s)).epsilon(1e-10));

    const SpinGenerator gen = random_generator(d, 263, 0.2);
    const FockState whole = exp_apply(gen, s);
    const FockState halves = exp_apply(gen.scaled(0.5), exp_apply(gen.scaled(0.5), s));
    CHECK(norm(whole - halves) < 1e-9 * norm(whole));
}

TEST_CASE("vacuum orbit closed form") {
    const int d = 5;
    SpinGenerator gen = random_generator(d, 271);
    gen.beta.setZero();
    gen.A.setZero();

    const FockState vac = FockState::vacuum(d);
    CHECK(norm(vacuum_orbit_state(gen) - exp_apply(gen, vac)) < 1e-12);

    // A-only generator: the vacuum only picks up the determinant scalar.
    SpinGenerator lin = random_generator(d, 277, 0.4);
    lin.B.setZero();
    lin.beta.setZero();
    CHECK(norm(vacuum_orbit_state(lin) - exp_apply(lin, vac)) < 1e-11);

    // Mixed generator with commuting parts: A^T B + B A = 0 holds for
    // A = diag(c, -c, 0, ...) against a pair block on modes (1, 2).
    SpinGenerator mixed = lin;
    mixed.A.setZero();
    mixed.A(0, 0) = cplx(0.3, -0.1);
    mixed.A(1, 1) = -mixed.A(0, 0);
    mixed.B(0, 1) = cplx(0.7, 0.2);
    mixed.B(1, 0) = -mixed.B(0, 1);
    CHECK(norm(vacuum_orbit_state(mixed) - exp_apply(mixed, vac)) < 1e-11);

    // A scaling block does not commute with the pair quadratic: the closed
    // form is stated only for commuting parts, so no equality is claimed.
    SpinGenerator scaled = gen;
    scaled.A = cplx(0.3, -0.1) * Eigen::MatrixXcd::Identity(d, d);
    CHECK(norm(vacuum_orbit_state(scaled) - exp_apply(scaled, vac)) > 1e-3);

    SpinGenerator bad = gen;
    bad.beta(0, 1) = 1.0;
    bad.beta(1, 0) = -1.0;
    CHECK_THROWS_AS(vacuum_orbit_state(bad), std::invalid_argument);
}

TEST_CASE("unitarity detection and the compact form image") {
    const SpinGenerator ugen = random_unitary_generator(4, 281);
    CHECK(is_unitary_generator(ugen));
    CHECK((ugen.A + ugen.A.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((ugen.beta - ugen.B.conjugate()).cwiseAbs().maxCoeff() == 0.0);

    const SpinGenerator gen = random_generator(4, 282);
    CHECK_FALSE(is_unitary_generator(gen));

    const Eigen::MatrixXcd o = exp_spinor(ugen);
    CHECK((o.adjoint() * o - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-11);

    const Eigen::MatrixXcd s = compact_form_image(exp_vector(ugen));
    CHECK(s.imag().cwiseAbs().maxCoeff() < 1e-9);
    CHECK((s * s.transpose() - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-9);

    CHECK_THROWS_AS(compact_form_image(exp_vector(gen)), std::domain_error);
}

TEST_CASE("closed-form even d=6 update per single-block generator") {
    const FockState phi = random_state(6, ParitySector::even, 291);

    SpinGenerator bgen = random_generator(6, 292);
    bgen.A.setZero();
    bgen.beta.setZero();
    CHECK(norm(closed_form_even_d6(bgen, phi) - exp_apply(bgen, phi)) < 1e-10 * norm(phi));

    SpinGenerator tgen = random_generator(6, 293);
    tgen.A.setZero();
    tgen.B.setZero();
    CHECK(norm(closed_form_even_d6(tgen, phi) - exp_apply(tgen, phi)) < 1e-10 * norm(phi));

    SpinGenerator agen = random_generator(6, 294);
    agen.B.setZero();
    agen.beta.setZero();
    CHECK(norm(closed_form_even_d6(agen, phi) - exp_apply(agen, phi)) < 1e-9 * norm(phi));

    CHECK_THROWS_AS(closed_form_even_d6(random_generator(6, 295), phi), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_even_d6(random_generator(5, 296), random_state(5, ParitySector::even, 297)),
                    std::domain_error);
}

TEST_CASE("random generators are reproducible and well-formed") {
    const SpinGenerator a = random_generator(5, 301);
    const SpinGenerator b = random_generator(5, 301);
    CHECK((a.A - b.A).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.B - b.B).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.beta - b.beta).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.B + a.B.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.beta + a.beta.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(is_unitary_generator(random_unitary_generator(5, 302)));
}
