#include "fockspin/spin_action.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "fockspin/invariants.hpp"
#include "fockspin/parametrize.hpp"

namespace fockspin {

namespace {

void check_antisym(const Eigen::MatrixXcd& m, double tol, const char* name) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw std::invalid_argument(std::string(name) + " block must be antisymmetric");
}

void check_square(const Eigen::MatrixXcd& m, int d, const char* name) {
    if (m.rows() != d || m.cols() != d)
        throw std::invalid_argument(std::string(name) + " block has wrong shape");
}

// w_B = sum_{i<j} B_ij |{i,j}>, so that the quadratic creation operator acts
// as the wedge with w_B.
FockState two_form_state(const Eigen::MatrixXcd& b, int d) {
    FockState w(d);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            w.amp[(std::uint32_t{1} << (i - 1)) | (std::uint32_t{1} << (j - 1))] = b(i - 1, j - 1);
    return w;
}

constexpr int kDenseExpMaxModes = 8;

}  // namespace

SpinGenerator SpinGenerator::from_blocks(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                         const Eigen::MatrixXcd& bet, double antisym_tol) {
    const int d = static_cast<int>(a.rows());
    SpinGenerator g(d);
    check_square(a, d, "A");
    check_square(b, d, "B");
    check_square(bet, d, "beta");
    check_antisym(b, antisym_tol, "B");
    check_antisym(bet, antisym_tol, "beta");
    g.A = a;
    g.B = b;
    g.beta = bet;
    return g;
}

SpinGenerator SpinGenerator::operator-() const { return scaled(-1.0); }

SpinGenerator SpinGenerator::scaled(cplx t) const {
    SpinGenerator g(d);
    g.A = t * A;
    g.B = t * B;
    g.beta = t * beta;
    return g;
}

FockState apply_generator(const SpinGenerator& gen, const FockState& s) {
    if (gen.d != s.d) throw std::invalid_argument("apply_generator: dimension mismatch");
    const int d = gen.d;
    // T = A^i_j (f^j)+ f_i - (1/2) B_ij (f^i)+(f^j)+ - (1/2) beta^ij f_i f_j
    //     - (1/2) TrA.
    FockState out = (-0.5 * gen.A.trace()) * s;
    for (int i = 1; i <= d; ++i) {
        const FockState fi = annihilate(i, s);
        for (int j = 1; j <= d; ++j) {
            const cplx a = gen.A(i - 1, j - 1);
            if (a != cplx{0.0, 0.0}) out += a * create(j, fi);
        }
        for (int j = i + 1; j <= d; ++j) {
            const cplx be = gen.beta(i - 1, j - 1);
            if (be != cplx{0.0, 0.0}) out -= be * annihilate(i, annihilate(j, s));
        }
    }
    out -= wedge(two_form_state(gen.B, d), s);
    return out;
}

Eigen::MatrixXcd spinor_operator(const SpinGenerator& gen) {
    if (gen.d > kDenseExpMaxModes)
        throw std::domain_error("dense spinor operator limited to d <= 8");
    const std::uint32_t dim = std::uint32_t{1} << gen.d;
    Eigen::MatrixXcd t(dim, dim);
    for (std::uint32_t m = 0; m < dim; ++m) {
        const FockState col = apply_generator(gen, FockState::basis(gen.d, m));
        for (std::uint32_t r = 0; r < dim; ++r) t(r, m) = col.amp[r];
    }
    return t;
}

Eigen::MatrixXcd vector_matrix(const SpinGenerator& gen) {
    const int d = gen.d;
    Eigen::MatrixXcd m(2 * d, 2 * d);
    m.topLeftCorner(d, d) = gen.A;
    m.topRightCorner(d, d) = gen.beta;
    m.bottomLeftCorner(d, d) = gen.B;
    m.bottomRightCorner(d, d) = -gen.A.transpose();
    return m;
}

SpinGenerator lie_bracket(const SpinGenerator& g1, const SpinGenerator& g2) {
    if (g1.d != g2.d) throw std::invalid_argument("lie_bracket: dimension mismatch");
    const Eigen::MatrixXcd m1 = vector_matrix(g1);
    const Eigen::MatrixXcd m2 = vector_matrix(g2);
    const Eigen::MatrixXcd c = m2 * m1 - m1 * m2;
    const int d = g1.d;
    SpinGenerator g(d);
    g.A = c.topLeftCorner(d, d);
    g.beta = c.topRightCorner(d, d);
    g.B = c.bottomLeftCorner(d, d);
    return g;
}

Eigen::MatrixXcd exp_spinor(const SpinGenerator& gen) { return spinor_operator(gen).exp(); }

Eigen::MatrixXcd exp_vector(const SpinGenerator& gen) {
    return vector_matrix(gen).transpose().exp();
}

FockState exp_apply(const SpinGenerator& gen, const FockState& s) {
    if (gen.d != s.d) throw std::invalid_argument("exp_apply: dimension mismatch");
    if (gen.d <= kDenseExpMaxModes) {
        const Eigen::MatrixXcd o = exp_spinor(gen);
        FockState out(s.d);
        for (std::uint32_t r = 0; r < s.dim(); ++r) {
            cplx acc{0.0, 0.0};
            for (std::uint32_t c = 0; c < s.dim(); ++c) acc += o(r, c) * s.amp[c];
            out.amp[r] = acc;
        }
        return out;
    }
    // Scaled Taylor iteration: an upper bound on the operator norm of T picks
    // the number of halvings, then exp(T/2^n) is applied 2^n times.
    double bound = 0.5 * std::abs(gen.A.trace()) + gen.A.cwiseAbs().sum();
    for (int i = 0; i < gen.d; ++i)
        for (int j = i + 1; j < gen.d; ++j)
            bound += std::abs(gen.B(i, j)) + std::abs(gen.beta(i, j));
    int halvings = 0;
    while (bound > 0.5 && halvings < 64) {
        bound *= 0.5;
        ++halvings;
    }
    const SpinGenerator step = gen.scaled(std::ldexp(1.0, -halvings));
    FockState acc = s;
    for (std::uint64_t rep = 0; rep < (std::uint64_t{1} << halvings); ++rep) {
        FockState term = acc;
        FockState next = acc;
        for (int k = 1; k <= 40; ++k) {
            term = (1.0 / k) * apply_generator(step, term);
            next += term;
            if (norm(term) <= 1e-18 * (norm(next) + 1e-300)) break;
        }
        acc = next;
    }
    return acc;
}

FockState vacuum_orbit_state(const SpinGenerator& gen) {
    if (gen.beta.cwiseAbs().maxCoeff() > 0.0)
        throw std::invalid_argument("vacuum orbit closed form requires beta = 0");
    const int d = gen.d;
    const cplx scalar = std::exp(-0.5 * gen.A.trace());
    const FockState w = two_form_state(gen.B, d);
    FockState acc = FockState::vacuum(d);
    FockState term = acc;
    for (int k = 1; k <= d / 2; ++k) {
        term = (-1.0 / k) * wedge(w, term);
        acc += term;
    }
    return scalar * acc;
}

bool is_unitary_generator(const SpinGenerator& gen, double tol) {
    const double a_res = (gen.A + gen.A.adjoint()).cwiseAbs().maxCoeff();
    const double b_res = (gen.beta - gen.B.conjugate()).cwiseAbs().maxCoeff();
    const double scale = std::max({1.0, gen.A.cwiseAbs().maxCoeff(), gen.B.cwiseAbs().maxCoeff(),
                                   gen.beta.cwiseAbs().maxCoeff()});
    return a_res <= tol * scale && b_res <= tol * scale;
}

Eigen::MatrixXcd compact_form_image(const Eigen::MatrixXcd& o_vec) {
    const Eigen::Index n2 = o_vec.rows();
    if (n2 != o_vec.cols() || n2 % 2 != 0)
        throw std::invalid_argument("compact_form_image needs a 2d x 2d matrix");
    const Eigen::Index d = n2 / 2;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n2, n2);
    g.topRightCorner(d, d) = id;
    g.bottomLeftCorner(d, d) = id;
    constexpr double tol = 1e-9;
    if ((o_vec.adjoint() * o_vec - Eigen::MatrixXcd::Identity(n2, n2)).cwiseAbs().maxCoeff() > tol)
        throw std::domain_error("compact form image requires a unitary input");
    if ((o_vec * g * o_vec.transpose() - g).cwiseAbs().maxCoeff() > tol)
        throw std::domain_error("compact form image requires orthogonality for the pairing metric");

    const cplx i_unit{0.0, 1.0};
    Eigen::MatrixXcd n(n2, n2);
    n.topLeftCorner(d, d) = id;
    n.topRightCorner(d, d) = i_unit * id;
    n.bottomLeftCorner(d, d) = id;
    n.bottomRightCorner(d, d) = -i_unit * id;
    n *= 1.0 / std::sqrt(2.0);

    const Eigen::MatrixXcd s = n.adjoint() * o_vec * n;
    if (s.imag().cwiseAbs().maxCoeff() > tol ||
        (s * s.transpose() - Eigen::MatrixXcd::Identity(n2, n2)).cwiseAbs().maxCoeff() > tol)
        throw std::domain_error("compact form image is not real orthogonal");
    return s;
}

FockState closed_form_even_d6(const SpinGenerator& gen, const FockState& s) {
    if (gen.d != 6 || s.d != 6)
        throw std::domain_error("closed-form transform is for d = 6");
    const bool has_a = gen.A.cwiseAbs().maxCoeff() > 0.0;
    const bool has_b = gen.B.cwiseAbs().maxCoeff() > 0.0;
    const bool has_beta = gen.beta.cwiseAbs().maxCoeff() > 0.0;
    if (static_cast<int>(has_a) + static_cast<int>(has_b) + static_cast<int>(has_beta) > 1)
        throw std::invalid_argument("closed-form transform requires a single nonzero block");
    EvenD6 p = unpack_even_d6(s);

    if (has_b) {
        const Eigen::MatrixXcd& b = gen.B;
        const Eigen::MatrixXcd bb = cross_d6(b, b);
        EvenD6 q;
        q.eta = p.eta;
        q.y = p.y - p.eta * b;
        q.x = p.x + 0.5 * p.eta * bb - cross_d6(b, p.y);
        q.xi = p.xi - p.eta * pfaffian(b) - 0.25 * (bb * p.y).trace() + 0.5 * (b * p.x).trace();
        return pack_even_d6(q);
    }
    if (has_beta) {
        const Eigen::MatrixXcd& be = gen.beta;
        const Eigen::MatrixXcd bb = cross_d6(be, be);
        EvenD6 q;
        q.eta = p.eta + p.xi * pfaffian(be) - 0.25 * (bb * p.x).trace() - 0.5 * (be * p.y).trace();
        q.y = p.y + 0.5 * p.xi * bb + cross_d6(be, p.x);
        q.x = p.x + p.xi * be;
        q.xi = p.xi;
        return pack_even_d6(q);
    }
    if (has_a) {
        const Eigen::MatrixXcd g = gen.A.exp();
        // exp(-TrA/2) rather than (det G)^{-1/2}: same value, no branch cut.
        const cplx shrink = std::exp(-0.5 * gen.A.trace());
        const cplx grow = std::exp(0.5 * gen.A.trace());
        const Eigen::MatrixXcd ginv = g.inverse();
        EvenD6 q;
        q.eta = shrink * p.eta;
        q.y = shrink * g.transpose() * p.y * g;
        q.x = grow * ginv * p.x * ginv.transpose();
        q.xi = grow * p.xi;
        return pack_even_d6(q);
    }
    return s;
}

SpinGenerator random_generator(int d, std::uint64_t seed, double scale) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(d), std::uint64_t{0x67656e}};
    std::mt19937_64 rng(seq);
    SpinGenerator g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.A(i, j) = scale * detail::standard_complex_normal(rng);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            g.B(i, j) = scale * detail::standard_complex_normal(rng);
            g.B(j, i) = -g.B(i, j);
            g.beta(i, j) = scale * detail::standard_complex_normal(rng);
            g.beta(j, i) = -g.beta(i, j);
        }
    return g;
}

SpinGenerator random_unitary_generator(int d, std::uint64_t seed, double scale) {
    SpinGenerator g = random_generator(d, seed, scale);
    g.A = 0.5 * (g.A - g.A.adjoint()).eval();
    g.beta = g.B.conjugate();
    return g;
}

}  // namespace fockspin
