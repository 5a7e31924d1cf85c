#include "fockspin/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace fockspin {

CliffordVector::CliffordVector(Eigen::VectorXcd u_, Eigen::VectorXcd v_)
    : d(static_cast<int>(u_.size())), u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size()) throw std::invalid_argument("CliffordVector: u and v sizes differ");
}

Eigen::VectorXcd CliffordVector::coords() const {
    Eigen::VectorXcd c(2 * d);
    c.head(d) = u;
    c.tail(d) = v;
    return c;
}

CliffordVector CliffordVector::from_coords(int d, const Eigen::VectorXcd& c) {
    if (c.size() != 2 * d) throw std::invalid_argument("from_coords: length must be 2d");
    CliffordVector x(d);
    x.u = c.head(d);
    x.v = c.tail(d);
    return x;
}

cplx form(const CliffordVector& x, const CliffordVector& y) {
    if (x.d != y.d) throw std::invalid_argument("form: dimension mismatch");
    const cplx a = x.u.transpose() * y.v;
    const cplx b = y.u.transpose() * x.v;
    return 0.5 * (a + b);
}

FockState apply_vector(const CliffordVector& x, const FockState& s) {
    if (x.d != s.d) throw std::invalid_argument("apply_vector: dimension mismatch");
    FockState out(s.d);
    for (int i = 1; i <= x.d; ++i) {
        if (x.u(i - 1) != 0.0) out += x.u(i - 1) * create(i, s);
        if (x.v(i - 1) != 0.0) out += x.v(i - 1) * annihilate(i, s);
    }
    return out;
}

CliffordVector reflect(const CliffordVector& y, const CliffordVector& x) {
    const cplx yy = form(y, y);
    if (std::abs(yy) < 1e-14) throw std::invalid_argument("reflect: isotropic vector");
    const cplx scale = 2.0 * form(x, y) / yy;
    CliffordVector out(x.d);
    out.u = scale * y.u - x.u;
    out.v = scale * y.v - x.v;
    return out;
}

FockState apply_chain(const VectorChain& o, const FockState& s) {
    FockState acc = s;
    for (auto it = o.factors.rbegin(); it != o.factors.rend(); ++it) acc = apply_vector(*it, acc);
    return acc;
}

Eigen::MatrixXcd chain_to_vector_matrix(const VectorChain& o) {
    const int d = o.d;
    Eigen::MatrixXcd m(2 * d, 2 * d);
    for (int j = 0; j < 2 * d; ++j) {
        CliffordVector x(d);
        if (j < d) x.u(j) = 1.0; else x.v(j - d) = 1.0;
        // O x O^{-1} = R_{x_1}(R_{x_2}(... R_{x_r}(x))) with R the single
        // reflection-style conjugation; innermost factor acts first.
        for (auto it = o.factors.rbegin(); it != o.factors.rend(); ++it) x = reflect(*it, x);
        m.col(j) = x.coords();
    }
    return m;
}

}  // namespace fockspin
