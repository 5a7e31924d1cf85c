#include "fockspin/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "fockspin/signs.hpp"

namespace fockspin {

namespace {

void check_fixed_sector(const FockState& s) {
    if (parity_sector(s) == ParitySector::mixed)
        throw std::domain_error("mixed parity sector not supported here");
}

// Totally antisymmetric amplitude tensor evaluated at a 1-based index list:
// perm sign times the amplitude of the sorted set; 0 on repeated indices.
cplx tensor_eval(const FockState& s, std::span<const int> idx) {
    const int sgn = perm_sign(idx);
    if (sgn == 0) return {0.0, 0.0};
    std::uint32_t m = 0;
    for (int i : idx) m |= std::uint32_t{1} << (i - 1);
    return static_cast<double>(sgn) * s.amp[m];
}

// Dual tensor: dual(K) = amp(full \ K) * merge_sign(K, full \ K), extended
// antisymmetrically to index lists.
cplx dual_eval(const FockState& s, std::span<const int> idx) {
    const int sgn = perm_sign(idx);
    if (sgn == 0) return {0.0, 0.0};
    std::uint32_t m = 0;
    for (int i : idx) m |= std::uint32_t{1} << (i - 1);
    const std::uint32_t full = static_cast<std::uint32_t>(s.dim() - 1);
    return static_cast<double>(sgn * merge_sign(m, full & ~m)) * s.amp[full & ~m];
}

void append_mask_modes(std::uint32_t mask, std::vector<int>& out) {
    while (mask) {
        const int b = std::countr_zero(mask);
        out.push_back(b + 1);
        mask &= mask - 1;
    }
}

}  // namespace

cplx mukai_pairing(const FockState& a, const FockState& b) {
    if (a.d != b.d) throw std::invalid_argument("mukai_pairing: dimension mismatch");
    const std::uint32_t full = static_cast<std::uint32_t>(a.dim() - 1);
    cplx acc{0.0, 0.0};
    for (std::uint32_t m = 0; m <= full; ++m) {
        const cplx av = a.amp[m];
        if (av == cplx{0.0, 0.0}) continue;
        const cplx bv = b.amp[full & ~m];
        if (bv == cplx{0.0, 0.0}) continue;
        const int k = std::popcount(m);
        int sgn = merge_sign(m, full & ~m);
        if ((k * (k - 1) / 2) & 1) sgn = -sgn;
        acc += static_cast<double>(sgn) * av * bv;
    }
    return acc;
}

MomentMapMatrix moment_map(const FockState& phi) {
    if (phi.d % 2 != 0)
        throw std::domain_error("moment map needs even d (the pairing crosses sectors for odd d)");
    check_fixed_sector(phi);
    const int d = phi.d;
    MomentMapMatrix out;
    out.d = d;
    out.scale = norm(phi) * norm(phi);
    out.m = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    std::vector<FockState> ann(d + 1), cre(d + 1);
    for (int i = 1; i <= d; ++i) {
        ann[i] = annihilate(i, phi);
        cre[i] = create(i, phi);
    }
    // The generator dual to the A block carries a -Tr(A)/2 scalar, so the
    // diagonal picks up -(phi,phi)/2; this kills the map for d = 4k where the
    // pairing is symmetric, and is invisible for d = 4k+2 where (phi,phi) = 0.
    const cplx self = mukai_pairing(phi, phi);
    for (int i = 1; i <= d; ++i)
        for (int k = 1; k <= d; ++k) {
            cplx a_ik = mukai_pairing(create(i, ann[k]), phi);
            if (i == k) a_ik -= 0.5 * self;
            out.m(i - 1, k - 1) = a_ik;
            out.m(d + k - 1, d + i - 1) = -a_ik;
            out.m(d + i - 1, k - 1) = mukai_pairing(annihilate(i, ann[k]), phi);
            out.m(i - 1, d + k - 1) = mukai_pairing(create(i, cre[k]), phi);
        }
    return out;
}

MomentMapMatrix moment_map_explicit(const FockState& phi) {
    if (phi.d % 2 != 0) throw std::domain_error("explicit moment map needs even d");
    check_fixed_sector(phi);
    const int d = phi.d;
    const bool odd_sector = parity_sector(phi) == ParitySector::odd;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd beta = Eigen::MatrixXcd::Zero(d, d);

    // Block sums over sorted subsets J: the number of particles removed twice
    // per pairing fixes the (-1)^m weight; in the even sector the subset
    // sizes are 2m-1 (A), 2m (B), 2m-2 (beta), each shifted by one when the
    // state is odd.
    std::vector<int> modes;
    cplx self{0.0, 0.0};
    const std::uint32_t full = static_cast<std::uint32_t>(phi.dim() - 1);
    for (std::uint32_t sub = 0; sub <= full; ++sub) {
        const int n = std::popcount(sub);
        modes.clear();
        append_mask_modes(sub, modes);

        const auto sign_pow = [](int m) { return (m & 1) ? -1.0 : 1.0; };

        // Self pairing in the dual-amplitude language, for the diagonal term.
        self += sign_pow(n * (n - 1) / 2) * tensor_eval(phi, modes) * dual_eval(phi, modes);

        // A block: |J| = 2m-1 (even sector) or 2m (odd sector).
        if ((n % 2 == 1) != odd_sector) {
            const int m_idx = odd_sector ? n / 2 : (n + 1) / 2;
            std::vector<int> ki(modes.size() + 1), ii(modes.size() + 1);
            std::copy(modes.begin(), modes.end(), ki.begin() + 1);
            std::copy(modes.begin(), modes.end(), ii.begin() + 1);
            for (int k = 1; k <= d; ++k) {
                ki[0] = k;
                const cplx tv = tensor_eval(phi, ki);
                if (tv == cplx{0.0, 0.0}) continue;
                for (int i = 1; i <= d; ++i) {
                    ii[0] = i;
                    a(i - 1, k - 1) += sign_pow(m_idx) * tv * dual_eval(phi, ii);
                }
            }
        }

        // B block: |I| = 2m (even sector) or 2m+1 (odd sector).
        if ((n % 2 == 0) != odd_sector) {
            const int m_idx = odd_sector ? (n - 1) / 2 : n / 2;
            const cplx dv = dual_eval(phi, modes);
            if (dv != cplx{0.0, 0.0}) {
                std::vector<int> kji(modes.size() + 2);
                std::copy(modes.begin(), modes.end(), kji.begin() + 2);
                for (int k = 1; k <= d; ++k)
                    for (int j = 1; j <= d; ++j) {
                        kji[0] = k;
                        kji[1] = j;
                        b(j - 1, k - 1) += sign_pow(m_idx) * tensor_eval(phi, kji) * dv;
                    }
            }
        }

        // beta block: |J| = 2m-2 (even sector) or 2m-1 (odd sector).
        if ((n % 2 == 0) != odd_sector) {
            const int m_idx = odd_sector ? (n + 1) / 2 : n / 2 + 1;
            const cplx tv = tensor_eval(phi, modes);
            if (tv != cplx{0.0, 0.0}) {
                std::vector<int> ilj(modes.size() + 2);
                std::copy(modes.begin(), modes.end(), ilj.begin() + 2);
                for (int i = 1; i <= d; ++i)
                    for (int l = 1; l <= d; ++l) {
                        ilj[0] = i;
                        ilj[1] = l;
                        beta(i - 1, l - 1) += sign_pow(m_idx) * tv * dual_eval(phi, ilj);
                    }
            }
        }
    }

    a -= 0.5 * self * Eigen::MatrixXcd::Identity(d, d);

    MomentMapMatrix out;
    out.d = d;
    out.scale = norm(phi) * norm(phi);
    out.m = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    out.m.topLeftCorner(d, d) = a;
    out.m.topRightCorner(d, d) = beta;
    out.m.bottomLeftCorner(d, d) = b;
    out.m.bottomRightCorner(d, d) = -a.transpose();
    return out;
}

std::vector<cplx> q_invariants(const FockState& phi, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    const MomentMapMatrix mm = moment_map(phi);
    const double unit = 8.0 * (phi.d - 1);
    std::vector<cplx> out;
    out.reserve(k_max);
    Eigen::MatrixXcd p = mm.m;
    for (int k = 1; k <= k_max; ++k) {
        out.push_back(0.5 * std::pow(unit, 2 - k) * p.trace());
        if (k < k_max) p = p * mm.m;
    }
    return out;
}

int matrix_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++r;
    return r;
}

int moment_rank(const MomentMapMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cut = 1e-9 * std::max(sv(0), m.scale);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++r;
    return r;
}

cplx pfaffian(const Eigen::MatrixXcd& m, double antisym_tol) {
    const Eigen::Index n = m.rows();
    if (n != m.cols() || n % 2 != 0) throw std::invalid_argument("pfaffian needs an even square matrix");
    if (n > 8) throw std::invalid_argument("pfaffian implemented for n <= 8");
    const double scale = std::max(1.0, n ? m.cwiseAbs().maxCoeff() : 0.0);
    if (n && (m + m.transpose()).cwiseAbs().maxCoeff() > antisym_tol * scale)
        throw std::invalid_argument("pfaffian needs an antisymmetric matrix");

    // Pf over an index list: expand on the first index against each partner.
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = static_cast<int>(i);
    const auto rec = [&m](auto&& self, std::vector<int> rest) -> cplx {
        if (rest.empty()) return {1.0, 0.0};
        cplx acc{0.0, 0.0};
        double s = 1.0;
        for (std::size_t t = 1; t < rest.size(); ++t, s = -s) {
            const cplx mij = m(rest[0], rest[t]);
            if (mij != cplx{0.0, 0.0}) {
                std::vector<int> sub;
                sub.reserve(rest.size() - 2);
                for (std::size_t r = 1; r < rest.size(); ++r)
                    if (r != t) sub.push_back(rest[r]);
                acc += s * mij * self(self, std::move(sub));
            }
        }
        return acc;
    };
    return rec(rec, std::move(idx));
}

Eigen::MatrixXcd cross_d6(const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& e) {
    if (c.rows() != 6 || c.cols() != 6 || e.rows() != 6 || e.cols() != 6)
        throw std::invalid_argument("cross_d6 needs 6x6 matrices");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(6, 6);
    std::array<int, 6> perm{};
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            std::array<int, 4> comp{};
            int n = 0;
            for (int i = 0; i < 6; ++i)
                if (i != a && i != b) comp[n++] = i;
            cplx acc{0.0, 0.0};
            std::sort(comp.begin(), comp.end());
            do {
                perm = {a, b, comp[0], comp[1], comp[2], comp[3]};
                acc += static_cast<double>(perm_sign(perm)) * c(comp[0], comp[1]) *
                       e(comp[2], comp[3]);
            } while (std::next_permutation(comp.begin(), comp.end()));
            out(a, b) = 0.25 * acc;
            out(b, a) = -out(a, b);
        }
    return out;
}

cplx quartic_even_closed(const EvenD6& p) {
    const cplx tr_yx = (p.y * p.x).trace();
    const cplx tr_yxyx = (p.y * p.x * p.y * p.x).trace();
    const cplx base = p.eta * p.xi + 0.5 * tr_yx;
    return base * base + 4.0 * p.eta * pfaffian(p.x) + 4.0 * p.xi * pfaffian(p.y) -
           0.5 * (tr_yx * tr_yx - 2.0 * tr_yxyx);
}

cplx quartic_odd_closed(const OddD6& p) {
    const Eigen::MatrixXcd k = k_matrix(p.P);
    const cplx wu = p.w.transpose() * p.u;
    const cplx cross = p.u.transpose() * k * p.w;  // w^i u_j (K_P)^j_i
    // Cross coefficient from the block display: Tr(A^2) contributes -4,
    // Tr(beta B) contributes -8.
    return 6.0 * wu * wu - 12.0 * cross + (k * k).trace();
}

Eigen::MatrixXcd k_matrix(const AntisymRank3& p) {
    if (p.d != 6) throw std::invalid_argument("k_matrix needs d = 6");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(6, 6);
    for (int i = 0; i < 6; ++i) {
        std::array<int, 5> comp{};
        int n = 0;
        for (int r = 0; r < 6; ++r)
            if (r != i) comp[n++] = r;
        std::sort(comp.begin(), comp.end());
        std::array<int, 6> perm{};
        do {
            perm = {i, comp[0], comp[1], comp[2], comp[3], comp[4]};
            const double sgn = perm_sign(perm);
            const cplx tail = p(comp[2], comp[3], comp[4]);
            if (tail == cplx{0.0, 0.0}) continue;
            for (int k = 0; k < 6; ++k)
                out(i, k) += sgn / 12.0 * p(k, comp[0], comp[1]) * tail;
        } while (std::next_permutation(comp.begin(), comp.end()));
    }
    return out;
}

CliffordVector vector_covariant(const FockState& phi) {
    if (phi.d % 2 != 1)
        throw std::domain_error("vector covariant exists for odd d only");
    check_fixed_sector(phi);
    CliffordVector v(phi.d);
    for (int i = 1; i <= phi.d; ++i) {
        v.u(i - 1) = 2.0 * mukai_pairing(annihilate(i, phi), phi);
        v.v(i - 1) = 2.0 * mukai_pairing(create(i, phi), phi);
    }
    return v;
}

}  // namespace fockspin
