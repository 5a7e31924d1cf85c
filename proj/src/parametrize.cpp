#include "fockspin/parametrize.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "fockspin/signs.hpp"

namespace fockspin {

namespace {

void check_sector(const FockState& s, int d, ParitySector want) {
    if (s.d != d) throw std::domain_error("wrong mode count for this parametrization");
    const ParitySector have = parity_sector(s);
    if (have != want && have != ParitySector::even /* zero state counts even */)
        throw std::domain_error("state not in the required parity sector");
    if (want == ParitySector::odd && have == ParitySector::even) {
        for (const auto& a : s.amp)
            if (a != cplx{0.0, 0.0})
                throw std::domain_error("state not in the required parity sector");
    }
}

std::uint32_t mask_of(std::initializer_list<int> modes /*1-based*/) {
    std::uint32_t m = 0;
    for (int i : modes) m |= std::uint32_t{1} << (i - 1);
    return m;
}

// Sign of the permutation (modes of k_mask ascending, modes of full\k_mask
// ascending) relative to (1..d): used when a tensor slot list is given by the
// complement of an index set.
int complement_sign(std::uint32_t k_mask, std::uint32_t full) {
    return merge_sign(k_mask, full & ~k_mask);
}

}  // namespace

void AntisymRank3::set(int a, int b, int c, cplx v) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("AntisymRank3::set: repeated index (entry is forced to 0)");
    const auto idx = [this](int i, int j, int k) {
        return (static_cast<std::size_t>(i) * d + j) * d + k;
    };
    t[idx(a, b, c)] = v;
    t[idx(b, c, a)] = v;
    t[idx(c, a, b)] = v;
    t[idx(a, c, b)] = -v;
    t[idx(b, a, c)] = -v;
    t[idx(c, b, a)] = -v;
}

double AntisymRank3::max_abs() const {
    double m = 0.0;
    for (const auto& v : t) m = std::max(m, std::abs(v));
    return m;
}

EvenD6 unpack_even_d6(const FockState& s) {
    check_sector(s, 6, ParitySector::even);
    EvenD6 a;
    a.eta = s.amp[0];
    a.xi = s.amp[63];
    const std::uint32_t full = 63;
    for (int p = 1; p <= 6; ++p)
        for (int q = p + 1; q <= 6; ++q) {
            const std::uint32_t pq = mask_of({p, q});
            const cplx ypq = s.amp[pq];
            a.y(p - 1, q - 1) = ypq;
            a.y(q - 1, p - 1) = -ypq;
            // 4-particle amplitude on the complement of {p,q} carries
            // x^{pq} * sign(p,q,complement ascending).
            const cplx xpq =
                s.amp[full & ~pq] * static_cast<double>(complement_sign(pq, full));
            a.x(p - 1, q - 1) = xpq;
            a.x(q - 1, p - 1) = -xpq;
        }
    return a;
}

FockState pack_even_d6(const EvenD6& a) {
    FockState s(6);
    const std::uint32_t full = 63;
    s.amp[0] = a.eta;
    s.amp[63] = a.xi;
    for (int p = 1; p <= 6; ++p)
        for (int q = p + 1; q <= 6; ++q) {
            const std::uint32_t pq = mask_of({p, q});
            s.amp[pq] = a.y(p - 1, q - 1);
            s.amp[full & ~pq] =
                a.x(p - 1, q - 1) * static_cast<double>(complement_sign(pq, full));
        }
    return s;
}

OddD6 unpack_odd_d6(const FockState& s) {
    check_sector(s, 6, ParitySector::odd);
    OddD6 a;
    const std::uint32_t full = 63;
    for (int l = 1; l <= 6; ++l) {
        a.u[l - 1] = s.amp[mask_of({l})];
        // 5-particle amplitude on complement of {l} carries (-1)^{l-1} w^l.
        a.w[l - 1] = s.amp[full & ~mask_of({l})] *
                     static_cast<double>(complement_sign(mask_of({l}), full));
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k)
                a.P.set(i - 1, j - 1, k - 1, s.amp[mask_of({i, j, k})]);
    return a;
}

FockState pack_odd_d6(const OddD6& a) {
    FockState s(6);
    const std::uint32_t full = 63;
    for (int l = 1; l <= 6; ++l) {
        s.amp[mask_of({l})] = a.u[l - 1];
        s.amp[full & ~mask_of({l})] =
            a.w[l - 1] * static_cast<double>(complement_sign(mask_of({l}), full));
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = j + 1; k <= 6; ++k)
                s.amp[mask_of({i, j, k})] = a.P(i - 1, j - 1, k - 1);
    return s;
}

EvenD5 unpack_even_d5(const FockState& s) {
    check_sector(s, 5, ParitySector::even);
    EvenD5 a;
    const std::uint32_t full = 31;
    a.eta = s.amp[0];
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            const cplx v = s.amp[mask_of({i, j})];
            a.xi(i - 1, j - 1) = v;
            a.xi(j - 1, i - 1) = -v;
        }
    for (int n = 1; n <= 5; ++n)
        a.chi[n - 1] = s.amp[full & ~mask_of({n})] *
                       static_cast<double>(complement_sign(mask_of({n}), full));
    return a;
}

FockState pack_even_d5(const EvenD5& a) {
    FockState s(5);
    const std::uint32_t full = 31;
    s.amp[0] = a.eta;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            s.amp[mask_of({i, j})] = a.xi(i - 1, j - 1);
    for (int n = 1; n <= 5; ++n)
        s.amp[full & ~mask_of({n})] =
            a.chi[n - 1] * static_cast<double>(complement_sign(mask_of({n}), full));
    return s;
}

EvenD4 unpack_even_d4(const FockState& s) {
    check_sector(s, 4, ParitySector::even);
    EvenD4 a;
    a.eta = s.amp[0];
    a.rho = s.amp[15];
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            const cplx v = s.amp[mask_of({i, j})];
            a.xi(i - 1, j - 1) = v;
            a.xi(j - 1, i - 1) = -v;
        }
    return a;
}

FockState pack_even_d4(const EvenD4& a) {
    FockState s(4);
    s.amp[0] = a.eta;
    s.amp[15] = a.rho;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) s.amp[mask_of({i, j})] = a.xi(i - 1, j - 1);
    return s;
}

OddD4 unpack_odd_d4(const FockState& s) {
    check_sector(s, 4, ParitySector::odd);
    OddD4 a;
    for (int i = 1; i <= 4; ++i) a.v[i - 1] = s.amp[mask_of({i})];
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k)
                a.P.set(i - 1, j - 1, k - 1, s.amp[mask_of({i, j, k})]);
    return a;
}

FockState pack_odd_d4(const OddD4& a) {
    FockState s(4);
    for (int i = 1; i <= 4; ++i) s.amp[mask_of({i})] = a.v[i - 1];
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k)
                s.amp[mask_of({i, j, k})] = a.P(i - 1, j - 1, k - 1);
    return s;
}

}  // namespace fockspin
