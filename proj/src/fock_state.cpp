#include "fockspin/fock_state.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fockspin/signs.hpp"

namespace fockspin {

namespace detail {

bool car_sign_fault = false;

cplx standard_complex_normal(std::mt19937_64& rng) {
    const double u1 =
        (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;  // (0, 1]
    const double u2 = static_cast<double>(rng() >> 11) * 0x1p-53;  // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1)) / std::sqrt(2.0);
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace detail

namespace {

int g_max_modes = 12;

void check_d(int d) {
    if (d < 1 || d > g_max_modes)
        throw std::invalid_argument("mode count d must be in [1, " +
                                    std::to_string(g_max_modes) + "], got " +
                                    std::to_string(d));
}

void check_same_d(const FockState& a, const FockState& b) {
    if (a.d != b.d) throw std::invalid_argument("mode count mismatch");
}

void check_mode(int i, int d) {
    if (i < 1 || i > d) throw std::invalid_argument("mode index out of range");
}

}  // namespace

int max_mode_count() { return g_max_modes; }

void set_max_mode_count(int d) {
    if (d < 1 || d > 16)
        throw std::invalid_argument("mode cap must be in [1, 16]");
    g_max_modes = d;
}

std::string to_string(ParitySector s) {
    switch (s) {
        case ParitySector::even: return "even";
        case ParitySector::odd: return "odd";
        default: return "mixed";
    }
}

FockState::FockState(int d_) : d(d_) {
    check_d(d_);
    amp.assign(std::size_t{1} << d_, cplx{0.0, 0.0});
}

FockState FockState::vacuum(int d) {
    FockState s(d);
    s.amp[0] = 1.0;
    return s;
}

FockState FockState::basis(int d, std::uint32_t mask) {
    FockState s(d);
    if (mask >= s.dim()) throw std::invalid_argument("basis mask out of range");
    s.amp[mask] = 1.0;
    return s;
}

FockState& FockState::operator+=(const FockState& o) {
    check_same_d(*this, o);
    for (std::size_t m = 0; m < amp.size(); ++m) amp[m] += o.amp[m];
    return *this;
}

FockState& FockState::operator-=(const FockState& o) {
    check_same_d(*this, o);
    for (std::size_t m = 0; m < amp.size(); ++m) amp[m] -= o.amp[m];
    return *this;
}

FockState& FockState::operator*=(cplx s) {
    for (auto& a : amp) a *= s;
    return *this;
}

FockState operator+(FockState a, const FockState& b) { return a += b; }
FockState operator-(FockState a, const FockState& b) { return a -= b; }
FockState operator*(cplx s, FockState a) { return a *= s; }
FockState operator-(FockState a) { return a *= -1.0; }

ParitySector parity_sector(const FockState& s) {
    bool has_even = false, has_odd = false;
    for (std::size_t m = 0; m < s.amp.size(); ++m) {
        if (s.amp[m] == cplx{0.0, 0.0}) continue;
        (std::popcount(static_cast<std::uint32_t>(m)) & 1 ? has_odd : has_even) =
            true;
    }
    if (has_odd && has_even) return ParitySector::mixed;
    return has_odd ? ParitySector::odd : ParitySector::even;
}

FockState create(int i, const FockState& s) {
    check_mode(i, s.d);
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    FockState out(s.d);
    const int fault = detail::car_sign_fault ? -1 : 1;
    for (std::uint32_t m = 0; m < s.dim(); ++m) {
        if (m & bit) continue;
        if (s.amp[m] == cplx{0.0, 0.0}) continue;
        out.amp[m | bit] +=
            static_cast<double>(fault * insertion_sign(m, bit)) * s.amp[m];
    }
    return out;
}

FockState annihilate(int i, const FockState& s) {
    check_mode(i, s.d);
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    FockState out(s.d);
    for (std::uint32_t m = 0; m < s.dim(); ++m) {
        if (!(m & bit)) continue;
        if (s.amp[m] == cplx{0.0, 0.0}) continue;
        out.amp[m & ~bit] +=
            static_cast<double>(insertion_sign(m, bit)) * s.amp[m];
    }
    return out;
}

FockState wedge(const FockState& a, const FockState& b) {
    check_same_d(a, b);
    FockState out(a.d);
    for (std::uint32_t u = 0; u < out.dim(); ++u) {
        cplx acc{0.0, 0.0};
        // Enumerates submasks s of u; the complement t = u \ s indexes b.
        std::uint32_t s = u;
        while (true) {
            const std::uint32_t t = u & ~s;
            const cplx as = a.amp[s];
            if (as != cplx{0.0, 0.0}) {
                const cplx bt = b.amp[t];
                if (bt != cplx{0.0, 0.0})
                    acc += static_cast<double>(merge_sign(s, t)) * as * bt;
            }
            if (s == 0) break;
            s = (s - 1) & u;
        }
        out.amp[u] = acc;
    }
    return out;
}

FockState transpose(const FockState& s) {
    FockState out = s;
    for (std::uint32_t m = 0; m < s.dim(); ++m) {
        const int k = std::popcount(m);
        if ((k * (k - 1) / 2) & 1) out.amp[m] = -out.amp[m];
    }
    return out;
}

cplx top_coefficient(const FockState& s) { return s.amp[s.dim() - 1]; }

cplx hermitian_inner(const FockState& a, const FockState& b) {
    check_same_d(a, b);
    cplx acc{0.0, 0.0};
    for (std::size_t m = 0; m < a.amp.size(); ++m)
        acc += std::conj(a.amp[m]) * b.amp[m];
    return acc;
}

double norm(const FockState& s) {
    double acc = 0.0;
    for (const auto& a : s.amp) acc += std::norm(a);
    return std::sqrt(acc);
}

FockState random_state(int d, ParitySector sector, std::uint64_t seed) {
    FockState out(d);
    std::seed_seq seq{seed, static_cast<std::uint64_t>(d),
                      static_cast<std::uint64_t>(sector)};
    std::mt19937_64 rng(seq);
    for (std::uint32_t m = 0; m < out.dim(); ++m) {
        const bool odd = std::popcount(m) & 1;
        if (sector == ParitySector::even && odd) continue;
        if (sector == ParitySector::odd && !odd) continue;
        out.amp[m] = detail::standard_complex_normal(rng);
    }
    return out;
}

}  // namespace fockspin
