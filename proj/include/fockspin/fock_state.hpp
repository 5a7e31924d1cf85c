#pragma once
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fockspin {

using cplx = std::complex<double>;

enum class ParitySector { even, odd, mixed };

std::string to_string(ParitySector s);

// Mode count cap. Defaults to 12; can be raised up to 16 for big runs.
int max_mode_count();
void set_max_mode_count(int d);

// Dense state of the fermionic Fock space on d modes (dimension 2^d).
// amp[mask] multiplies the ascending-ordered monomial
// (f^{m1})^+ (f^{m2})^+ ... |0>, m1 < m2 < ..., where bit i-1 of mask set
// means mode i occupied.
struct FockState {
    int d = 0;
    std::vector<cplx> amp;

    FockState() = default;
    explicit FockState(int d_);

    static FockState vacuum(int d);
    static FockState basis(int d, std::uint32_t mask);

    std::size_t dim() const { return amp.size(); }

    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState& operator*=(cplx s);
};

FockState operator+(FockState a, const FockState& b);
FockState operator-(FockState a, const FockState& b);
FockState operator*(cplx s, FockState a);
FockState operator-(FockState a);

ParitySector parity_sector(const FockState& s);

// f^i+ and f_i in the ascending-monomial convention: acting on a basis
// monomial picks up (-1)^{#occupied modes below i}. Modes are 1-based.
FockState create(int i, const FockState& s);
FockState annihilate(int i, const FockState& s);

// Exterior product; basis monomials merge with the shuffle sign.
FockState wedge(const FockState& a, const FockState& b);

// Antiautomorphism reversing monomial order: the k-particle component is
// scaled by (-1)^{k(k-1)/2}.
FockState transpose(const FockState& s);

// Coefficient of the full monomial |{1,...,d}>.
cplx top_coefficient(const FockState& s);

// Standard sesquilinear inner product, conjugate-linear in the first slot.
cplx hermitian_inner(const FockState& a, const FockState& b);
double norm(const FockState& s);

// i.i.d. standard complex normal amplitudes on the sector's basis,
// bit-reproducible per (d, sector, seed).
FockState random_state(int d, ParitySector sector, std::uint64_t seed);

namespace detail {
// Test hook for the self-test mutation check: flips the sign convention of
// create(). Never set outside the CLI self-test.
extern bool car_sign_fault;

// Box-Muller on raw mt19937_64 output; fully specified by the standard, so
// identical across platforms (std::normal_distribution is not).
cplx standard_complex_normal(std::mt19937_64& rng);
}  // namespace detail

}  // namespace fockspin
