#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fockspin/clifford.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/invariants.hpp"

namespace fockspin {

// Class tolerance: FOCKSPIN_TOL in the environment overrides the 1e-8
// default. All zero tests scale as tol * norm^k with k the homogeneity
// degree of the tested quantity.
double default_tolerance();

enum class OrbitLabel {
    null_state,  // zero vector
    pure,        // pure spinor orbit (d <= 5 labels)
    generic,     // non-pure orbit at d <= 5, or d=6 odd with u, w != 0
    rank0,       // d=6 even zero vector
    rank1,
    rank2,
    rank3,
    rank4,
    sep,    // d=6 three-fermion classes
    bisep,
    w_class,
    ghz_class,
    ghz_like,  // canonical alias: |0> + |{1..6}> representative of the rank4
               // orbit; classifiers report rank4, never this label
};

std::string to_string(OrbitLabel label);
std::optional<OrbitLabel> orbit_label_from_string(const std::string& name);

struct ClassificationReport {
    int d = 0;
    ParitySector sector = ParitySector::even;
    bool is_pure = false;
    int kernel_dim = 0;
    int moment_rank = -1;  // -1 when the moment map is not defined (odd d)
    std::optional<cplx> q2;
    cplx pairing_self{0.0, 0.0};
    OrbitLabel label = OrbitLabel::null_state;
    double tol = 1e-8;
};

// Basis of E_phi = {x in W + W* : x|phi> = 0}; kernel of the 2^d x 2d matrix
// of basis-operator applications, singular values below 1e-9 * sigma_max
// treated as zero. Rejects the zero state.
std::pair<int, std::vector<CliffordVector>> annihilator_kernel(const FockState& phi);

// kernel dimension == d (the maximal isotropic dimension).
bool is_pure_spinor(const FockState& phi);

// lambda * e^{B} f_{v1}+ ... f_{vk}+ |0>, the general pure spinor. The rows
// of v (each of length d) must be linearly independent.
FockState pure_spinor_generate(cplx lambda, const Eigen::MatrixXcd& b,
                               const std::vector<Eigen::VectorXcd>& v);

// Five-orbit decision chain for the d=6 even sector: q2 != 0 -> rank4; else
// the cubic dual T_phi|phi> != 0 -> rank3 (T_phi lifted from the moment
// blocks); else M != 0 -> rank2; else phi != 0 -> rank1; else rank0.
ClassificationReport classify_d6_even(const FockState& phi, double tol = default_tolerance());

// Three-fermion (u = w = 0) classes from rank K_P: 6 -> GHZ, 3 -> W,
// 1 -> biseparable, 0 -> separable.
OrbitLabel classify_d6_odd_threefermion(const AntisymRank3& p, double tol = default_tolerance());

// d = 2..5: null / pure / generic per sector.
ClassificationReport classify_small(const FockState& phi, double tol = default_tolerance());

// Dispatch on (d, sector); d=6 odd states with u = w = 0 get the
// three-fermion label. Unsupported d or mixed sector throws.
ClassificationReport classify(const FockState& phi, double tol = default_tolerance());

struct CanonicalForm {
    int d = 0;
    ParitySector sector = ParitySector::even;
    OrbitLabel label = OrbitLabel::null_state;
    std::vector<cplx> params;
    FockState state;
};

// y = block-diag([[0,a],[-a,0]], [[0,b],[-b,0]], [[0,c],[-c,0]]), xi = dd,
// eta = 0, x = 0; the parameter rows (1,1,1,1) ... (1,0,0,0) realize the
// rank4..rank1 orbits with moment ranks 12, 6, 2, 0.
FockState canonical_family_even_d6(cplx a, cplx b, cplx c, cplx dd);

CanonicalForm canonical_state(int d, ParitySector sector, OrbitLabel label);

// Transports a canonical state with seeded random identity-component group
// elements; every sample classifies like the canonical.
std::vector<FockState> orbit_sample(const CanonicalForm& canonical, std::uint64_t seed, int count);

}  // namespace fockspin
