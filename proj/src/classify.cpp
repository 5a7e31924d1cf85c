#include "fockspin/classify.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fockspin/parametrize.hpp"
#include "fockspin/spin_action.hpp"

namespace fockspin {

namespace {

constexpr double kZeroMatrixTol = 1e-10;  // max entry vs this * norm^2
constexpr double kRankRelTol = 1e-9;

void check_classifiable(const FockState& phi) {
    if (parity_sector(phi) == ParitySector::mixed)
        throw std::domain_error("classification requires a fixed parity sector");
}

bool is_zero_state(const FockState& phi) { return norm(phi) == 0.0; }

FockState dual_state(const FockState& phi, const MomentMapMatrix& mm) {
    SpinGenerator g(phi.d);
    g.A = mm.block_a();
    g.B = mm.block_b();
    g.beta = mm.block_beta();
    return apply_generator(g, phi);
}

ClassificationReport base_report(const FockState& phi, double tol) {
    ClassificationReport r;
    r.d = phi.d;
    r.sector = parity_sector(phi);
    r.tol = tol;
    r.pairing_self = mukai_pairing(phi, phi);
    if (!is_zero_state(phi)) {
        r.kernel_dim = annihilator_kernel(phi).first;
        r.is_pure = r.kernel_dim == phi.d;
    }
    if (phi.d % 2 == 0) {
        const MomentMapMatrix mm = moment_map(phi);
        r.moment_rank = moment_rank(mm);
        r.q2 = 0.5 * (mm.m * mm.m).trace();
    }
    return r;
}

}  // namespace

double default_tolerance() {
    if (const char* env = std::getenv("FOCKSPIN_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-8;
}

std::string to_string(OrbitLabel label) {
    switch (label) {
        case OrbitLabel::null_state: return "null";
        case OrbitLabel::pure: return "pure";
        case OrbitLabel::generic: return "generic";
        case OrbitLabel::rank0: return "rank0";
        case OrbitLabel::rank1: return "rank1";
        case OrbitLabel::rank2: return "rank2";
        case OrbitLabel::rank3: return "rank3";
        case OrbitLabel::rank4: return "rank4";
        case OrbitLabel::sep: return "sep";
        case OrbitLabel::bisep: return "bisep";
        case OrbitLabel::w_class: return "w";
        case OrbitLabel::ghz_class: return "ghz";
        case OrbitLabel::ghz_like: return "ghz_like";
    }
    return "null";
}

std::optional<OrbitLabel> orbit_label_from_string(const std::string& name) {
    for (OrbitLabel l : {OrbitLabel::null_state, OrbitLabel::pure, OrbitLabel::generic,
                         OrbitLabel::rank0, OrbitLabel::rank1, OrbitLabel::rank2,
                         OrbitLabel::rank3, OrbitLabel::rank4, OrbitLabel::sep,
                         OrbitLabel::bisep, OrbitLabel::w_class, OrbitLabel::ghz_class,
                         OrbitLabel::ghz_like})
        if (to_string(l) == name) return l;
    return std::nullopt;
}

std::pair<int, std::vector<CliffordVector>> annihilator_kernel(const FockState& phi) {
    if (is_zero_state(phi)) throw std::invalid_argument("annihilator kernel of the zero state");
    const int d = phi.d;
    Eigen::MatrixXcd k(phi.dim(), 2 * d);
    for (int j = 0; j < 2 * d; ++j) {
        const FockState img =
            j < d ? create(j + 1, phi) : annihilate(j - d + 1, phi);
        for (std::uint32_t r = 0; r < phi.dim(); ++r) k(r, j) = img.amp[r];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() ? kRankRelTol * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    std::vector<CliffordVector> basis;
    for (int j = rank; j < 2 * d; ++j)
        basis.push_back(CliffordVector::from_coords(d, svd.matrixV().col(j)));
    return {2 * d - rank, std::move(basis)};
}

bool is_pure_spinor(const FockState& phi) { return annihilator_kernel(phi).first == phi.d; }

FockState pure_spinor_generate(cplx lambda, const Eigen::MatrixXcd& b,
                               const std::vector<Eigen::VectorXcd>& v) {
    if (lambda == cplx{0.0, 0.0}) throw std::invalid_argument("lambda must be nonzero");
    const int d = static_cast<int>(b.rows());
    if (!v.empty()) {
        Eigen::MatrixXcd rows(v.size(), d);
        for (std::size_t r = 0; r < v.size(); ++r) {
            if (v[r].size() != d) throw std::invalid_argument("creation vector of wrong length");
            rows.row(static_cast<Eigen::Index>(r)) = v[r].transpose();
        }
        if (matrix_rank(rows) != static_cast<int>(v.size()))
            throw std::invalid_argument("creation vectors must be linearly independent");
    }
    FockState s = FockState::vacuum(d);
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        FockState next(d);
        for (int i = 1; i <= d; ++i)
            if ((*it)(i - 1) != cplx{0.0, 0.0}) next += (*it)(i - 1) * create(i, s);
        s = next;
    }
    // e^{+B} here: the pure-spinor normal form uses the opposite sign to the
    // vacuum-orbit transform e^T = e^{-B}.
    SpinGenerator gen = SpinGenerator::from_blocks(Eigen::MatrixXcd::Zero(d, d), -b,
                                                   Eigen::MatrixXcd::Zero(d, d));
    return lambda * exp_apply(gen, s);
}

ClassificationReport classify_d6_even(const FockState& phi, double tol) {
    if (phi.d != 6) throw std::domain_error("classify_d6_even needs d = 6");
    check_classifiable(phi);
    if (parity_sector(phi) == ParitySector::odd)
        throw std::domain_error("classify_d6_even needs the even sector");
    ClassificationReport r = base_report(phi, tol);
    const double n = norm(phi);
    if (n == 0.0) {
        r.label = OrbitLabel::rank0;
        return r;
    }
    const MomentMapMatrix mm = moment_map(phi);
    if (std::abs(*r.q2) > tol * n * n * n * n) {
        r.label = OrbitLabel::rank4;
    } else if (norm(dual_state(phi, mm)) > tol * n * n * n) {
        r.label = OrbitLabel::rank3;
    } else if (mm.max_abs() > kZeroMatrixTol * n * n) {
        r.label = OrbitLabel::rank2;
    } else {
        r.label = OrbitLabel::rank1;
    }
    return r;
}

OrbitLabel classify_d6_odd_threefermion(const AntisymRank3& p, double tol) {
    if (p.d != 6) throw std::domain_error("three-fermion classes need d = 6");
    const double scale = p.max_abs();
    if (scale == 0.0) return OrbitLabel::null_state;
    Eigen::MatrixXcd k = k_matrix(p);
    (void)tol;
    switch (matrix_rank(k, kRankRelTol)) {
        case 6: return OrbitLabel::ghz_class;
        case 3: return OrbitLabel::w_class;
        case 1: return OrbitLabel::bisep;
        case 0: return OrbitLabel::sep;
        default:
            throw std::runtime_error("K_P rank outside {6,3,1,0}; not a three-fermion class");
    }
}

ClassificationReport classify_small(const FockState& phi, double tol) {
    if (phi.d > 5) throw std::domain_error("classify_small covers d <= 5");
    check_classifiable(phi);
    ClassificationReport r = base_report(phi, tol);
    if (is_zero_state(phi)) {
        r.label = OrbitLabel::null_state;
        return r;
    }
    r.label = r.is_pure ? OrbitLabel::pure : OrbitLabel::generic;
    return r;
}

ClassificationReport classify(const FockState& phi, double tol) {
    check_classifiable(phi);
    if (phi.d <= 5) return classify_small(phi, tol);
    if (phi.d != 6) throw std::domain_error("orbit classification implemented for d <= 6");
    if (parity_sector(phi) == ParitySector::even) return classify_d6_even(phi, tol);

    ClassificationReport r = base_report(phi, tol);
    const double n = norm(phi);
    const OddD6 p = unpack_odd_d6(phi);
    const double uw = std::max(p.u.cwiseAbs().maxCoeff(), p.w.cwiseAbs().maxCoeff());
    if (uw <= tol * n)
        r.label = classify_d6_odd_threefermion(p.P, tol);
    else
        r.label = OrbitLabel::generic;
    return r;
}

FockState canonical_family_even_d6(cplx a, cplx b, cplx c, cplx dd) {
    EvenD6 p;
    p.y(0, 1) = a;
    p.y(1, 0) = -a;
    p.y(2, 3) = b;
    p.y(3, 2) = -b;
    p.y(4, 5) = c;
    p.y(5, 4) = -c;
    p.xi = dd;
    return pack_even_d6(p);
}

CanonicalForm canonical_state(int d, ParitySector sector, OrbitLabel label) {
    CanonicalForm out;
    out.d = d;
    out.sector = sector;
    out.label = label;
    const auto unsupported = [&] {
        throw std::domain_error("no canonical state for (" + std::to_string(d) + ", " +
                                to_string(sector) + ", " + to_string(label) + ")");
    };
    if (sector == ParitySector::mixed) unsupported();

    if (label == OrbitLabel::null_state || label == OrbitLabel::rank0) {
        if (label == OrbitLabel::rank0 && d != 6) unsupported();
        out.state = FockState(d);
        return out;
    }

    if (d == 6 && sector == ParitySector::even && label == OrbitLabel::ghz_like) {
        FockState s(6);
        s.amp[0] = 1.0;
        s.amp[(1u << 6) - 1] = 1.0;  // |0> + |{1,...,6}>: eta = xi = 1, rank4 orbit
        out.state = s;
        return out;
    }

    if (d == 6 && sector == ParitySector::even) {
        cplx a{0.0}, b{0.0}, c{0.0}, dd{0.0};
        switch (label) {
            case OrbitLabel::rank4: a = b = c = dd = 1.0; break;
            case OrbitLabel::rank3: a = b = c = 1.0; break;
            case OrbitLabel::rank2: a = b = 1.0; break;
            case OrbitLabel::rank1: a = 1.0; break;
            default: unsupported();
        }
        out.params = {a, b, c, dd};
        out.state = canonical_family_even_d6(a, b, c, dd);
        return out;
    }

    if (d == 6 && sector == ParitySector::odd) {
        FockState s(6);
        switch (label) {
            case OrbitLabel::ghz_class:
                s.amp[0b010101] = 1.0;  // |{1,3,5}>
                s.amp[0b101010] = 1.0;  // |{2,4,6}>
                break;
            case OrbitLabel::w_class:
                s.amp[0b100101] = 1.0;  // |{1,3,6}>
                s.amp[0b011001] = 1.0;  // |{1,4,5}>
                s.amp[0b010110] = 1.0;  // |{2,3,5}>
                break;
            case OrbitLabel::bisep:
                s.amp[0b010101] = 1.0;  // |{1,3,5}>
                s.amp[0b101001] = 1.0;  // |{1,4,6}>
                break;
            case OrbitLabel::sep:
                s.amp[0b010101] = 1.0;  // |{1,3,5}>
                break;
            default: unsupported();
        }
        out.state = s;
        return out;
    }

    if (d <= 5) {
        FockState s(d);
        const bool odd = sector == ParitySector::odd;
        switch (label) {
            case OrbitLabel::pure:
                if (odd)
                    s.amp[1] = 1.0;  // |{1}>
                else
                    s.amp[0] = 1.0;  // vacuum
                break;
            case OrbitLabel::generic:
                if (d == 4 && !odd) {
                    s.amp[0] = 1.0;
                    s.amp[15] = 1.0;  // eta = rho = 1: (phi, phi) = 2
                } else if (d == 4 && odd) {
                    s.amp[0b0001] = 1.0;  // |{1}>
                    s.amp[0b1110] = 1.0;  // |{2,3,4}>
                } else if (d == 5 && !odd) {
                    s.amp[0] = 1.0;
                    s.amp[0b11110] = 1.0;  // eta = 1, chi^1 = 1: v_phi != 0
                } else if (d == 5 && odd) {
                    s.amp[0b00001] = 1.0;  // |{1}>
                    s.amp[0b01110] = 1.0;  // |{2,3,4}>
                } else {
                    unsupported();  // every nonzero state is pure for d <= 3
                }
                break;
            default: unsupported();
        }
        out.state = s;
        return out;
    }
    unsupported();
    return out;
}

std::vector<FockState> orbit_sample(const CanonicalForm& canonical, std::uint64_t seed, int count) {
    // The three-fermion labels live on the fixed-particle-number subspace and
    // are invariants of GL(6) acting there, so their transport uses
    // number-conserving (A-block only) group elements. All other labels are
    // invariants of the full group.
    const bool number_conserving =
        canonical.d == 6 && canonical.sector == ParitySector::odd &&
        (canonical.label == OrbitLabel::sep || canonical.label == OrbitLabel::bisep ||
         canonical.label == OrbitLabel::w_class || canonical.label == OrbitLabel::ghz_class);
    std::vector<FockState> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        SpinGenerator gen =
            random_generator(canonical.d, seed * 1000003ULL + static_cast<std::uint64_t>(k), 0.3);
        if (number_conserving) {
            gen.B.setZero();
            gen.beta.setZero();
        }
        out.push_back(exp_apply(gen, canonical.state));
    }
    return out;
}

}  // namespace fockspin
