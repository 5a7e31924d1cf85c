#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockspin/classify.hpp"
#include "fockspin/embed.hpp"
#include "fockspin/invariants.hpp"
#include "fockspin/io.hpp"
#include "fockspin/parametrize.hpp"
#include "fockspin/spin_action.hpp"

namespace {

using namespace fockspin;

FockState load_state(const std::string& path) { return io::parse_state(io::read_file(path)); }

ParitySector sector_from_name(const std::string& name) {
    if (name == "even") return ParitySector::even;
    if (name == "odd") return ParitySector::odd;
    throw std::invalid_argument("sector must be 'even' or 'odd'");
}

OrbitLabel label_from_name(const std::string& name) {
    if (const auto l = orbit_label_from_string(name)) return *l;
    throw std::invalid_argument("unknown orbit label: " + name);
}

// Two-space indent for nesting a serialized state inside a JSON array.
std::string indent_block(const std::string& block) {
    std::string out;
    std::size_t start = 0;
    while (start < block.size()) {
        std::size_t end = block.find('\n', start);
        if (end == std::string::npos) end = block.size();
        if (end > start) out += "  " + block.substr(start, end - start);
        out += "\n";
        start = end + 1;
    }
    while (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
}

struct SelfCheck {
    std::string name;
    std::function<bool()> run;
};

std::vector<SelfCheck> self_checks() {
    std::vector<SelfCheck> checks;

    checks.push_back({"car_anticommutators", [] {
        const FockState s = random_state(5, ParitySector::even, 11) +
                            random_state(5, ParitySector::odd, 12);
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                const FockState acomm =
                    annihilate(i, create(j, s)) + create(j, annihilate(i, s));
                const FockState want = i == j ? s : FockState(5);
                if (norm(acomm - want) > 1e-12 * norm(s)) return false;
            }
        return true;
    }});

    checks.push_back({"pairing_antisymmetry_d6", [] {
        const FockState a = random_state(6, ParitySector::even, 21);
        const FockState b = random_state(6, ParitySector::even, 22);
        return std::abs(mukai_pairing(a, b) + mukai_pairing(b, a)) <
               1e-10 * norm(a) * norm(b);
    }});

    checks.push_back({"moment_map_oracle_d6", [] {
        for (const ParitySector sector : {ParitySector::even, ParitySector::odd}) {
            const FockState phi = random_state(6, sector, 31);
            const MomentMapMatrix a = moment_map(phi);
            const MomentMapMatrix b = moment_map_explicit(phi);
            if ((a.m - b.m).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + a.max_abs())) return false;
        }
        return true;
    }});

    checks.push_back({"q2_transport_invariance", [] {
        const FockState phi = random_state(6, ParitySector::even, 41);
        const SpinGenerator gen = random_generator(6, 42, 0.3);
        const cplx before = q_invariants(phi, 2)[1];
        const cplx after = q_invariants(exp_apply(gen, phi), 2)[1];
        return std::abs(before - after) <= 1e-8 * (1.0 + std::abs(before));
    }});

    checks.push_back({"ghz_like_quartic", [] {
        FockState s(6);
        s.amp[0] = 1.0;
        s.amp[63] = 1.0;
        return std::abs(q_invariants(s, 2)[1] / 6.0 - cplx{1.0, 0.0}) < 1e-12;
    }});

    checks.push_back({"vacuum_orbit_closed_form", [] {
        SpinGenerator gen = random_generator(6, 51, 0.4);
        gen.A.setZero();
        gen.beta.setZero();
        const FockState direct = exp_apply(gen, FockState::vacuum(6));
        const FockState closed = vacuum_orbit_state(gen);
        return norm(direct - closed) < 1e-10 * norm(closed);
    }});

    checks.push_back({"reflection_involution", [] {
        CliffordVector y(4);
        y.u(0) = 1.0;
        y.v(0) = 1.0;  // form(y, y) = 1
        const FockState s = random_state(4, ParitySector::odd, 61);
        CliffordVector x = CliffordVector::from_coords(4, Eigen::VectorXcd::Random(8));
        const CliffordVector twice = reflect(y, reflect(y, x));
        return (twice.coords() - x.coords()).cwiseAbs().maxCoeff() < 1e-12 &&
               norm(apply_vector(y, apply_vector(y, s)) - s) < 1e-12 * norm(s);
    }});

    checks.push_back({"three_qubit_duality", [] {
        return duality_check(ThreeQubitState::ghz()).consistent &&
               duality_check(ThreeQubitState::w_state()).consistent;
    }});

    checks.push_back({"pure_spinor_vacuum_d5", [] {
        return classify(FockState::vacuum(5)).label == OrbitLabel::pure;
    }});

    checks.push_back({"table_rank_chain_d6", [] {
        return classify(canonical_family_even_d6(1, 1, 1, 1)).label == OrbitLabel::rank4 &&
               classify(canonical_family_even_d6(1, 1, 1, 0)).label == OrbitLabel::rank3 &&
               classify(canonical_family_even_d6(1, 1, 0, 0)).label == OrbitLabel::rank2 &&
               classify(canonical_family_even_d6(1, 0, 0, 0)).label == OrbitLabel::rank1;
    }});

    return checks;
}

int run_selftest(const std::string& fault) {
    if (fault == "car-sign")
        detail::car_sign_fault = true;
    else if (!fault.empty())
        throw std::invalid_argument("unknown fault name: " + fault);

    nlohmann::json checks = nlohmann::json::array();
    int failed = 0;
    for (const SelfCheck& c : self_checks()) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cerr << c.name << " threw: " << e.what() << "\n";
        }
        if (!ok) ++failed;
        std::cerr << (ok ? "ok   " : "FAIL ") << c.name << "\n";
        checks.push_back({{"name", c.name}, {"ok", ok}});
    }
    nlohmann::json summary;
    summary["version"] = io::kToolVersion;
    summary["passed"] = static_cast<int>(checks.size()) - failed;
    summary["failed"] = failed;
    summary["checks"] = checks;
    std::cout << summary.dump(2) << "\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-group orbit classification of fermionic Fock-space states"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string state_path, other_path, qubit_path, sector_name, label_name, target, fault;
    std::vector<std::string> generator_paths;
    std::vector<int> order;
    double tol = default_tolerance();
    int k_max = 4, d = 6, count = 5;
    std::uint64_t seed = 1;

    CLI::App* classify_cmd = app.add_subcommand("classify", "Orbit classification report");
    classify_cmd->add_option("--state", state_path, "StateFile path")->required();
    classify_cmd->add_option("--tol", tol, "classification tolerance (default FOCKSPIN_TOL or 1e-8)");
    classify_cmd->callback([&] {
        std::cout << io::classification_report_json(classify(load_state(state_path), tol));
    });

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "Moment map and q_k invariants");
    invariants_cmd->add_option("--state", state_path, "StateFile path")->required();
    invariants_cmd->add_option("--k-max", k_max, "highest trace power")->check(CLI::Range(1, 12));
    invariants_cmd->callback([&] {
        std::cout << io::invariant_report_json(load_state(state_path), k_max);
    });

    CLI::App* pairing_cmd = app.add_subcommand("pairing", "Mukai pairing of two states");
    pairing_cmd->add_option("--state", state_path, "StateFile path")->required();
    pairing_cmd->add_option("--other", other_path, "StateFile path")->required();
    pairing_cmd->callback([&] {
        std::cout << io::pairing_report_json(load_state(state_path), load_state(other_path));
    });

    CLI::App* transform_cmd =
        app.add_subcommand("transform", "Apply a product of generator exponentials");
    transform_cmd->add_option("--state", state_path, "StateFile path")->required();
    transform_cmd->add_option("--generator", generator_paths, "GeneratorFile paths")->required();
    transform_cmd->add_option("--order", order,
                              "1-based indices into the generator list; the product "
                              "e^{T_o1} e^{T_o2} ... applies the rightmost factor first");
    transform_cmd->callback([&] {
        FockState s = load_state(state_path);
        std::vector<SpinGenerator> gens;
        for (const std::string& p : generator_paths)
            gens.push_back(io::parse_generator(io::read_file(p)));
        std::vector<int> word(order);
        if (word.empty())
            for (int i = 1; i <= static_cast<int>(gens.size()); ++i) word.push_back(i);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (*it < 1 || *it > static_cast<int>(gens.size()))
                throw std::invalid_argument("--order index out of range");
            const SpinGenerator& g = gens[static_cast<std::size_t>(*it - 1)];
            if (g.d != s.d)
                throw std::invalid_argument("generator dimension does not match the state");
            s = exp_apply(g, s);
        }
        std::cout << io::serialize_state(s);
    });

    CLI::App* canonical_cmd = app.add_subcommand("canonical", "Canonical orbit representative");
    canonical_cmd->add_option("--d", d, "mode count")->required();
    canonical_cmd->add_option("--sector", sector_name, "even|odd")->required();
    canonical_cmd->add_option("--label", label_name, "orbit label")->required();
    canonical_cmd->callback([&] {
        const CanonicalForm c =
            canonical_state(d, sector_from_name(sector_name), label_from_name(label_name));
        std::cout << io::serialize_state(c.state);
    });

    CLI::App* embed_cmd = app.add_subcommand("embed", "Embed a qubit state into the Fock space");
    embed_cmd->add_option("--qubits", qubit_path, "QubitFile path")->required();
    embed_cmd->add_option("--target", target, "odd|even|d4")->required();
    embed_cmd->callback([&] {
        const io::QubitFile q = io::parse_qubit_file(io::read_file(qubit_path));
        FockState s;
        if (target == "d4") {
            if (q.qubits != 2) throw std::invalid_argument("--target d4 needs a 2-qubit file");
            s = embed_two_qubit_d4(q.two);
        } else if (target == "odd" || target == "even") {
            if (q.qubits != 3)
                throw std::invalid_argument("--target " + target + " needs a 3-qubit file");
            s = target == "odd" ? embed_three_qubit_odd(q.three)
                                : embed_three_qubit_even(q.three);
        } else {
            throw std::invalid_argument("--target must be odd, even, or d4");
        }
        std::cout << io::serialize_state(s);
    });

    CLI::App* sample_cmd = app.add_subcommand("sample", "Transport a canonical state along its orbit");
    sample_cmd->add_option("--d", d, "mode count")->required();
    sample_cmd->add_option("--sector", sector_name, "even|odd")->required();
    sample_cmd->add_option("--label", label_name, "orbit label")->required();
    sample_cmd->add_option("--count", count, "number of samples")->check(CLI::Range(1, 1000));
    sample_cmd->add_option("--seed", seed, "sampling seed");
    sample_cmd->callback([&] {
        const CanonicalForm c =
            canonical_state(d, sector_from_name(sector_name), label_from_name(label_name));
        const std::vector<FockState> samples = orbit_sample(c, seed, count);
        std::string out = "[\n";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            out += indent_block(io::serialize_state(samples[i]));
            out += i + 1 < samples.size() ? ",\n" : "\n";
        }
        out += "]\n";
        std::cout << out;
    });

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the built-in property checks");
    selftest_cmd->add_option("--inject-fault", fault, "internal: flip a sign convention")
        ->group("");
    selftest_cmd->callback([&] { exit_code = run_selftest(fault); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
