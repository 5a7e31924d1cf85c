#include <doctest.h>
#include <json.hpp>

#include <stdexcept>
#include <string>

#include "fockspin/classify.hpp"
#include "fockspin/embed.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/io.hpp"
#include "fockspin/spin_action.hpp"

using namespace fockspin;

TEST_CASE("state files: bit-exact round trip") {
    const FockState s =
        random_state(5, ParitySector::even, 801) + random_state(5, ParitySector::odd, 802);
    const FockState back = io::parse_state(io::serialize_state(s));
    CHECK(back.d == 5);
    for (std::uint32_t m = 0; m < s.dim(); ++m) CHECK(back.amp[m] == s.amp[m]);

    // Zero state: no amplitude records at all.
    const FockState z = io::parse_state(io::serialize_state(FockState(3)));
    CHECK(norm(z) == 0.0);

    // The serializer keeps mode lists on one line for greppable output.
    FockState pair(4);
    pair.amp[0b0011] = cplx(0.25, -1.0);
    CHECK(io::serialize_state(pair).find("\"modes\": [1, 2]") != std::string::npos);
}

TEST_CASE("state files: schema violations raise invalid_argument") {
    const auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(io::parse_state(text), std::invalid_argument);
    };
    bad("not json at all {");
    bad("[1, 2, 3]");                                          // not an object
    bad(R"({"amplitudes": []})");                              // missing d
    bad(R"({"d": 0, "amplitudes": []})");                      // dimension bound
    bad(R"({"d": 99, "amplitudes": []})");
    bad(R"({"d": "three", "amplitudes": []})");
    bad(R"({"d": 3})");                                        // missing amplitudes
    bad(R"({"d": 3, "amplitudes": [{"re": 1.0, "im": 0.0}]})");            // missing modes
    bad(R"({"d": 3, "amplitudes": [{"modes": [2, 1], "re": 1.0, "im": 0.0}]})");  // not ascending
    bad(R"({"d": 3, "amplitudes": [{"modes": [1, 1], "re": 1.0, "im": 0.0}]})");  // repeat
    bad(R"({"d": 3, "amplitudes": [{"modes": [0], "re": 1.0, "im": 0.0}]})");     // 1-based
    bad(R"({"d": 3, "amplitudes": [{"modes": [4], "re": 1.0, "im": 0.0}]})");     // above d
    bad(R"({"d": 3, "amplitudes": [{"modes": [1], "im": 0.0}]})");                // missing re
    bad(R"({"d": 3, "amplitudes": [{"modes": [1], "re": "x", "im": 0.0}]})");
    bad(R"({"d": 3, "amplitudes": [{"modes": [1], "re": 1.0, "im": 0.0},
                                    {"modes": [1], "re": 2.0, "im": 0.0}]})");    // duplicate record

    const FockState ok = io::parse_state(
        R"({"d": 2, "amplitudes": [{"modes": [], "re": 0.5, "im": 0.0},
                                    {"modes": [1, 2], "re": 0.0, "im": -2.0}]})");
    CHECK(ok.amp[0] == cplx(0.5, 0.0));
    CHECK(ok.amp[0b11] == cplx(0.0, -2.0));
}

TEST_CASE("generator files: round trip and antisymmetry enforcement") {
    const SpinGenerator g = random_generator(3, 811);
    const SpinGenerator back = io::parse_generator(io::serialize_generator(g));
    CHECK(back.d == 3);
    CHECK((back.A - g.A).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.B - g.B).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.beta - g.beta).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(io::parse_generator(R"({"d": 2})"), std::invalid_argument);
    // B must be antisymmetric.
    CHECK_THROWS_AS(io::parse_generator(R"({
        "d": 2,
        "A": [[[0,0],[0,0]],[[0,0],[0,0]]],
        "B": [[[0,0],[1,0]],[[1,0],[0,0]]],
        "beta": [[[0,0],[0,0]],[[0,0],[0,0]]]
    })"),
                    std::invalid_argument);
    // Row count must match d.
    CHECK_THROWS_AS(io::parse_generator(R"({
        "d": 3,
        "A": [[[0,0],[0,0]],[[0,0],[0,0]]],
        "B": [[[0,0],[0,0]],[[0,0],[0,0]]],
        "beta": [[[0,0],[0,0]],[[0,0],[0,0]]]
    })"),
                    std::invalid_argument);
}

TEST_CASE("qubit files: both sizes round trip") {
    io::QubitFile q3;
    q3.qubits = 3;
    q3.three = random_three_qubit(821);
    const io::QubitFile b3 = io::parse_qubit_file(io::serialize_qubit_file(q3));
    CHECK(b3.qubits == 3);
    for (int t = 0; t < 8; ++t) CHECK(b3.three.amp[t] == q3.three.amp[t]);

    io::QubitFile q2;
    q2.qubits = 2;
    q2.two.x << cplx(0.1, 0.2), cplx(0.3, -0.4), cplx(-0.5, 0.6), cplx(0.7, 0.0);
    const io::QubitFile b2 = io::parse_qubit_file(io::serialize_qubit_file(q2));
    CHECK(b2.qubits == 2);
    CHECK((b2.two.x - q2.two.x).cwiseAbs().maxCoeff() == 0.0);

    // First qubit is the most significant amplitude index.
    const io::QubitFile ord = io::parse_qubit_file(
        R"({"qubits": 3, "amplitudes": [[0,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0]]})");
    CHECK(ord.three.at(1, 0, 0) == cplx(1.0, 0.0));

    CHECK_THROWS_AS(io::parse_qubit_file(R"({"qubits": 4, "amplitudes": []})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_qubit_file(R"({"qubits": 3, "amplitudes": [[0,0]]})"),
                    std::invalid_argument);
}

TEST_CASE("report renderers expose the expected fields") {
    FockState ghz(6);
    ghz.amp[0] = 1.0;
    ghz.amp[63] = 1.0;

    const auto rep = nlohmann::json::parse(io::classification_report_json(classify(ghz)));
    CHECK(rep.at("orbit_label") == "rank4");
    CHECK(rep.at("d") == 6);
    CHECK(rep.at("sector") == "even");
    CHECK(rep.at("is_pure") == false);
    CHECK(rep.at("kernel_dim") == 0);
    CHECK(rep.at("moment_rank") == 12);
    CHECK(rep.at("q2_over_6")[0].get<double>() == doctest::Approx(1.0));
    CHECK(rep.contains("version"));

    const auto inv = nlohmann::json::parse(io::invariant_report_json(ghz, 4));
    CHECK(inv.at("moment_rank") == 12);
    CHECK(inv.at("q").size() == 4);
    CHECK(inv.contains("moment_map"));

    // Odd mode count: no moment map, the vector covariant instead.
    const FockState odd5 = random_state(5, ParitySector::odd, 831);
    const auto inv5 = nlohmann::json::parse(io::invariant_report_json(odd5, 2));
    CHECK_FALSE(inv5.contains("moment_rank"));
    CHECK(inv5.contains("vector_covariant"));
    CHECK(inv5.at("vector_covariant").contains("lower"));
    CHECK(inv5.at("vector_covariant").contains("upper"));

    const FockState a = random_state(4, ParitySector::even, 832);
    const auto pair = nlohmann::json::parse(io::pairing_report_json(a, a));
    CHECK(pair.contains("pairing"));
    CHECK(pair.at("d") == 4);
}

TEST_CASE("read_file distinguishes missing files from bad content") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/path/state.json"), std::runtime_error);
}
