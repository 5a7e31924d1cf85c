#include "fockspin/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "fockspin/invariants.hpp"

namespace fockspin::io {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

// Shortest round-trip decimal form, the same encoder used for report output.
std::string dump_double(double v) { return json(v).dump(); }

cplx parse_complex(const json& v, const std::string& where) {
    require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(),
            where + " must be a [re, im] number pair");
    return {v[0].get<double>(), v[1].get<double>()};
}

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

Eigen::MatrixXcd parse_matrix(const json& v, int d, const std::string& name) {
    require(v.is_array() && static_cast<int>(v.size()) == d,
            "'" + name + "' must be a " + std::to_string(d) + " x " + std::to_string(d) +
                " matrix");
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; ++r) {
        const json& row = v[static_cast<std::size_t>(r)];
        require(row.is_array() && static_cast<int>(row.size()) == d,
                "'" + name + "' row " + std::to_string(r) + " must have " + std::to_string(d) +
                    " entries");
        for (int c = 0; c < d; ++c)
            m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                    "'" + name + "' entry");
    }
    return m;
}

json matrix_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

int parse_dimension(const json& j) {
    require(j.is_object(), "top level must be a JSON object");
    require(j.contains("d") && j["d"].is_number_integer(), "missing integer field 'd'");
    return j["d"].get<int>();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FockState parse_state(const std::string& text) {
    const json j = parse_json(text);
    FockState s(parse_dimension(j));  // rejects d outside [1, mode cap]
    require(j.contains("amplitudes") && j["amplitudes"].is_array(),
            "missing array field 'amplitudes'");
    std::vector<bool> seen(s.dim(), false);
    for (const json& rec : j["amplitudes"]) {
        require(rec.is_object(), "amplitude records must be objects");
        require(rec.contains("modes") && rec["modes"].is_array(),
                "amplitude record needs a 'modes' array");
        std::uint32_t mask = 0;
        int prev = 0;
        for (const json& mj : rec["modes"]) {
            require(mj.is_number_integer(), "mode indices must be integers");
            const int mode = mj.get<int>();
            require(mode >= 1 && mode <= s.d, "mode index out of range [1, d]");
            require(mode > prev, "modes must be strictly ascending");
            prev = mode;
            mask |= std::uint32_t{1} << (mode - 1);
        }
        require(!seen[mask], "duplicate mode set in 'amplitudes'");
        seen[mask] = true;
        require(rec.contains("re") && rec["re"].is_number(), "amplitude record needs number 're'");
        require(rec.contains("im") && rec["im"].is_number(), "amplitude record needs number 'im'");
        s.amp[mask] = {rec["re"].get<double>(), rec["im"].get<double>()};
    }
    return s;
}

std::string serialize_state(const FockState& s) {
    // Hand-rolled layout: one amplitude record per line, modes inline.
    std::string out = "{\n";
    out += "  \"d\": " + std::to_string(s.d) + ",\n";
    out += "  \"sector\": \"" + to_string(parity_sector(s)) + "\",\n";
    out += "  \"norm\": " + dump_double(norm(s)) + ",\n";
    out += "  \"amplitudes\": [";
    bool first = true;
    for (std::uint32_t m = 0; m < s.dim(); ++m) {
        if (s.amp[m] == cplx{0.0, 0.0}) continue;
        if (!first) out += ",";
        first = false;
        out += "\n    {\"modes\": [";
        bool first_mode = true;
        for (int i = 1; i <= s.d; ++i)
            if (m & (std::uint32_t{1} << (i - 1))) {
                if (!first_mode) out += ", ";
                first_mode = false;
                out += std::to_string(i);
            }
        out += "], \"re\": " + dump_double(s.amp[m].real()) +
               ", \"im\": " + dump_double(s.amp[m].imag()) + "}";
    }
    out += first ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

SpinGenerator parse_generator(const std::string& text) {
    const json j = parse_json(text);
    const int d = parse_dimension(j);
    require(d >= 1 && d <= max_mode_count(), "generator dimension out of range");
    for (const char* f : {"A", "B", "beta"})
        require(j.contains(f), std::string("missing matrix field '") + f + "'");
    // from_blocks enforces antisymmetry of B and beta.
    return SpinGenerator::from_blocks(parse_matrix(j["A"], d, "A"), parse_matrix(j["B"], d, "B"),
                                      parse_matrix(j["beta"], d, "beta"));
}

std::string serialize_generator(const SpinGenerator& g) {
    json j;
    j["d"] = g.d;
    j["A"] = matrix_json(g.A);
    j["B"] = matrix_json(g.B);
    j["beta"] = matrix_json(g.beta);
    return j.dump(2) + "\n";
}

QubitFile parse_qubit_file(const std::string& text) {
    const json j = parse_json(text);
    require(j.is_object(), "top level must be a JSON object");
    require(j.contains("qubits") && j["qubits"].is_number_integer(),
            "missing integer field 'qubits'");
    QubitFile out;
    out.qubits = j["qubits"].get<int>();
    require(out.qubits == 2 || out.qubits == 3, "'qubits' must be 2 or 3");
    const std::size_t n = out.qubits == 2 ? 4 : 8;
    require(j.contains("amplitudes") && j["amplitudes"].is_array() && j["amplitudes"].size() == n,
            "'amplitudes' must list " + std::to_string(n) + " [re, im] pairs");
    for (std::size_t m = 0; m < n; ++m) {
        const cplx a = parse_complex(j["amplitudes"][m], "amplitude");
        if (out.qubits == 2)
            out.two.x(static_cast<int>(m >> 1), static_cast<int>(m & 1)) = a;
        else
            out.three.amp[m] = a;
    }
    return out;
}

std::string serialize_qubit_file(const QubitFile& q) {
    json j;
    j["qubits"] = q.qubits;
    json arr = json::array();
    const std::size_t n = q.qubits == 2 ? 4 : 8;
    for (std::size_t m = 0; m < n; ++m)
        arr.push_back(complex_json(q.qubits == 2
                                       ? q.two.x(static_cast<int>(m >> 1), static_cast<int>(m & 1))
                                       : q.three.amp[m]));
    j["amplitudes"] = arr;
    return j.dump(2) + "\n";
}

std::string classification_report_json(const ClassificationReport& r) {
    json j;
    j["version"] = kToolVersion;
    j["d"] = r.d;
    j["sector"] = to_string(r.sector);
    j["orbit_label"] = to_string(r.label);
    j["is_pure"] = r.is_pure;
    j["kernel_dim"] = r.kernel_dim;
    j["moment_rank"] = r.moment_rank >= 0 ? json(r.moment_rank) : json();
    j["q2"] = r.q2 ? complex_json(*r.q2) : json();
    j["q2_over_6"] = r.q2 ? complex_json(*r.q2 / 6.0) : json();
    j["pairing_self"] = complex_json(r.pairing_self);
    j["tol"] = r.tol;
    return j.dump(2) + "\n";
}

std::string invariant_report_json(const FockState& phi, int k_max) {
    require(k_max >= 1, "k_max must be at least 1");
    json j;
    j["version"] = kToolVersion;
    j["d"] = phi.d;
    j["sector"] = to_string(parity_sector(phi));
    j["norm"] = norm(phi);
    j["pairing_self"] = complex_json(mukai_pairing(phi, phi));
    if (phi.d % 2 == 0) {
        const MomentMapMatrix mm = moment_map(phi);
        j["moment_rank"] = moment_rank(mm);
        j["moment_map"] = {{"A", matrix_json(mm.block_a())},
                           {"B", matrix_json(mm.block_b())},
                           {"beta", matrix_json(mm.block_beta())}};
        const auto qs = q_invariants(phi, std::max(2, k_max));
        json qarr = json::array();
        for (int k = 1; k <= k_max; ++k) qarr.push_back(complex_json(qs[static_cast<std::size_t>(k - 1)]));
        j["q"] = qarr;
        j["q2_over_6"] = complex_json(qs[1] / 6.0);
    } else {
        // Odd d: the moment map is not defined here; report the vector
        // covariant instead.
        const CliffordVector v = vector_covariant(phi);
        j["vector_covariant"] = {{"lower", vector_json(v.u)}, {"upper", vector_json(v.v)}};
        j["vector_form_self"] = complex_json(form(v, v));
    }
    return j.dump(2) + "\n";
}

std::string pairing_report_json(const FockState& a, const FockState& b) {
    json j;
    j["version"] = kToolVersion;
    j["d"] = a.d;
    j["pairing"] = complex_json(mukai_pairing(a, b));
    return j.dump(2) + "\n";
}

}  // namespace fockspin::io
