#pragma once
#include <string>

#include "fockspin/classify.hpp"
#include "fockspin/embed.hpp"
#include "fockspin/fock_state.hpp"
#include "fockspin/spin_action.hpp"

namespace fockspin::io {

inline constexpr const char* kToolVersion = "0.1.0";

// Reads a whole file; throws std::runtime_error when the file cannot be read
// (exit code 1 at the CLI, distinct from schema errors).
std::string read_file(const std::string& path);

// StateFile: {"d": int, "amplitudes": [{"modes": [...], "re": x, "im": y}]}
// with 1-based strictly ascending modes, each <= d; duplicate mode sets are
// rejected; an empty amplitude list is the zero state. The serializer adds
// "sector" and "norm" fields, which the parser ignores. All schema
// violations throw std::invalid_argument (exit code 2 at the CLI).
FockState parse_state(const std::string& text);
std::string serialize_state(const FockState& s);

// GeneratorFile: {"d": int, "A": d x d, "B": ..., "beta": ...} with complex
// entries as [re, im] pairs; B and beta antisymmetric within 1e-12.
SpinGenerator parse_generator(const std::string& text);
std::string serialize_generator(const SpinGenerator& g);

// QubitFile: {"qubits": 2|3, "amplitudes": [[re, im] x 4|8]} ordered by the
// binary value of the basis label, first qubit most significant.
struct QubitFile {
    int qubits = 0;
    TwoQubitState two;
    ThreeQubitState three;
};
QubitFile parse_qubit_file(const std::string& text);
std::string serialize_qubit_file(const QubitFile& q);

// Report renderers: stable key order, version field, complex as [re, im].
std::string classification_report_json(const ClassificationReport& r);
std::string invariant_report_json(const FockState& phi, int k_max);
std::string pairing_report_json(const FockState& a, const FockState& b);

}  // namespace fockspin::io
