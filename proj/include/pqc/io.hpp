#pragma once

// Interchange formats: function-spec JSON, CSV series, matrix exports and the
// provenance stamp carried by every output file.
//
// Complex numbers are always [re, im] pairs.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "pqc/function_space.hpp"
#include "pqc/operators.hpp"
#include "pqc/seminorms.hpp"
#include "pqc/spectral.hpp"

namespace pqc {

using json = nlohmann::json;

/// Malformed input (bad JSON, unknown builtin, wrong sizes).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string tool_version();

std::uint64_t fnv1a(std::string_view bytes);
/// 16 hex digits of FNV-1a over the compact dump of `config`.
std::string config_hash(const json& config);

struct Stamp {
    std::int64_t p = 0;
    int level = 0;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::string version = tool_version();

    json to_json() const;
    /// "# pqc <version> p=.. level=.. seed=.. config=.." for CSV headers.
    std::string comment_line() const;
};

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

/// A parsed function: values plus a spectrum that is exact when the input was.
struct FunctionData {
    LocallyConstantFn values;
    FourierSpectrum spectrum;
    std::string description;
};

/// Parses {"p", "level", "repr": "values"|"fourier", ...} or {"builtin": kind, "params": {...}}.
/// p and level fall back to the given defaults when absent.
FunctionData parse_function_spec(const json& spec, std::optional<std::int64_t> default_p = std::nullopt,
                                 std::optional<int> default_level = std::nullopt);

/// Accepts inline JSON, "builtin:<kind>[:key=value,...]" or a path to a JSON file.
FunctionData load_function_spec(std::string_view source, std::optional<std::int64_t> default_p = std::nullopt,
                                std::optional<int> default_level = std::nullopt);

json function_to_json(const LocallyConstantFn& f);
json spectrum_to_json(const FourierSpectrum& s, double tol = 0.0);

void write_values_csv(std::ostream& os, const LocallyConstantFn& f);
void write_spectrum_csv(std::ostream& os, const FourierSpectrum& s);
void write_singular_csv(std::ostream& os, const SingularSpectrum& s);

/// Sparse triplets {p, N, order, entries: [[row, col, re, im], ...]} of entries with |z| > tol.
json matrix_to_json(const DerivativeOperator& d, double tol = 0.0);

/// Little-endian u64 rows, u64 cols, then column-major f64 (re, im) pairs.
void write_matrix_binary(std::ostream& os, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_binary(std::istream& is);

json seminorm_report_to_json(const SeminormReport& r);

/// Whole-file helpers that throw IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pqc
