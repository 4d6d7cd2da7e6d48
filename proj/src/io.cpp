#include "pqc/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace pqc {

namespace {

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

template <typename T>
void put_le(std::ostream& os, T value) {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& is) {
    unsigned char bytes[sizeof(T)];
    if (!is.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw IoError("truncated matrix dump");
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
    T value;
    std::memcpy(&value, bytes, sizeof(T));
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// "seed=3,gamma=1.5" -> {"seed": 3, "gamma": 1.5}; non-numeric values stay strings.
json parse_inline_params(std::string_view text) {
    json params = json::object();
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw SpecError("builtin parameter '" + std::string(item) + "' needs key=value");
        const std::string key(trim(item.substr(0, eq)));
        const std::string value(trim(item.substr(eq + 1)));
        const json number = json::parse(value, nullptr, false);
        params[key] = number.is_number() ? number : json(value);
    }
    return params;
}

template <typename T>
T get_param(const json& params, const char* key, T fallback) {
    if (!params.contains(key)) return fallback;
    try {
        return params.at(key).get<T>();
    } catch (const json::exception&) {
        throw SpecError(std::string("builtin parameter '") + key + "' has the wrong type");
    }
}

FunctionData builtin_function(const std::string& kind, const json& params, Prime p, int level) {
    using namespace builtin;
    if (kind == "character") {
        const auto a = PruferElement::parse(get_param<std::string>(params, "a", "0"), p);
        if (a.level() > level) throw SpecError("character frequency " + a.to_string() + " exceeds the level");
        const std::pair<PruferElement, Complex> term[] = {{a, 1.0}};
        return {character(a, level), FourierSpectrum::from_terms(p, level, term), "character " + a.to_string()};
    }
    if (kind == "constant") {
        const Complex c = params.contains("c") ? complex_from_json(params.at("c")) : Complex(1.0);
        const std::pair<PruferElement, Complex> term[] = {{PruferElement::zero(p), c}};
        return {constant(p, level, c), FourierSpectrum::from_terms(p, level, term), "constant"};
    }
    if (kind == "indicator") {
        const auto f = indicator(p, level, get_param<std::int64_t>(params, "coset", 0),
                                 get_param<int>(params, "coset_level", level));
        return {f, fourier_forward(f), "indicator"};
    }
    if (kind == "log_norm") {
        const std::string zc = get_param<std::string>(params, "zero_coset", "level");
        if (zc != "level" && zc != "mean") throw SpecError("zero_coset must be 'level' or 'mean'");
        const auto f = log_norm(p, level, zc == "mean" ? ZeroCoset::mean : ZeroCoset::level);
        return {f, fourier_forward(f), "log_norm"};
    }
    if (kind == "random_values") {
        const std::string dist = get_param<std::string>(params, "dist", "disk");
        static const std::map<std::string, ValueDistribution> names{
            {"disk", ValueDistribution::disk}, {"real", ValueDistribution::real}, {"gaussian", ValueDistribution::gaussian}};
        const auto it = names.find(dist);
        if (it == names.end()) throw SpecError("unknown distribution '" + dist + "'");
        const auto f = random_values(p, level, get_param<std::uint64_t>(params, "seed", 42), it->second);
        return {f, fourier_forward(f), "random_values"};
    }
    if (kind == "random_spectrum") {
        const auto s = random_spectrum(p, level, get_param<std::uint64_t>(params, "seed", 42),
                                       get_param<double>(params, "gamma", 0.0));
        return {fourier_inverse(s), s, "random_spectrum"};
    }
    throw SpecError("unknown builtin '" + kind + "'");
}

}  // namespace

std::string tool_version() { return PQC_VERSION; }

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash(const json& config) { return hex64(fnv1a(config.dump())); }

json Stamp::to_json() const {
    return {{"p", p}, {"level", level}, {"seed", seed}, {"config_hash", config_hash}, {"tool_version", version}};
}

std::string Stamp::comment_line() const {
    std::ostringstream os;
    os << "# pqc " << version << " p=" << p << " level=" << level << " seed=" << seed << " config=" << config_hash;
    return os.str();
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw SpecError("complex numbers are written [re, im], got " + j.dump());
}

FunctionData parse_function_spec(const json& spec, std::optional<std::int64_t> default_p,
                                 std::optional<int> default_level) {
    if (!spec.is_object()) throw SpecError("function spec must be a JSON object");
    try {
        const std::int64_t pv = spec.contains("p") ? spec.at("p").get<std::int64_t>()
                                                   : default_p.value_or(0);
        if (pv == 0) throw SpecError("function spec needs a prime p");
        const Prime p(pv);

        if (spec.contains("builtin")) {
            if (!spec.contains("level") && !default_level) throw SpecError("builtin function needs a level");
            const int level = spec.contains("level") ? spec.at("level").get<int>() : *default_level;
            const json params = spec.value("params", json::object());
            return builtin_function(spec.at("builtin").get<std::string>(), params, p, level);
        }

        std::string repr = spec.value("repr", "");
        if (repr.empty()) repr = spec.contains("fourier") ? "fourier" : "values";
        if (repr == "values") {
            const json& vals = spec.at("values");
            if (!vals.is_array()) throw SpecError("'values' must be an array");
            std::vector<Complex> values;
            for (const json& v : vals) values.push_back(complex_from_json(v));
            int level = 0;
            std::int64_t size = 1;
            while (size < static_cast<std::int64_t>(values.size())) {
                size *= pv;
                ++level;
            }
            if (size != static_cast<std::int64_t>(values.size()))
                throw SpecError("number of values is not a power of p");
            if (spec.contains("level") && spec.at("level").get<int>() != level)
                throw SpecError("number of values does not match the level");
            LocallyConstantFn f(p, level, std::move(values));
            return {f, fourier_forward(f), "values"};
        }
        if (repr == "fourier") {
            if (!spec.contains("level") && !default_level) throw SpecError("Fourier spec needs a level");
            const int level = spec.contains("level") ? spec.at("level").get<int>() : *default_level;
            std::vector<std::pair<PruferElement, Complex>> terms;
            for (const json& t : spec.at("fourier")) {
                const auto a = PruferElement::parse(t.at("a").get<std::string>(), p);
                if (a.level() > level) throw SpecError("frequency " + a.to_string() + " exceeds the level");
                for (const auto& [b, c] : terms)
                    if (b == a) throw SpecError("frequency " + a.to_string() + " listed twice");
                terms.emplace_back(a, complex_from_json(t.at("c")));
            }
            const auto s = FourierSpectrum::from_terms(p, level, terms);
            return {fourier_inverse(s), s, "fourier"};
        }
        throw SpecError("unknown repr '" + repr + "'");
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed function spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    } catch (const std::out_of_range& e) {
        throw SpecError(e.what());
    }
}

FunctionData load_function_spec(std::string_view source, std::optional<std::int64_t> default_p,
                                std::optional<int> default_level) {
    source = trim(source);
    if (source.starts_with("builtin:")) {
        std::string_view rest = source.substr(8);
        const auto colon = rest.find(':');
        json spec = {{"builtin", std::string(rest.substr(0, colon))}};
        spec["params"] = colon == std::string_view::npos ? json::object() : parse_inline_params(rest.substr(colon + 1));
        return parse_function_spec(spec, default_p, default_level);
    }
    const std::string text = source.starts_with("{") ? std::string(source) : read_text_file(std::string(source));
    const json spec = json::parse(text, nullptr, false);
    if (spec.is_discarded()) throw SpecError("function spec is not valid JSON");
    return parse_function_spec(spec, default_p, default_level);
}

json function_to_json(const LocallyConstantFn& f) {
    json values = json::array();
    for (Complex z : f.values()) values.push_back(complex_to_json(z));
    return {{"p", f.prime().value()}, {"level", f.level()}, {"repr", "values"}, {"values", values}};
}

json spectrum_to_json(const FourierSpectrum& s, double tol) {
    json terms = json::array();
    for (const auto& [a, c] : s.nonzero_terms(tol)) terms.push_back({{"a", a.to_string()}, {"c", complex_to_json(c)}});
    return {{"p", s.prime().value()}, {"level", s.level()}, {"repr", "fourier"}, {"fourier", terms}};
}

void write_values_csv(std::ostream& os, const LocallyConstantFn& f) {
    os << "coset,re,im\n" << std::setprecision(17);
    for (std::int64_t j = 0; j < f.size(); ++j) os << j << ',' << f[j].real() << ',' << f[j].imag() << '\n';
}

void write_spectrum_csv(std::ostream& os, const FourierSpectrum& s) {
    os << "bin,alpha,norm,re,im\n" << std::setprecision(17);
    const auto dual = enumerate_dual(s.prime(), s.level());
    for (std::int64_t t = 0; t < s.size(); ++t)
        os << t << ',' << dual[t].to_string() << ',' << dual[t].norm() << ',' << s.at_bin(t).real() << ','
           << s.at_bin(t).imag() << '\n';
}

void write_singular_csv(std::ostream& os, const SingularSpectrum& s) {
    os << "index,sigma\n" << std::setprecision(17);
    for (std::int64_t i = 0; i < s.size(); ++i) os << i << ',' << s.values()[i] << '\n';
}

json matrix_to_json(const DerivativeOperator& d, double tol) {
    json entries = json::array();
    const auto& m = d.matrix();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (std::abs(m(r, c)) > tol) entries.push_back({r, c, m(r, c).real(), m(r, c).imag()});
    return {{"p", d.prime().value()}, {"N", d.level()}, {"order", "dual-enumeration"}, {"entries", entries}};
}

void write_matrix_binary(std::ostream& os, const Eigen::MatrixXcd& m) {
    put_le<std::uint64_t>(os, static_cast<std::uint64_t>(m.rows()));
    put_le<std::uint64_t>(os, static_cast<std::uint64_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        put_le<double>(os, m.data()[i].real());
        put_le<double>(os, m.data()[i].imag());
    }
    if (!os) throw IoError("failed to write matrix dump");
}

Eigen::MatrixXcd read_matrix_binary(std::istream& is) {
    const auto rows = get_le<std::uint64_t>(is);
    const auto cols = get_le<std::uint64_t>(is);
    if (rows > (1u << 20) || cols > (1u << 20)) throw IoError("implausible matrix dimensions");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const double re = get_le<double>(is);
        const double im = get_le<double>(is);
        m.data()[i] = {re, im};
    }
    return m;
}

json seminorm_report_to_json(const SeminormReport& r) {
    json besov = json::array();
    const auto num = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
    for (const auto& b : r.besov)
        besov.push_back({{"q", num(b.params.q)}, {"r", num(b.params.r)}, {"s", b.params.s},
                         {"discrete", b.discrete}, {"integral", num(b.integral)}});
    return {{"sobolev_half", r.sobolev_half}, {"bmo", r.bmo}, {"vmo_sequence", r.vmo_sequence}, {"besov", besov}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace pqc
