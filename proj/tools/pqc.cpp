#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqc/exact_rank.hpp"
#include "pqc/io.hpp"
#include "pqc/random.hpp"
#include "pqc/seminorms.hpp"
#include "pqc/spectral.hpp"
#include "pqc/verify.hpp"

namespace fs = std::filesystem;
using namespace pqc;

namespace {

enum Exit { ok = 0, hard_failure = 1, usage = 2, io = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::int64_t p = 3;
    int level = 1;
    std::string function;
    std::vector<double> q{1.0, 2.0, 4.0};
    std::uint64_t seed = 42;
    std::string out;
    std::string format;
    bool matrix_free = false;
    bool binary = false;
    std::vector<std::string> tol_overrides;
};

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--tol-override expects key=value, got '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string value = item.substr(eq + 1);
            out[item.substr(0, eq)] = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw UsageError("--tol-override value is not a number: '" + item + "'");
        }
    }
    return out;
}

json cli_config_json(const std::string& subcommand, const Options& o) {
    return {{"subcommand", subcommand}, {"p", o.p}, {"level", o.level}, {"function", o.function},
            {"q", o.q}, {"seed", o.seed}, {"matrix_free", o.matrix_free}, {"tol_overrides", parse_overrides(o.tol_overrides)}};
}

Stamp make_stamp(const std::string& subcommand, const Options& o) {
    Stamp s;
    s.p = o.p;
    s.level = o.level;
    s.seed = o.seed;
    s.config_hash = config_hash(cli_config_json(subcommand, o));
    return s;
}

void emit(const Options& o, const std::string& file_name, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (ec) throw IoError("cannot create directory '" + o.out + "': " + ec.message());
    write_text_file((fs::path(o.out) / file_name).string(), text);
}

std::string format_or(const Options& o, const std::string& fallback) { return o.format.empty() ? fallback : o.format; }

int cmd_sgn(const Options& o, const std::string& alpha, bool all) {
    const Prime p(o.p);
    std::vector<PruferElement> rows;
    if (all) {
        rows = enumerate_dual(p, o.level);
    } else if (!alpha.empty()) {
        rows.push_back(PruferElement::parse(alpha, p));
    } else {
        throw UsageError("sgn needs --alpha or --all");
    }
    const std::string format = format_or(o, "csv");
    const Stamp stamp = make_stamp("sgn", o);
    std::ostringstream os;
    if (format == "json") {
        json table = json::array();
        for (const auto& a : rows) table.push_back({{"alpha", a.to_string()}, {"norm", a.norm()}, {"sgn", to_int(a.sign())}});
        os << json{{"stamp", stamp.to_json()}, {"rows", table}}.dump(2) << "\n";
    } else if (format == "md") {
        os << "<!-- " << stamp.comment_line().substr(2) << " -->\n\n| alpha | norm | sgn |\n|---|---|---|\n";
        for (const auto& a : rows) os << "| " << a.to_string() << " | " << a.norm() << " | " << to_int(a.sign()) << " |\n";
    } else {
        os << stamp.comment_line() << "\nalpha,norm,sgn\n";
        for (const auto& a : rows) os << a.to_string() << "," << a.norm() << "," << to_int(a.sign()) << "\n";
    }
    emit(o, "sgn." + format, os.str());
    return ok;
}

json schatten_json(const SingularSpectrum& sv, const std::vector<double>& qs) {
    json out = json::array();
    for (double q : qs) out.push_back({{"q", q}, {"norm", sv.schatten_norm(q)}});
    return out;
}

int cmd_derivative(const Options& o) {
    if (o.function.empty()) throw UsageError("derivative needs --function");
    const auto data = load_function_spec(o.function, o.p, o.level);
    const Prime p = data.values.prime();
    const int N = std::max(o.level, data.values.level());
    Options stamped = o;
    stamped.p = p.value();
    stamped.level = N;
    const Stamp stamp = make_stamp("derivative", stamped);
    const std::int64_t dim = p.pow(N);
    const std::string format = format_or(o, "json");
    const auto report = seminorm_report(promote(data.values, N));

    json doc{{"stamp", stamp.to_json()}, {"function", data.description}, {"dimension", dim},
             {"seminorms", seminorm_report_to_json(report)}};
    std::optional<SingularSpectrum> sv;
    std::optional<DerivativeOperator> d;
    if (dim > dense_dimension_cap) {
        if (!o.matrix_free)
            throw UsageError("p^N = " + std::to_string(dim) + " exceeds the dense cap " +
                             std::to_string(dense_dimension_cap) + "; pass --matrix-free");
        const auto est = operator_norm_power_iteration(as_linear_map(MatrixFreeDerivative(promote(data.values, N), N)),
                                                       20000, o.seed);
        doc["mode"] = "matrix-free";
        doc["operator_norm"] = est.sigma;
        doc["power_iteration"] = {{"iterations", est.iterations}, {"converged", est.converged}};
    } else {
        d.emplace(promote(data.spectrum, N), N);
        sv = singular_values(*d);
        doc["mode"] = "dense";
        doc["rank"] = rank(*d);
        doc["rank_exact"] = d->exact_entries();
        doc["operator_norm"] = sv->largest();
        doc["hilbert_schmidt_squared"] = sv->sum_of_squares();
        doc["schatten"] = schatten_json(*sv, o.q);
        doc["singular_values"] = std::vector<double>(sv->values().begin(), sv->values().end());
    }

    if (format == "json") {
        emit(o, "derivative.json", doc.dump(2) + "\n");
        if (d && !o.out.empty()) {
            json m = matrix_to_json(*d);
            m["stamp"] = stamp.to_json();
            emit(o, "matrix.json", m.dump() + "\n");
            if (o.binary) {
                const auto path = (fs::path(o.out) / "matrix.bin").string();
                std::ofstream os(path, std::ios::binary);
                write_matrix_binary(os, d->matrix());
                if (!os) throw IoError("cannot write '" + path + "'");
            }
        }
    } else if (format == "csv") {
        std::ostringstream spec, sing;
        spec << stamp.comment_line() << "\n";
        write_spectrum_csv(spec, promote(data.spectrum, N));
        if (o.out.empty()) {
            std::cout << spec.str();
        } else {
            emit(o, "spectrum.csv", spec.str());
        }
        if (sv) {
            sing << stamp.comment_line() << "\n";
            write_singular_csv(sing, *sv);
            emit(o, "singular.csv", sing.str());
        }
    } else {
        std::ostringstream md;
        md << "# d(f)\n\n<!-- " << stamp.comment_line().substr(2) << " -->\n\nfunction: " << data.description
           << "\n\n| quantity | value |\n|---|---|\n| dimension | " << dim << " |\n";
        if (sv) {
            md << "| rank | " << doc["rank"].get<std::int64_t>() << (d->exact_entries() ? " (exact)" : "") << " |\n"
               << "| operator norm | " << sv->largest() << " |\n";
            for (double q : o.q) md << "| Schatten q=" << q << " | " << sv->schatten_norm(q) << " |\n";
        } else {
            md << "| operator norm (power iteration) | " << doc["operator_norm"].get<double>() << " |\n";
        }
        md << "| H^{1/2} seminorm | " << report.sobolev_half << " |\n| BMO seminorm | " << report.bmo << " |\n";
        emit(o, "derivative.md", md.str());
    }
    return ok;
}

int cmd_verify(const Options& o, const std::vector<std::string>& checks, std::optional<int> max_level,
               std::optional<int> ensemble, bool p_given) {
    ExperimentConfig config;
    config.seed = o.seed;
    config.q_list = o.q;
    config.tolerance_overrides = parse_overrides(o.tol_overrides);
    if (ensemble) {
        if (*ensemble < 1) throw UsageError("--ensemble must be positive");
        config.ensemble = *ensemble;
    }
    if (p_given) {
        const Prime p(o.p);
        config.primes = {p.value()};
        config.max_level = {{p.value(), max_level.value_or(config.level_for(p.value()))}};
    } else if (max_level) {
        for (auto& [p, level] : config.max_level) level = *max_level;
    }
    for (const auto& [p, level] : config.max_level)
        if (level < 1 || Prime(p).pow(level) > dense_dimension_cap) throw UsageError("--max-level out of range");

    std::vector<std::string> names;
    for (const auto& c : checks) {
        if (c == "all") {
            names = check_names();
            break;
        }
        if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
            throw UsageError("unknown check '" + c + "'");
        names.push_back(c);
    }
    if (names.empty()) names = check_names();

    std::vector<VerificationReport> reports;
    for (const auto& n : names) reports.push_back(run_check(n, config));

    const std::string format = format_or(o, "both");
    const std::string md = to_markdown(reports, config);
    const std::string js = to_json(reports, config).dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << (format == "json" ? js : md);
    } else {
        if (format == "json" || format == "both") emit(o, "report.json", js);
        if (format == "md" || format == "both") emit(o, "report.md", md);
        std::cout << md;
    }
    const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.hard_failed(); });
    return failed ? hard_failure : ok;
}

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        }
    } catch (const std::exception&) {
        throw UsageError("--levels expects 'a..b' or a comma list, got '" + text + "'");
    }
    if (out.empty()) throw UsageError("--levels is empty");
    return out;
}

int cmd_plotdata(const Options& o, const std::string& kind, const std::string& levels_text, int ensemble) {
    const auto levels = parse_levels(levels_text);
    const Stamp stamp = make_stamp("plotdata-" + kind, o);
    std::ostringstream os;
    os << stamp.comment_line() << "\n";
    const Prime p(o.p);
    if (kind == "decay") {
        if (o.function.empty()) throw UsageError("plotdata decay needs --function");
        os << "level,index,sigma\n";
        for (int N : levels) {
            const auto data = load_function_spec(o.function, o.p, N);
            const int L = std::max(N, data.values.level());
            if (p.pow(L) > dense_dimension_cap) throw UsageError("level " + std::to_string(L) + " exceeds the dense cap");
            const auto sv = singular_values(derivative_matrix(promote(data.spectrum, L), L));
            for (std::int64_t i = 0; i < sv.size(); ++i) os << L << "," << i << "," << sv.values()[i] << "\n";
        }
    } else if (kind == "bmo") {
        if (o.function.empty()) throw UsageError("plotdata bmo needs --function");
        os << "level,n,M_n\n";
        for (int N : levels) {
            const auto data = load_function_spec(o.function, o.p, N);
            const auto seq = bmo_oscillation_sequence(promote(data.values, std::max(N, data.values.level())));
            for (std::size_t n = 0; n < seq.size(); ++n) os << N << "," << n << "," << seq[n] << "\n";
        }
    } else if (kind == "ratio") {
        if (ensemble < 1) throw UsageError("--ensemble must be positive");
        ExperimentConfig gammas;
        os << "level,trial,gamma,q,schatten,besov,ratio,hs_over_sqrt2_sobolev\n";
        for (int N : levels) {
            if (p.pow(N) > dense_dimension_cap) throw UsageError("level " + std::to_string(N) + " exceeds the dense cap");
            for (int t = 0; t < ensemble; ++t) {
                const double gamma = gammas.gammas[static_cast<std::size_t>(t) % gammas.gammas.size()];
                const auto s = builtin::random_spectrum(p, N, derive_seed(o.seed, {static_cast<std::uint64_t>(N),
                                                                                    static_cast<std::uint64_t>(t)}), gamma);
                const auto f = fourier_inverse(s);
                const auto sv = singular_values(derivative_matrix(s, N));
                const double hs = sv.schatten_norm(2.0) / (std::sqrt(2.0) * sobolev_half_norm(s));
                for (double q : o.q) {
                    const double sq = sv.schatten_norm(q), b = besov_seminorm_discrete(f, q, q, 1.0 / q);
                    os << N << "," << t << "," << gamma << "," << q << "," << sq << "," << b << "," << sq / b << ","
                       << hs << "\n";
                }
            }
        }
    } else {
        throw UsageError("unknown plotdata kind '" + kind + "' (decay, bmo, ratio)");
    }
    emit(o, "plot_" + kind + ".csv", os.str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic quantum derivative toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());
    Options o;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "odd prime");
        sub->add_option("--level", o.level, "truncation level N");
        sub->add_option("--seed", o.seed, "base seed");
        sub->add_option("--out", o.out, "output directory");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "md", "both"}));
    };

    std::string alpha;
    bool all = false;
    auto* sgn = app.add_subcommand("sgn", "sign character on the dual group");
    common(sgn);
    sgn->add_option("--alpha", alpha, "element m/p^n");
    sgn->add_flag("--all", all, "every element of norm <= p^level");

    auto* der = app.add_subcommand("derivative", "operator, spectrum and seminorms of d(f)");
    common(der);
    der->add_option("--function", o.function, "path, inline JSON or builtin:kind[:k=v,...]");
    der->add_option("--q", o.q, "Schatten exponents")->delimiter(',');
    der->add_flag("--matrix-free", o.matrix_free, "allow levels beyond the dense cap");
    der->add_flag("--binary", o.binary, "also write matrix.bin next to matrix.json");

    std::vector<std::string> checks;
    std::optional<int> max_level, ensemble;
    auto* ver = app.add_subcommand("verify", "run verification checks");
    common(ver);
    ver->add_option("checks", checks, "check names or 'all'");
    ver->add_option("--max-level", max_level, "level for every prime");
    ver->add_option("--ensemble", ensemble, "functions per cell");
    ver->add_option("--q", o.q, "Schatten exponents")->delimiter(',');
    ver->add_option("--tol-override", o.tol_overrides, "key=value")->delimiter(',');

    std::string kind = "decay", levels = "1..4";
    int plot_ensemble = 20;
    auto* plot = app.add_subcommand("plotdata", "CSV series for plotting");
    common(plot);
    plot->add_option("kind", kind, "decay, bmo or ratio")->required();
    plot->add_option("--function", o.function, "path, inline JSON or builtin:kind[:k=v,...]");
    plot->add_option("--levels", levels, "a..b or comma list");
    plot->add_option("--q", o.q, "Schatten exponents")->delimiter(',');
    plot->add_option("--ensemble", plot_ensemble, "functions per level for ratio");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*sgn) return cmd_sgn(o, alpha, all);
        if (*der) return cmd_derivative(o);
        if (*ver) return cmd_verify(o, checks, max_level, ensemble, ver->count("--p") > 0);
        if (*plot) return cmd_plotdata(o, kind, levels, plot_ensemble);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return io;
    } catch (const SpecError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    }
    return usage;
}
