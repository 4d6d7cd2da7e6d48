#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqc/exact_rank.hpp"
#include "pqc/io.hpp"
#include "pqc/seminorms.hpp"
#include "pqc/spectral.hpp"
#include "pqc/verify.hpp"

namespace py = pybind11;
using namespace pqc;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

int level_of(std::size_t size, const Prime& p) {
    int level = 0;
    std::int64_t n = 1;
    while (n < static_cast<std::int64_t>(size)) {
        n *= p.value();
        ++level;
    }
    if (n != static_cast<std::int64_t>(size)) throw std::invalid_argument("length is not a power of p");
    return level;
}

std::vector<Complex> to_vector(const ComplexArray& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
    return {a.data(), a.data() + a.size()};
}

ComplexArray to_array(std::span<const Complex> v) {
    ComplexArray out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

LocallyConstantFn values_fn(const ComplexArray& values, std::int64_t p) {
    const Prime prime(p);
    auto v = to_vector(values);
    const int level = level_of(v.size(), prime);
    return LocallyConstantFn(prime, level, std::move(v));
}

FourierSpectrum spectrum_of(const ComplexArray& bins, std::int64_t p, bool exact) {
    const Prime prime(p);
    auto v = to_vector(bins);
    const int level = level_of(v.size(), prime);
    return FourierSpectrum(prime, level, std::move(v), exact);
}

py::array_t<Complex> dense(const Eigen::MatrixXcd& m) {
    py::array_t<Complex> out({m.rows(), m.cols()});
    auto r = out.mutable_unchecked<2>();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return out;
}

ExperimentConfig config_from_json(const std::string& text) {
    ExperimentConfig c;
    if (text.empty()) return c;
    const json j = json::parse(text);
    if (j.contains("primes")) {
        c.primes = j.at("primes").get<std::vector<std::int64_t>>();
        c.max_level.clear();
        for (auto p : c.primes) c.max_level[p] = ExperimentConfig{}.level_for(p);
    }
    if (j.contains("max_level"))
        for (const auto& [k, v] : j.at("max_level").items()) c.max_level[std::stoll(k)] = v.get<int>();
    c.ensemble = j.value("ensemble", c.ensemble);
    c.stability_ensemble = j.value("stability_ensemble", c.stability_ensemble);
    c.stability_dimension_cap = j.value("stability_dimension_cap", c.stability_dimension_cap);
    c.seed = j.value("seed", c.seed);
    c.q_list = j.value("q_list", c.q_list);
    c.gammas = j.value("gammas", c.gammas);
    c.log_norm_levels = j.value("log_norm_levels", c.log_norm_levels);
    c.threads = j.value("threads", c.threads);
    c.tolerance_overrides = j.value("tolerance_overrides", c.tolerance_overrides);
    return c;
}

}  // namespace

PYBIND11_MODULE(_pqc, m) {
    m.doc() = "p-adic quantum derivative core";
    m.attr("__version__") = tool_version();

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

    m.def("legendre", [](std::int64_t t, std::int64_t p) { return to_int(legendre_symbol(t, Prime(p))); });
    m.def("sgn", [](const std::string& alpha, std::int64_t p) { return to_int(PruferElement::parse(alpha, Prime(p)).sign()); });
    m.def("norm", [](const std::string& alpha, std::int64_t p) { return PruferElement::parse(alpha, Prime(p)).norm(); });
    m.def("dual", [](std::int64_t p, int level) {
        std::vector<std::string> out;
        for (const auto& a : enumerate_dual(Prime(p), level)) out.push_back(a.to_string());
        return out;
    }, "Dual elements of norm <= p^level in bin order.");

    m.def("fourier_forward", [](const ComplexArray& values, std::int64_t p) {
        return to_array(fourier_forward(values_fn(values, p)).bins());
    });
    m.def("fourier_inverse", [](const ComplexArray& bins, std::int64_t p) {
        return to_array(fourier_inverse(spectrum_of(bins, p, false)).values());
    });

    m.def("derivative_matrix", [](const ComplexArray& bins, std::int64_t p, int N) {
        return dense(derivative_matrix(promote(spectrum_of(bins, p, false), N), N).matrix());
    }, py::arg("bins"), py::arg("p"), py::arg("N"));
    m.def("singular_values", [](const ComplexArray& bins, std::int64_t p, int N) {
        const auto s = singular_values(derivative_matrix(promote(spectrum_of(bins, p, false), N), N));
        return std::vector<double>(s.values().begin(), s.values().end());
    }, py::arg("bins"), py::arg("p"), py::arg("N"));
    m.def("exact_rank", [](const ComplexArray& bins, std::int64_t p, int N) {
        return exact_rank(derivative_matrix(promote(spectrum_of(bins, p, true), N), N));
    }, py::arg("bins"), py::arg("p"), py::arg("N"), "Rank over Q(i) with the bins read as exact dyadic rationals.");
    m.def("operator_norm_matrix_free", [](const ComplexArray& values, std::int64_t p, int N, int iters, std::uint64_t seed) {
        const auto r = operator_norm_power_iteration(as_linear_map(MatrixFreeDerivative(promote(values_fn(values, p), N), N)),
                                                     iters, seed);
        return py::make_tuple(r.sigma, r.converged);
    }, py::arg("values"), py::arg("p"), py::arg("N"), py::arg("iters") = 20000, py::arg("seed") = 42);

    m.def("sobolev_half_norm", [](const ComplexArray& values, std::int64_t p) { return sobolev_half_norm(values_fn(values, p)); });
    m.def("bmo_seminorm", [](const ComplexArray& values, std::int64_t p) { return bmo_seminorm(values_fn(values, p)); });
    m.def("bmo_oscillation_sequence", [](const ComplexArray& values, std::int64_t p) {
        return bmo_oscillation_sequence(values_fn(values, p));
    });
    m.def("besov_seminorm", [](const ComplexArray& values, std::int64_t p, double q, double r, double s) {
        return besov_seminorm_discrete(values_fn(values, p), q, r, s);
    }, py::arg("values"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"));

    m.def("load_function", [](const std::string& source, std::optional<std::int64_t> p, std::optional<int> level) {
        const auto d = load_function_spec(source, p, level);
        return py::make_tuple(d.values.prime().value(), d.values.level(), to_array(d.values.values()),
                              to_array(d.spectrum.bins()), d.description);
    }, py::arg("source"), py::arg("p") = py::none(), py::arg("level") = py::none());

    m.def("check_names", &check_names);
    m.def("run_checks_json", [](const std::vector<std::string>& names, const std::string& config_json) {
        const auto config = config_from_json(config_json);
        std::vector<VerificationReport> reports;
        {
            py::gil_scoped_release release;
            for (const auto& n : names) reports.push_back(run_check(n, config));
        }
        return to_json(reports, config).dump();
    }, py::arg("names"), py::arg("config_json") = "");
}
