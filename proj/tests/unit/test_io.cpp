#include <gtest/gtest.h>

#include <sstream>

#include "pqc/io.hpp"

using namespace pqc;

TEST(FunctionSpec, ValuesRoundTripIsBitExact) {
    const auto f = builtin::random_values(Prime(3), 2, 5);
    const auto back = parse_function_spec(json::parse(function_to_json(f).dump()));
    ASSERT_EQ(back.values.size(), f.size());
    for (std::int64_t j = 0; j < f.size(); ++j) EXPECT_EQ(back.values[j], f[j]);
}

TEST(FunctionSpec, FourierRoundTripStaysExact) {
    const std::pair<PruferElement, Complex> terms[] = {{PruferElement::reduce(2, 2, Prime(3)), Complex(0.5, -1.0)},
                                                        {PruferElement::reduce(1, 1, Prime(3)), Complex(3.0, 0.0)}};
    const auto s = FourierSpectrum::from_terms(Prime(3), 2, terms);
    const auto back = parse_function_spec(json::parse(spectrum_to_json(s).dump()));
    EXPECT_TRUE(back.spectrum.exact());
    for (std::int64_t t = 0; t < s.size(); ++t) EXPECT_EQ(back.spectrum.at_bin(t), s.at_bin(t));
}

TEST(FunctionSpec, Builtins) {
    const auto chi = load_function_spec("builtin:character:a=1/3", 3, 1);
    EXPECT_EQ(chi.spectrum.at_bin(1), Complex(1.0, 0.0));
    EXPECT_TRUE(chi.spectrum.exact());

    const auto c = load_function_spec(R"({"builtin": "constant", "p": 5, "level": 2, "params": {"c": [1, 2]}})");
    EXPECT_EQ(c.values.size(), 25);
    EXPECT_EQ(c.values[7], Complex(1.0, 2.0));

    const auto ln = load_function_spec("builtin:log_norm:zero_coset=mean", 3, 2);
    EXPECT_DOUBLE_EQ(ln.values[0].real(), -2.5);
    EXPECT_DOUBLE_EQ(ln.values[3].real(), -1.0);

    const auto a = load_function_spec("builtin:random_spectrum:seed=7,gamma=1", 3, 3);
    const auto b = load_function_spec("builtin:random_spectrum:seed=7,gamma=1", 3, 3);
    for (std::int64_t t = 0; t < a.spectrum.size(); ++t) EXPECT_EQ(a.spectrum.at_bin(t), b.spectrum.at_bin(t));
}

TEST(FunctionSpec, Errors) {
    EXPECT_THROW(load_function_spec("builtin:nope", 3, 1), SpecError);
    EXPECT_THROW(load_function_spec("builtin:character:a=1/9", 3, 1), SpecError);
    EXPECT_THROW(load_function_spec(R"({"p": 3, "values": [1, 2]})"), SpecError);
    EXPECT_THROW(load_function_spec(R"({"p": 4, "values": [1]})"), SpecError);
    EXPECT_THROW(load_function_spec(R"({"p": 3, "level": 1, "fourier": [{"a": "1/3", "c": 1}, {"a": "1/3", "c": 2}]})"),
                 SpecError);
    EXPECT_THROW(load_function_spec(R"({"p": 3, "values": ["x"]})"), SpecError);
    EXPECT_THROW(load_function_spec("{not json"), SpecError);
    EXPECT_THROW(load_function_spec("/nonexistent/spec.json"), IoError);
}

TEST(Complex, PairsOnly) {
    EXPECT_EQ(complex_from_json(json::parse("[1.5, -2]")), Complex(1.5, -2.0));
    EXPECT_EQ(complex_from_json(json::parse("3")), Complex(3.0, 0.0));
    EXPECT_THROW(complex_from_json(json::parse("\"1+2i\"")), SpecError);
    EXPECT_EQ(complex_to_json(Complex(1, 2)).dump(), "[1.0,2.0]");
}

TEST(Matrix, BinaryRoundTrip) {
    const auto d = derivative_matrix(fourier_forward(builtin::random_values(Prime(3), 2, 9)), 2);
    std::stringstream buffer;
    write_matrix_binary(buffer, d.matrix());
    EXPECT_EQ(buffer.str().size(), 16u + 9u * 9u * 16u);
    const auto back = read_matrix_binary(buffer);
    EXPECT_EQ(back, d.matrix());
}

TEST(Matrix, SparseExport) {
    const auto chi = load_function_spec("builtin:character:a=1/3", 3, 1);
    const json m = matrix_to_json(derivative_matrix(chi.spectrum, 1));
    EXPECT_EQ(m.at("N"), 1);
    EXPECT_EQ(m.at("order"), "dual-enumeration");
    EXPECT_EQ(m.at("entries").size(), 3u);

    const auto c = load_function_spec("builtin:constant:c=4", 3, 2);
    EXPECT_TRUE(matrix_to_json(derivative_matrix(c.spectrum, 2)).at("entries").empty());
}

TEST(Stamp, CarriesProvenance) {
    Stamp s;
    s.p = 5;
    s.level = 2;
    s.seed = 11;
    s.config_hash = config_hash(json{{"k", 1}});
    EXPECT_EQ(s.config_hash.size(), 16u);
    EXPECT_EQ(s.comment_line(), "# pqc " + tool_version() + " p=5 level=2 seed=11 config=" + s.config_hash);
    EXPECT_EQ(s.to_json().at("tool_version"), tool_version());
    EXPECT_NE(config_hash(json{{"k", 1}}), config_hash(json{{"k", 2}}));
}

TEST(Csv, Headers) {
    std::ostringstream a, b;
    write_values_csv(a, builtin::constant(Prime(3), 1, 1.0));
    write_spectrum_csv(b, FourierSpectrum::zero(Prime(3), 1));
    EXPECT_EQ(a.str().substr(0, 12), "coset,re,im\n");
    EXPECT_EQ(b.str().substr(0, 21), "bin,alpha,norm,re,im\n");
}

TEST(Seminorms, InfinityBecomesNull) {
    const auto r = seminorm_report(builtin::log_norm(Prime(3), 3));
    const json j = seminorm_report_to_json(r);
    EXPECT_TRUE(j.contains("bmo"));
    EXPECT_GT(j.at("bmo").get<double>(), 0.0);
}
