#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfock/experiments.hpp"
#include "qfock/quaternion.hpp"
#include "qfock/symbols.hpp"

using namespace qfock;

TEST_CASE("builtin bank: ten bounded symbols with honest sup norms") {
    const auto bounded = bounded_builtin_names();
    CHECK(bounded.size() == 10);

    Rng rng(2);
    for (const auto& name : bounded) {
        const Symbol s = builtin_symbol(name);
        CHECK(s.bounded);
        CHECK(s.sup_norm > 0.0);
        CHECK(s.name == name);
        for (int t = 0; t < 50; ++t) {
            const Quaternion q = rng.quaternion(3.0);
            CHECK(s.fn(q).norm() <= s.sup_norm * (1.0 + 1e-12));
        }
    }

    // The full bank adds the unbounded growth controls.
    const auto all = builtin_names();
    CHECK(all.size() > bounded.size());
    for (const auto& name : {"re", "abs2", "conj"}) {
        const Symbol s = builtin_symbol(name);
        CHECK_FALSE(s.bounded);
    }

    CHECK_THROWS(builtin_symbol("no-such-symbol"));
}

TEST_CASE("symbol json: polynomial kind evaluates the coefficients") {
    const Symbol s = parse_symbol_json(
        R"({"kind": "poly", "coeffs": [[1,0,0,0],[0,0,1,0]]})");
    // f(q) = 1 + q j.
    const Quaternion q{0.5, 0.25, 0, 0};
    const Quaternion want = Quaternion::one() + q * Quaternion::j();
    CHECK(approx_equal(s.fn(q), want, 1e-13));
    CHECK_FALSE(s.bounded);

    CHECK_THROWS_AS(parse_symbol_json(R"({"kind": "poly", "coeffs": [[1,0,0]]})"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_symbol_json(R"({"kind": "poly"})"), std::runtime_error);
}

TEST_CASE("symbol json: gaussian-modulated kind with default coefficient") {
    const Symbol s =
        parse_symbol_json(R"({"kind": "gauss_mod", "x": 0.5, "k": 2})");
    const Quaternion q{0.3, 0.4, 0, 0};
    const Quaternion want = (q * q) * std::exp(-0.5 * q.norm_sq());
    CHECK(approx_equal(s.fn(q), want, 1e-13));
    CHECK(s.bounded);

    const Symbol sc = parse_symbol_json(
        R"({"kind": "gauss_mod", "x": 1.0, "k": 1, "coeff": [0,0,2,0]})");
    const Quaternion want2 = q * Quaternion{0, 0, 2, 0} * std::exp(-q.norm_sq());
    CHECK(approx_equal(sc.fn(q), want2, 1e-13));

    CHECK_THROWS_AS(parse_symbol_json(R"({"kind": "gauss_mod", "x": -1, "k": 0})"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_symbol_json(R"({"kind": "gauss_mod", "x": 0.5, "k": -2})"),
                    std::runtime_error);
}

TEST_CASE("symbol json: builtin kind, unknown kinds, and garbage") {
    const Symbol s = parse_symbol_json(R"({"kind": "builtin", "name": "gauss"})");
    CHECK(s.bounded);
    CHECK(s.fn(Quaternion{}).x0 == doctest::Approx(1.0));

    CHECK_THROWS_AS(parse_symbol_json(R"({"kind": "mystery"})"), std::runtime_error);
    CHECK_THROWS_AS(parse_symbol_json("["), std::runtime_error);
    CHECK_THROWS_AS(parse_symbol_json(R"({"kind": "builtin", "name": "nope"})"),
                    std::runtime_error);
}

TEST_CASE("symbol files load through the same parser") {
    const std::string path = "symbol_roundtrip_test.json";
    {
        std::ofstream out(path);
        out << R"({"kind": "gauss_mod", "x": 0.25, "k": 1})";
    }
    const Symbol s = load_symbol_file(path);
    const Quaternion q{1, 0, 0.5, 0};
    CHECK(approx_equal(s.fn(q), q * std::exp(-0.25 * q.norm_sq()), 1e-13));
    std::remove(path.c_str());

    CHECK_THROWS(load_symbol_file("definitely-missing-file.json"));
}

TEST_CASE("run configs parse defaults, params, and inputs") {
    const RunConfig cfg = parse_config_json(
        R"({"experiment": "berezin", "seed": 9,
            "params": {"alpha": 2.5}, "inputs": {"measure": "m.json"}})");
    CHECK(cfg.experiment == "berezin");
    CHECK(cfg.seed == 9);
    CHECK(cfg.output_dir == "out");
    CHECK(cfg.param("alpha", 1.0) == doctest::Approx(2.5));
    CHECK(cfg.param("missing", 7.0) == doctest::Approx(7.0));
    CHECK(cfg.input("measure") == "m.json");
    CHECK(cfg.input("symbol") == "");

    CHECK_THROWS_AS(parse_config_json(R"({"params": {}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"experiment": "x", "bogus_key": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"experiment": "x", "params": {"a": "b"}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_json("{"), ConfigError);
}

TEST_CASE("config files load and missing files are config errors") {
    const std::string path = "config_roundtrip_test.json";
    {
        std::ofstream out(path);
        out << R"({"experiment": "identity-suite"})";
    }
    const RunConfig cfg = load_config_file(path);
    CHECK(cfg.experiment == "identity-suite");
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_config_file("definitely-missing-config.json"), ConfigError);
}

TEST_CASE("unknown experiments raise a config error with a suggestion") {
    RunConfig cfg;
    cfg.experiment = "toeplits";
    cfg.output_dir = "unused";
    try {
        run_experiment(cfg);
        FAIL("expected a config error for the misspelled experiment");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("toeplitz") != std::string::npos);
    }
}

TEST_CASE("the catalog lists all experiments in both formats") {
    const std::vector<std::string> expected = {
        "identity-suite", "probe-projection", "schur",    "range-preimage",
        "carleson",       "vanishing-carleson", "berezin", "semigroup",
        "fixed-points",   "bmo",               "toeplitz", "toeplitz-adjoint",
        "bounded-compact"};

    const auto& catalog = experiment_catalog();
    CHECK(catalog.size() == expected.size());
    for (const auto& name : expected) {
        bool found = false;
        for (const auto& spec : catalog) {
            if (spec.name == name) {
                found = true;
                CHECK(!spec.summary.empty());
            }
        }
        CHECK(found);
    }

    const std::string text = catalog_listing(false);
    const std::string json = catalog_listing(true);
    for (const auto& name : expected) {
        CHECK(text.find(name) != std::string::npos);
        CHECK(json.find(name) != std::string::npos);
    }
}
