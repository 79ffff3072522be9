// Command-line front end: run experiment configs, list the catalog, and
// export multiply-then-project matrices for a symbol or a measure.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 configuration error (bad JSON, unknown experiment, missing file).
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qfock/experiments.hpp"
#include "qfock/measure.hpp"
#include "qfock/symbols.hpp"
#include "qfock/toeplitz.hpp"

namespace {

int run_config(const std::string& path) {
    const qfock::RunConfig cfg = qfock::load_config_file(path);
    const int failed = qfock::run_experiment(cfg, &std::cout);
    return failed > 0 ? 1 : 0;
}

int export_toeplitz(const std::string& symbol_path, const std::string& measure_path,
                    double alpha, int N, int n_quad, std::string out_dir) {
    if (symbol_path.empty() == measure_path.empty())
        throw qfock::ConfigError("toeplitz: pass exactly one of --symbol or --measure");
    if (alpha <= 0) throw qfock::ConfigError("toeplitz: alpha must be positive");
    if (N < 0 || N > 64) throw qfock::ConfigError("toeplitz: N must be in [0, 64]");

    if (const char* env = std::getenv("QFOCK_OUTPUT_DIR"); env && *env) out_dir = env;
    std::filesystem::create_directories(out_dir);

    qfock::QuatMatrix m;
    std::string source;
    if (!symbol_path.empty()) {
        const qfock::Symbol sym = qfock::load_symbol_file(symbol_path);
        m = qfock::toeplitz_matrix(sym.fn, alpha, N, qfock::ImaginaryUnit::i(), n_quad);
        source = "symbol:" + sym.name;
    } else {
        const qfock::DiscreteMeasure mu = qfock::load_measure_file(measure_path);
        m = qfock::toeplitz_matrix_measure(mu, alpha, N);
        source = "measure";
    }

    nlohmann::json doc;
    doc["source"] = source;
    doc["alpha"] = alpha;
    doc["N"] = N;
    doc["operator_norm"] = qfock::operator_norm(m);
    doc["singular_values"] = qfock::singular_values(m);
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) {
            const qfock::Quaternion& q = m.at(r, c);
            row.push_back({q.x0, q.x1, q.x2, q.x3});
        }
        rows.push_back(row);
    }
    doc["entries"] = rows;

    const std::string json_path = out_dir + "/toeplitz-matrix.json";
    {
        std::ofstream out(json_path);
        if (!out) throw qfock::ConfigError("cannot write " + json_path);
        out << doc.dump(2) << "\n";
    }

    // Kernel quadratic form along the diagonal ray of the trusted window.
    const std::string csv_path = out_dir + "/toeplitz-berezin.csv";
    {
        std::ofstream out(csv_path);
        if (!out) throw qfock::ConfigError("cannot write " + csv_path);
        out << "t,value-1,value-i,value-j,value-k\n";
        const double trust = 0.6 * std::sqrt(std::max(1, N) / alpha);
        for (int s = 0; s <= 8; ++s) {
            const double t = trust * s / 8.0;
            const qfock::Quaternion z = qfock::from_slice(
                t / std::sqrt(2.0), t / std::sqrt(2.0), qfock::ImaginaryUnit::i());
            const qfock::Quaternion v = qfock::berezin_symbol(m, alpha, z);
            out << qfock::format_double(t) << ',' << qfock::format_double(v.x0) << ','
                << qfock::format_double(v.x1) << ',' << qfock::format_double(v.x2)
                << ',' << qfock::format_double(v.x3) << "\n";
        }
    }

    std::cout << source << ": N=" << N << " operator norm "
              << qfock::format_double(qfock::operator_norm(m)) << "\n"
              << "wrote " << json_path << " and " << csv_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slice-function Fock-space experiment runner"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run = app.add_subcommand("run", "run one experiment config");
    run->add_option("config", config_path, "path to a config JSON file")->required();

    bool as_json = false;
    CLI::App* list = app.add_subcommand("list", "list available experiments");
    list->add_flag("--json", as_json, "machine-readable listing");

    std::string symbol_path, measure_path, out_dir = "out";
    double alpha = 1.0;
    int N = 12, n_quad = 64;
    CLI::App* toep = app.add_subcommand(
        "toeplitz", "export the matrix of a symbol or a discrete measure");
    toep->add_option("--symbol", symbol_path, "function-symbol JSON file");
    toep->add_option("--measure", measure_path, "measure JSON file");
    toep->add_option("--alpha", alpha, "Gaussian weight parameter");
    toep->add_option("--N", N, "largest basis degree");
    toep->add_option("--n-quad", n_quad, "quadrature nodes per axis");
    toep->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return run_config(config_path);
        if (list->parsed()) {
            std::cout << qfock::catalog_listing(as_json);
            return 0;
        }
        return export_toeplitz(symbol_path, measure_path, alpha, N, n_quad, out_dir);
    } catch (const qfock::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
