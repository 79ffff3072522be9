#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int status = -1;
    std::string output;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class CliFixture {
public:
    CliFixture() {
        const char* bin = std::getenv("QFOCK_BIN");
        REQUIRE_MESSAGE(bin != nullptr, "QFOCK_BIN must point at the CLI binary");
        bin_ = bin;
        char tmpl[] = "/tmp/qfock_cli_test_XXXXXX";
        char* dir = mkdtemp(tmpl);
        REQUIRE(dir != nullptr);
        root_ = dir;
    }

    ~CliFixture() {
        std::error_code ec;
        fs::remove_all(root_, ec);
    }

    CmdResult run(const std::string& args, const std::string& env_prefix = "") {
        const fs::path outfile = root_ / ("cmd_" + std::to_string(counter_++) + ".txt");
        std::string cmd = env_prefix + " \"" + bin_ + "\" " + args + " > \"" +
                          outfile.string() + "\" 2>&1";
        const int rc = std::system(cmd.c_str());
        CmdResult res;
        res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        res.output = slurp(outfile);
        return res;
    }

    fs::path write(const std::string& name, const std::string& content) {
        const fs::path p = root_ / name;
        std::ofstream out(p);
        out << content;
        return p;
    }

    fs::path dir(const std::string& name) {
        const fs::path p = root_ / name;
        fs::create_directories(p);
        return p;
    }

    const fs::path& root() const { return root_; }

private:
    std::string bin_;
    fs::path root_;
    int counter_ = 0;
};

std::map<std::string, std::string> csv_bytes(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".csv")
            out[entry.path().filename().string()] = slurp(entry.path());
    }
    return out;
}

}  // namespace

TEST_CASE("run: a passing experiment exits 0 and writes its verdict") {
    CliFixture cli;
    const fs::path out = cli.root() / "run_ok";
    const fs::path cfg = cli.write("ok.json", R"({"experiment": "identity-suite",
        "seed": 7, "output_dir": ")" + out.string() + R"("})");

    const CmdResult res = cli.run("run \"" + cfg.string() + "\"");
    CHECK(res.status == 0);
    CHECK(res.output.find("identity-suite") != std::string::npos);

    const fs::path verdict = out / "identity-suite-verdict.json";
    REQUIRE(fs::exists(verdict));
    const nlohmann::json doc = nlohmann::json::parse(slurp(verdict));
    CHECK(doc.contains("checks"));
    CHECK(!doc["checks"].empty());
    for (const auto& c : doc["checks"]) CHECK(c["pass"].get<bool>());
}

TEST_CASE("run: identical seeds give byte-identical tables") {
    CliFixture cli;
    const fs::path out_a = cli.root() / "det_a";
    const fs::path out_b = cli.root() / "det_b";
    const fs::path cfg_a = cli.write("det_a.json", R"({"experiment": "identity-suite",
        "seed": 7, "output_dir": ")" + out_a.string() + R"("})");
    const fs::path cfg_b = cli.write("det_b.json", R"({"experiment": "identity-suite",
        "seed": 7, "output_dir": ")" + out_b.string() + R"("})");

    CHECK(cli.run("run \"" + cfg_a.string() + "\"").status == 0);
    CHECK(cli.run("run \"" + cfg_b.string() + "\"").status == 0);

    const auto csv_a = csv_bytes(out_a);
    const auto csv_b = csv_bytes(out_b);
    REQUIRE(!csv_a.empty());
    REQUIRE(csv_a.size() == csv_b.size());
    for (const auto& [name, bytes] : csv_a) {
        REQUIRE(csv_b.count(name) == 1);
        CHECK(csv_b.at(name) == bytes);
    }
}

TEST_CASE("run: the environment override redirects the output directory") {
    CliFixture cli;
    const fs::path ignored = cli.root() / "ignored";
    const fs::path forced = cli.root() / "forced";
    const fs::path cfg = cli.write("env.json", R"({"experiment": "identity-suite",
        "seed": 3, "output_dir": ")" + ignored.string() + R"("})");

    const CmdResult res = cli.run("run \"" + cfg.string() + "\"",
                                  "QFOCK_OUTPUT_DIR=\"" + forced.string() + "\"");
    CHECK(res.status == 0);
    CHECK(fs::exists(forced / "identity-suite-verdict.json"));
    CHECK(!fs::exists(ignored / "identity-suite-verdict.json"));
}

TEST_CASE("run: config problems exit with code 2") {
    CliFixture cli;

    // Missing file.
    CHECK(cli.run("run \"" + (cli.root() / "no-such.json").string() + "\"").status == 2);

    // Malformed JSON.
    const fs::path bad = cli.write("bad.json", "{not json");
    CHECK(cli.run("run \"" + bad.string() + "\"").status == 2);

    // Unknown experiment gets a nearest-match suggestion.
    const fs::path typo = cli.write("typo.json", R"({"experiment": "toeplits"})");
    const CmdResult res = cli.run("run \"" + typo.string() + "\"");
    CHECK(res.status == 2);
    CHECK(res.output.find("closest match") != std::string::npos);
    CHECK(res.output.find("toeplitz") != std::string::npos);

    // Unaccepted parameter.
    const fs::path extra = cli.write("extra.json",
        R"({"experiment": "identity-suite", "params": {"not-a-param": 1}})");
    CHECK(cli.run("run \"" + extra.string() + "\"").status == 2);
}

TEST_CASE("list prints every experiment, and --json parses") {
    CliFixture cli;
    const CmdResult plain = cli.run("list");
    CHECK(plain.status == 0);
    for (const char* name : {"identity-suite", "schur", "carleson", "berezin",
                             "bmo", "toeplitz", "bounded-compact"}) {
        CHECK(plain.output.find(name) != std::string::npos);
    }

    const CmdResult js = cli.run("list --json");
    CHECK(js.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(js.output);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 13);
    for (const auto& item : doc) {
        CHECK(item.contains("name"));
        CHECK(item.contains("summary"));
    }
}

TEST_CASE("toeplitz export: gaussian symbol gives the closed-form diagonal") {
    CliFixture cli;
    const fs::path sym = cli.write("gauss.json", R"({"kind": "builtin", "name": "gauss"})");
    const fs::path out = cli.dir("toep_sym");

    const CmdResult res = cli.run("toeplitz --symbol \"" + sym.string() +
                                  "\" --alpha 1 --N 6 --out \"" + out.string() + "\"");
    CHECK(res.status == 0);

    const fs::path mj = out / "toeplitz-matrix.json";
    REQUIRE(fs::exists(mj));
    const nlohmann::json doc = nlohmann::json::parse(slurp(mj));
    CHECK(doc["N"].get<int>() == 6);
    CHECK(std::abs(doc["operator_norm"].get<double>() - 0.5) <= 1e-6);
    const auto& entries = doc["entries"];
    REQUIRE(entries.size() == 7);
    for (int n = 0; n <= 6; ++n) {
        const double want = std::pow(0.5, n + 1);
        CHECK(std::abs(entries[n][n][0].get<double>() - want) <= 1e-6);
    }

    const fs::path csv = out / "toeplitz-berezin.csv";
    REQUIRE(fs::exists(csv));
    const std::string head = slurp(csv).substr(0, slurp(csv).find('\n'));
    CHECK(head == "t,value-1,value-i,value-j,value-k");
}

TEST_CASE("toeplitz export: measure route and argument validation") {
    CliFixture cli;
    const fs::path meas = cli.write("atom.json",
        R"({"atoms": [{"x": 0.0, "y": 0.0, "unit": [1,0,0], "w": 2.0}]})");
    const fs::path out = cli.dir("toep_meas");

    const CmdResult res = cli.run("toeplitz --measure \"" + meas.string() +
                                  "\" --alpha 1 --N 4 --out \"" + out.string() + "\"");
    CHECK(res.status == 0);
    const nlohmann::json doc =
        nlohmann::json::parse(slurp(out / "toeplitz-matrix.json"));
    CHECK(std::abs(doc["entries"][0][0][0].get<double>() - 2.0) <= 1e-12);
    CHECK(std::abs(doc["operator_norm"].get<double>() - 2.0) <= 1e-9);

    const fs::path sym = cli.write("sym2.json", R"({"kind": "builtin", "name": "gauss"})");

    // Exactly one source must be given.
    CHECK(cli.run("toeplitz --symbol \"" + sym.string() + "\" --measure \"" +
                  meas.string() + "\" --out \"" + out.string() + "\"")
              .status == 2);
    CHECK(cli.run("toeplitz --out \"" + out.string() + "\"").status == 2);

    // Parameter validation.
    CHECK(cli.run("toeplitz --symbol \"" + sym.string() + "\" --alpha 0 --out \"" +
                  out.string() + "\"")
              .status == 2);
    CHECK(cli.run("toeplitz --symbol \"" + sym.string() + "\" --N 900 --out \"" +
                  out.string() + "\"")
              .status == 2);

    // Missing input file.
    CHECK(cli.run("toeplitz --symbol \"" + (cli.root() / "nope.json").string() +
                  "\" --out \"" + out.string() + "\"")
              .status == 2);
}
