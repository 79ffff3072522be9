#include "qfock/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qfock {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double RunConfig::param(const std::string& name, double fallback) const {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

std::string RunConfig::input(const std::string& name) const {
    auto it = inputs.find(name);
    return it == inputs.end() ? std::string{} : it->second;
}

RunConfig parse_config_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "experiment") {
            if (!value.is_string()) throw ConfigError("\"experiment\" must be a string");
            cfg.experiment = value.get<std::string>();
        } else if (key == "output_dir") {
            if (!value.is_string()) throw ConfigError("\"output_dir\" must be a string");
            cfg.output_dir = value.get<std::string>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned() && !value.is_number_integer())
                throw ConfigError("\"seed\" must be an integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "params") {
            if (!value.is_object()) throw ConfigError("\"params\" must be an object");
            for (const auto& [pk, pv] : value.items()) {
                if (!pv.is_number())
                    throw ConfigError("param \"" + pk + "\" must be a number");
                cfg.params[pk] = pv.get<double>();
            }
        } else if (key == "inputs") {
            if (!value.is_object()) throw ConfigError("\"inputs\" must be an object");
            for (const auto& [ik, iv] : value.items()) {
                if (!iv.is_string())
                    throw ConfigError("input \"" + ik + "\" must be a string path");
                cfg.inputs[ik] = iv.get<std::string>();
            }
        } else {
            throw ConfigError("unknown config key \"" + key +
                              "\" (expected experiment, output_dir, seed, params, inputs)");
        }
    }
    if (cfg.experiment.empty())
        throw ConfigError("config must name an \"experiment\"; see the list subcommand");
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

// ---- Rng --------------------------------------------------------------------

double Rng::uniform(double lo, double hi) {
    // 53-bit mantissa draw straight from the engine; no library
    // distribution so streams are identical everywhere.
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Quaternion Rng::quaternion(double scale) {
    return Quaternion{uniform(-scale, scale), uniform(-scale, scale),
                      uniform(-scale, scale), uniform(-scale, scale)};
}

ImaginaryUnit Rng::unit() {
    while (true) {
        const double a = uniform(-1, 1), b = uniform(-1, 1), c = uniform(-1, 1);
        const double n2 = a * a + b * b + c * c;
        if (n2 > 1e-3 && n2 <= 1.0) return ImaginaryUnit(a, b, c);
    }
}

int Rng::index(int n) {
    return std::min(n - 1, static_cast<int>(uniform(0.0, static_cast<double>(n))));
}

// ---- ExperimentReport -------------------------------------------------------

ExperimentReport::ExperimentReport(std::string experiment, std::string output_dir)
    : experiment_(std::move(experiment)), output_dir_(std::move(output_dir)) {
    std::filesystem::create_directories(output_dir_);
}

bool ExperimentReport::check(const std::string& name, double observed, double limit) {
    const bool pass = observed <= limit;
    checks_.push_back({name, observed, limit, pass});
    return pass;
}

bool ExperimentReport::check_at_least(const std::string& name, double observed,
                                      double floor) {
    const bool pass = observed >= floor;
    checks_.push_back({name, observed, floor, pass});
    return pass;
}

bool ExperimentReport::check_true(const std::string& name, bool pass) {
    checks_.push_back({name, pass ? 1.0 : 0.0, 1.0, pass});
    return pass;
}

void ExperimentReport::table(const std::string& name, const std::string& header) {
    if (tables_.count(name)) return;
    const std::string path = output_dir_ + "/" + experiment_ + "-" + name + ".csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << header << "\n";
    tables_.emplace(name, std::move(out));
}

void ExperimentReport::row(const std::string& name, const std::vector<std::string>& cells) {
    auto it = tables_.find(name);
    if (it == tables_.end())
        throw std::logic_error("csv table \"" + name + "\" was not declared");
    std::string line;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) line += ',';
        line += cells[k];
    }
    it->second << line << "\n";
}

void ExperimentReport::note(const std::string& key, const std::string& value) {
    notes_.emplace_back(key, value);
}

int ExperimentReport::failed() const {
    int n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

void ExperimentReport::finalize(const RunConfig& cfg) {
    for (auto& [name, out] : tables_) out.flush();
    nlohmann::json doc;
    doc["experiment"] = experiment_;
    doc["seed"] = cfg.seed;
    nlohmann::json params(nlohmann::json::value_t::object);
    for (const auto& [k, v] : cfg.params) params[k] = v;
    doc["params"] = params;
    nlohmann::json inputs(nlohmann::json::value_t::object);
    for (const auto& [k, v] : cfg.inputs) inputs[k] = v;
    doc["inputs"] = inputs;
    nlohmann::json checks(nlohmann::json::value_t::array);
    for (const auto& c : checks_) {
        nlohmann::json item;
        item["name"] = c.name;
        item["observed"] = c.observed;
        item["limit"] = c.limit;
        item["pass"] = c.pass;
        checks.push_back(item);
    }
    doc["checks"] = checks;
    doc["failed"] = failed();
    nlohmann::json notes(nlohmann::json::value_t::object);
    for (const auto& [k, v] : notes_) notes[k] = v;
    doc["notes"] = notes;
    const std::string path = output_dir_ + "/" + experiment_ + "-verdict.json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << doc.dump(2) << "\n";
}

// ---- catalog and runner -----------------------------------------------------

const std::vector<ExperimentSpec>& experiment_catalog() {
    static const std::vector<ExperimentSpec> catalog = [] {
        std::vector<ExperimentSpec> all;
        for (auto group : {core_experiments(), measure_experiments(),
                           berezin_experiments(), toeplitz_experiments()})
            for (auto& spec : group) all.push_back(std::move(spec));
        return all;
    }();
    return catalog;
}

std::string catalog_listing(bool as_json) {
    if (!as_json) {
        std::ostringstream out;
        for (const auto& spec : experiment_catalog())
            out << spec.name << "  -  " << spec.summary << "\n";
        return out.str();
    }
    nlohmann::json arr(nlohmann::json::value_t::array);
    for (const auto& spec : experiment_catalog()) {
        nlohmann::json item;
        item["name"] = spec.name;
        item["summary"] = spec.summary;
        item["params"] = spec.params;
        item["inputs"] = spec.inputs;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

const ExperimentSpec& find_experiment(const std::string& name) {
    const ExperimentSpec* best = nullptr;
    std::size_t best_dist = SIZE_MAX;
    for (const auto& spec : experiment_catalog()) {
        if (spec.name == name) return spec;
        const std::size_t d = edit_distance(name, spec.name);
        if (d < best_dist) {
            best_dist = d;
            best = &spec;
        }
    }
    std::string msg = "unknown experiment \"" + name + "\"";
    if (best) msg += "; closest match is \"" + best->name + "\" (see list)";
    throw ConfigError(msg);
}

}  // namespace

int run_experiment(const RunConfig& cfg, std::ostream* log) {
    const ExperimentSpec& spec = find_experiment(cfg.experiment);
    for (const auto& [k, v] : cfg.params) {
        (void)v;
        if (std::find(spec.params.begin(), spec.params.end(), k) == spec.params.end()) {
            std::string msg = "experiment " + spec.name + " does not take param \"" + k + "\"";
            if (!spec.params.empty()) {
                msg += "; accepted:";
                for (const auto& p : spec.params) msg += ' ' + p;
            }
            throw ConfigError(msg);
        }
    }
    for (const auto& [k, v] : cfg.inputs) {
        if (std::find(spec.inputs.begin(), spec.inputs.end(), k) == spec.inputs.end())
            throw ConfigError("experiment " + spec.name + " does not take input \"" + k + "\"");
        if (!std::filesystem::exists(v))
            throw ConfigError("input file for \"" + k + "\" not found: " + v);
    }
    RunConfig resolved = cfg;
    if (const char* env = std::getenv("QFOCK_OUTPUT_DIR"); env && *env)
        resolved.output_dir = env;
    ExperimentReport report(spec.name, resolved.output_dir);
    spec.run(resolved, report);
    report.finalize(resolved);
    if (log) {
        for (const CheckRecord& c : report.checks())
            *log << (c.pass ? "[pass] " : "[FAIL] ") << spec.name << ": " << c.name
                 << " (observed " << format_double(c.observed) << ", limit "
                 << format_double(c.limit) << ")\n";
        *log << spec.name << ": " << report.checks().size() << " checks, "
             << report.failed() << " failed; outputs in " << resolved.output_dir
             << "\n";
    }
    return report.failed();
}

}  // namespace qfock
