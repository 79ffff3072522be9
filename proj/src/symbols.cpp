#include "qfock/symbols.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qfock/projection.hpp"

namespace qfock {

namespace {

Quaternion real_q(double v) { return Quaternion{v, 0, 0, 0}; }

std::function<Quaternion(double, double)> zero_stem() {
    return [](double, double) { return Quaternion{}; };
}

Symbol intrinsic_symbol(std::string name, std::function<Quaternion(double, double)> a,
                        bool bounded, double sup) {
    Symbol s;
    s.name = std::move(name);
    s.fn = SliceFunction::from_stem(Stem{std::move(a), zero_stem()}, FnTag::intrinsic);
    s.bounded = bounded;
    s.sup_norm = sup;
    return s;
}

Symbol constant_symbol(std::string name, const Quaternion& c) {
    Symbol s;
    s.name = std::move(name);
    s.fn = SliceFunction::constant(c);
    s.bounded = true;
    s.sup_norm = c.norm();
    return s;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"const_one", "const_i",     "const_j",  "const_k", "cos_re",
            "sin_re",    "bump",        "step_smooth", "sawtooth", "gauss",
            "re",        "abs2",        "conj"};
}

std::vector<std::string> bounded_builtin_names() {
    return {"const_one", "const_i", "const_j",     "const_k",  "cos_re",
            "sin_re",    "bump",    "step_smooth", "sawtooth", "gauss"};
}

Symbol builtin_symbol(const std::string& name) {
    if (name == "const_one") return constant_symbol(name, Quaternion::one());
    if (name == "const_i") return constant_symbol(name, Quaternion::i());
    if (name == "const_j") return constant_symbol(name, Quaternion::j());
    if (name == "const_k") return constant_symbol(name, Quaternion::k());
    if (name == "re")
        return intrinsic_symbol(name, [](double x, double) { return real_q(x); },
                                false, 0.0);
    if (name == "abs2")
        return intrinsic_symbol(
            name, [](double x, double y) { return real_q(x * x + y * y); }, false, 0.0);
    if (name == "cos_re")
        return intrinsic_symbol(
            name, [](double x, double) { return real_q(std::cos(x)); }, true, 1.0);
    if (name == "sin_re")
        return intrinsic_symbol(
            name, [](double x, double) { return real_q(std::sin(x)); }, true, 1.0);
    if (name == "bump") {
        // Smooth bump supported in |q| <= 2, peak value 1 at the origin.
        return intrinsic_symbol(
            name,
            [](double x, double y) {
                const double s = (x * x + y * y) / 4.0;
                if (s >= 1.0) return Quaternion{};
                return real_q(std::exp(1.0 - 1.0 / (1.0 - s)));
            },
            true, 1.0);
    }
    if (name == "step_smooth")
        return intrinsic_symbol(
            name, [](double x, double) { return real_q(0.5 * (1.0 + std::tanh(2.0 * x))); },
            true, 1.0);
    if (name == "sawtooth")
        // Triangle wave in the real part, period 2, range [-1, 1].
        return intrinsic_symbol(
            name,
            [](double x, double) {
                return real_q((2.0 / M_PI) * std::asin(std::sin(M_PI * x)));
            },
            true, 1.0);
    if (name == "gauss") {
        Symbol s;
        s.name = name;
        s.fn = gaussian_monomial(1.0, 0);
        s.bounded = true;
        s.sup_norm = 1.0;
        return s;
    }
    if (name == "conj") {
        Symbol s;
        s.name = name;
        s.fn = SliceFunction::from_stem(
            Stem{[](double x, double) { return real_q(x); },
                 [](double, double y) { return real_q(-y); }},
            FnTag::intrinsic);
        s.bounded = false;
        return s;
    }
    std::ostringstream msg;
    msg << "unknown builtin symbol \"" << name << "\"; valid names:";
    for (const std::string& n : builtin_names()) msg << ' ' << n;
    throw std::runtime_error(msg.str());
}

namespace {

Quaternion quaternion_from_json(const nlohmann::json& v, const char* what) {
    if (!v.is_array() || v.size() != 4)
        throw std::runtime_error(std::string("symbol json: ") + what +
                                 " must be a 4-vector [x0,x1,x2,x3]");
    return Quaternion{v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
                      v[3].get<double>()};
}

}  // namespace

Symbol parse_symbol_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("kind"))
        throw std::runtime_error("symbol json: expected an object with a \"kind\" field");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "builtin") {
        if (!doc.contains("name"))
            throw std::runtime_error("symbol json: builtin needs a \"name\" field");
        return builtin_symbol(doc["name"].get<std::string>());
    }
    if (kind == "poly") {
        if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
            throw std::runtime_error("symbol json: poly needs a \"coeffs\" array");
        std::vector<Quaternion> c;
        for (const auto& item : doc["coeffs"])
            c.push_back(quaternion_from_json(item, "poly coefficient"));
        Symbol s;
        s.name = "poly";
        s.fn = SliceFunction::poly(c);
        s.bounded = c.size() <= 1;
        s.sup_norm = c.empty() ? 0.0 : c[0].norm();
        for (std::size_t n = 1; n < c.size(); ++n)
            if (c[n].norm() > 0.0) s.bounded = false;
        return s;
    }
    if (kind == "gauss_mod") {
        const double x = doc.at("x").get<double>();
        const int k = doc.at("k").get<int>();
        if (x < 0.0) throw std::runtime_error("symbol json: gauss_mod needs x >= 0");
        if (k < 0) throw std::runtime_error("symbol json: gauss_mod needs k >= 0");
        Quaternion coeff = Quaternion::one();
        if (doc.contains("coeff"))
            coeff = quaternion_from_json(doc["coeff"], "gauss_mod coeff");
        Symbol s;
        s.name = "gauss_mod";
        s.fn = gaussian_monomial(x, k).times_const(coeff);
        s.bounded = (x > 0.0) || (k == 0);
        if (s.bounded) {
            // sup over |q| = t of t^k e^{-x t^2} sits at t^2 = k / (2x).
            const double peak =
                k == 0 ? 1.0 : std::pow(k / (2.0 * std::exp(1.0) * x), 0.5 * k);
            s.sup_norm = peak * coeff.norm();
        }
        return s;
    }
    throw std::runtime_error("symbol json: unknown kind \"" + kind +
                             "\" (expected poly, gauss_mod, or builtin)");
}

Symbol load_symbol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open symbol file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_symbol_json(buf.str());
}

}  // namespace qfock
