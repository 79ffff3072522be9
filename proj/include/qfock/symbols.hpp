#pragma once

#include <string>
#include <vector>

#include "qfock/slice_function.hpp"

namespace qfock {

// A named test symbol: the function together with the metadata the
// experiment tables need (is the sup norm finite, and what is it).
struct Symbol {
    std::string name;
    SliceFunction fn;
    bool bounded = true;
    double sup_norm = 0.0;  // valid bound on sup |f| when bounded
};

// Fixed bank of named symbols.  Bounded members: the four constants, the
// two oscillators cos_re / sin_re, the compact bump, the smoothed step,
// the triangle wave, and the unit Gaussian — ten in all.  Unbounded
// members (growth controls): re, abs2, conj.
Symbol builtin_symbol(const std::string& name);
std::vector<std::string> builtin_names();

// Names of the ten bounded builtins, in a fixed order.
std::vector<std::string> bounded_builtin_names();

// Parses the symbol description format:
//   {"kind": "poly", "coeffs": [[x0,x1,x2,x3], ...]}
//     polynomial sum q^n c_n with quaternion coefficients;
//   {"kind": "gauss_mod", "x": real >= 0, "k": int >= 0,
//    "coeff": [x0,x1,x2,x3] (optional, default 1)}
//     q^k e^{-x |q|^2} * coeff;
//   {"kind": "builtin", "name": "..."}
// Throws std::runtime_error with a descriptive message on malformed input.
Symbol parse_symbol_json(const std::string& text);
Symbol load_symbol_file(const std::string& path);

}  // namespace qfock
