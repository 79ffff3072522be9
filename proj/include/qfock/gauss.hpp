#pragma once

#include <vector>

namespace qfock {

struct Nodes1D {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

// Gauss-Legendre rule on [-1, 1]: integrates polynomials up to degree 2n-1.
Nodes1D gauss_legendre(int n);

// Gauss-Hermite rule for the weight e^{-t^2} on the real line: integrates
// p(t) e^{-t^2} exactly for polynomials p up to degree 2n-1.
Nodes1D gauss_hermite(int n);

}  // namespace qfock
