#pragma once

#include <functional>
#include <string>
#include <vector>

#include "common.hpp"

namespace yamabe {

// Gauss-Legendre nodes/weights on [-1,1]; cached per order.
struct GaussLegendre {
    std::vector<double> x, w;
    static const GaussLegendre& get(int m);
};

// Semi-infinite radial rule via r = tan(theta), theta in (0, pi/2).
// integrate(f, n) computes int_0^inf f(r) r^{n-1} dr by doubling the
// Gauss-Legendre order until the relative change is below tol.
struct RadialRule {
    int max_order = 4096;
    double tol = 1e-10;

    struct Result {
        double value = 0.0;
        double error = 0.0;  // last doubling change
        int order = 0;
    };
    Result integrate(const std::function<double(double)>& f, int n) const;
};

// omega_{n-1} * int_0^inf f(r) r^{n-1} dr with a declared decay exponent:
// f ~ r^decay as r -> inf; refuses when n - 1 + decay >= -1.
struct RadialIntegral {
    double value = 0.0;
    double error = 0.0;
};
RadialIntegral radial_integral(const std::function<double(double)>& f, int n,
                               double decay);

// Average over S^{n-1} of prod_i x_i^{a_i}: zero for any odd exponent, else
// prod (a_i-1)!! / (n (n+2) ... (n + sum a - 2)). Exact in int64 with a
// big-integer fallback when the products overflow.
Rational sphere_moment(const std::vector<int>& exponents, int n);
double sphere_moment_value(const std::vector<int>& exponents, int n);

// Newtonian potential of a radial profile:
//   int_{R^n} |y - x|^{-(n-2)} f(|x|) dx
//   = omega_{n-1} [ y^{2-n} int_0^y f R^{n-1} dR + int_y^inf f R dR ].
double newtonian_radial(const std::function<double(double)>& f, int n, double y,
                        double tail_decay);

}  // namespace yamabe
