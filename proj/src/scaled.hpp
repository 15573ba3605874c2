#pragma once

#include <cmath>
#include <string>

#include "common.hpp"

namespace yamabe {

// Value carried as mantissa * t^t_pow * eps^eps_pow with exact exponents.
// Exponents of t are rationals (powers like 2n(8+c0)/(n-2) appear), eps
// exponents are integers. Materializing to a plain double is refused when
// the exponent part leaves the representable range.
struct ScaledQuantity {
    double mantissa = 0.0;
    Rational t_pow{0};
    int eps_pow = 0;

    ScaledQuantity() = default;
    ScaledQuantity(double m, Rational tp, int ep) : mantissa(m), t_pow(tp), eps_pow(ep) {}

    friend ScaledQuantity operator*(const ScaledQuantity& a, const ScaledQuantity& b) {
        return {a.mantissa * b.mantissa, a.t_pow + b.t_pow, a.eps_pow + b.eps_pow};
    }
    ScaledQuantity scaled(double f) const { return {mantissa * f, t_pow, eps_pow}; }

    // addition requires identical exponents; anything else is a logic error
    friend ScaledQuantity operator+(const ScaledQuantity& a, const ScaledQuantity& b) {
        require(a.t_pow == b.t_pow && a.eps_pow == b.eps_pow, Error::domain,
                "adding scaled quantities with different exponents");
        return {a.mantissa + b.mantissa, a.t_pow, a.eps_pow};
    }

    double log_scale(double ln_t, double ln_eps) const {
        return t_pow.value() * ln_t + eps_pow * ln_eps;
    }

    bool materializable(double ln_t, double ln_eps) const {
        return std::fabs(log_scale(ln_t, ln_eps)) < 600.0;
    }

    double materialize(double ln_t, double ln_eps) const {
        require(materializable(ln_t, ln_eps), Error::domain,
                "scaled quantity out of double range; keep it in exponent form");
        return mantissa * std::exp(log_scale(ln_t, ln_eps));
    }

    std::string str() const {
        return std::to_string(mantissa) + " * t^(" + t_pow.str() + ") * eps^" +
               std::to_string(eps_pow);
    }
};

}  // namespace yamabe
