#include "quadrature.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <mutex>

namespace yamabe {

const GaussLegendre& GaussLegendre::get(int m) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    GaussLegendre gl;
    gl.x.resize(static_cast<std::size_t>(m));
    gl.w.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= m; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        double dp = m * (x * p1 - p0) / (x * x - 1.0);
        gl.x[static_cast<std::size_t>(m - 1 - i)] = x;
        gl.w[static_cast<std::size_t>(m - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    auto [ins, ok] = cache.emplace(m, std::move(gl));
    return ins->second;
}

RadialRule::Result RadialRule::integrate(const std::function<double(double)>& f,
                                         int n) const {
    auto eval = [&](int m) {
        const GaussLegendre& gl = GaussLegendre::get(m);
        double s = 0.0;
        for (int i = 0; i < m; ++i) {
            double th = 0.25 * M_PI * (gl.x[static_cast<std::size_t>(i)] + 1.0);
            double r = std::tan(th);
            double sec2 = 1.0 + r * r;
            double fv = f(r);
            if (fv != 0.0) s += gl.w[static_cast<std::size_t>(i)] * fv *
                                std::pow(r, n - 1.0) * sec2;
        }
        return 0.25 * M_PI * s;
    };
    Result res;
    int m = 32;
    double prev = eval(m);
    while (m < max_order) {
        m *= 2;
        double cur = eval(m);
        res.error = std::fabs(cur - prev);
        res.value = cur;
        res.order = m;
        double scale = std::max(std::fabs(cur), 1e-300);
        if (res.error < tol * scale) return res;
        prev = cur;
    }
    fail(Error::not_converged,
         "radial quadrature did not converge at order " + std::to_string(m) +
             " (last change " + std::to_string(res.error) + ")");
}

RadialIntegral radial_integral(const std::function<double(double)>& f, int n,
                               double decay) {
    require(n - 1.0 + decay < -1.0, Error::divergent,
            "declared-divergent radial integrand: r^{n-1} f has tail exponent " +
                std::to_string(n - 1.0 + decay) + " >= -1");
    RadialRule rule;
    auto res = rule.integrate(f, n);
    return {sphere_area(n) * res.value, sphere_area(n) * res.error};
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

Rational moment_int64(const std::vector<int>& a, int n) {
    const __int128 lim = static_cast<__int128>(1) << 100;
    auto mul = [&](__int128 acc, long long v) {
        require(acc < lim / v, Error::domain, "overflow");
        return acc * v;
    };
    __int128 num = 1;
    for (int ai : a)
        for (int v = ai - 1; v >= 2; v -= 2) num = mul(num, v);
    int total = 0;
    for (int ai : a) total += ai;
    __int128 den = 1;
    for (int j = 0; j < total / 2; ++j) den = mul(den, n + 2 * j);
    // Rational reduces by gcd; checked() rejects anything past int64
    return Rational(Rational::checked(num), Rational::checked(den));
}

Rational moment_big(const std::vector<int>& a, int n) {
    BigInt num = 1;
    for (int ai : a)
        for (int v = ai - 1; v >= 2; v -= 2) num *= v;
    int total = 0;
    for (int ai : a) total += ai;
    BigInt den = 1;
    for (int j = 0; j < total / 2; ++j) den *= (n + 2 * j);
    BigInt g = boost::multiprecision::gcd(num, den);
    num /= g;
    den /= g;
    require(num <= std::numeric_limits<long long>::max() &&
                den <= std::numeric_limits<long long>::max(),
            Error::domain,
            "sphere moment does not fit an int64 rational even after reduction");
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

}  // namespace

Rational sphere_moment(const std::vector<int>& exponents, int n) {
    require(n >= 1, Error::invalid_argument, "sphere moment needs n >= 1");
    for (int ai : exponents) {
        require(ai >= 0, Error::invalid_argument, "negative exponent");
        if (ai % 2 == 1) return Rational(0);
    }
    require(exponents.size() <= static_cast<std::size_t>(n), Error::invalid_argument,
            "more exponents than coordinates");
    try {
        return moment_int64(exponents, n);
    } catch (const Error&) {
        return moment_big(exponents, n);
    }
}

double sphere_moment_value(const std::vector<int>& exponents, int n) {
    for (int ai : exponents)
        if (ai % 2 == 1) return 0.0;
    // prod Gamma((a_i+1)/2) / Gamma(1/2)^k * Gamma(n/2) / Gamma(n/2 + sum/2)
    double lg = 0.0;
    int total = 0;
    for (int ai : exponents) {
        lg += std::lgamma(0.5 * (ai + 1)) - std::lgamma(0.5);
        total += ai;
    }
    lg += std::lgamma(0.5 * n) - std::lgamma(0.5 * n + 0.5 * total);
    return std::exp(lg);
}

double newtonian_radial(const std::function<double(double)>& f, int n, double y,
                        double tail_decay) {
    require(n >= 3, Error::invalid_argument, "newtonian potential needs n >= 3");
    require(y >= 0.0, Error::invalid_argument, "radius must be non-negative");
    require(tail_decay + 1.0 < -1.0, Error::divergent,
            "newtonian tail integral diverges: f r has tail exponent " +
                std::to_string(tail_decay + 1.0));
    double inner = 0.0;
    if (y > 0.0) {
        // int_0^y f R^{n-1} dR on a graded mesh (log-spaced panels for large y)
        const GaussLegendre& gl = GaussLegendre::get(64);
        int panels = y > 4.0 ? 1 + static_cast<int>(std::ceil(std::log2(y))) : 1;
        double lo = 0.0;
        for (int p = 0; p < panels; ++p) {
            double hi = (p + 1 == panels) ? y : y * std::pow(2.0, p + 1 - panels);
            for (std::size_t i = 0; i < gl.x.size(); ++i) {
                double r = 0.5 * (hi - lo) * (gl.x[i] + 1.0) + lo;
                inner += 0.5 * (hi - lo) * gl.w[i] * f(r) * std::pow(r, n - 1.0);
            }
            lo = hi;
        }
        inner *= std::pow(y, 2.0 - n);
    }
    // int_y^inf f R dR via R = y + s, s = tan(theta)
    RadialRule rule;
    auto outer = rule.integrate(
        [&](double s) {
            double r = y + s;
            return f(r) * r;
        },
        1);
    return sphere_area(n) * (inner + outer.value);
}

}  // namespace yamabe
