#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace yamabe {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// <x> = (1+|x|^2)^(1/2), the Japanese bracket
inline double jb(double dist) { return std::sqrt(1.0 + dist * dist); }

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

struct Error : std::runtime_error {
    enum Code {
        invalid_argument,
        domain,
        divergent,
        not_converged,
        io,
        parse,
    };
    Code code;
    Error(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Error::Code c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Error::Code c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

// Dense square matrix, row-major.
struct Mat {
    int n = 0;
    Vec a;
    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    double trace() const {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += (*this)(i, i);
        return s;
    }
    double frob() const {
        double s = 0.0;
        for (double x : a) s += x * x;
        return std::sqrt(s);
    }
    double max_abs() const {
        double s = 0.0;
        for (double x : a) s = std::max(s, std::fabs(x));
        return s;
    }
};

inline Mat mul(const Mat& A, const Mat& B) {
    Mat C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            double aik = A(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < A.n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

inline Vec mul(const Mat& A, const Vec& x) {
    Vec y(static_cast<std::size_t>(A.n), 0.0);
    for (int i = 0; i < A.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < A.n; ++j) s += A(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

// Cyclic Jacobi eigensolver for symmetric matrices. Returns eigenvalues
// ascending; optionally accumulates eigenvectors (columns of V).
inline Vec jacobi_eigenvalues(Mat A, Mat* V = nullptr, int max_sweeps = 64) {
    const int n = A.n;
    if (V) *V = Mat::identity(n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
        if (off < 1e-300) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = A(i, p), aiq = A(i, q);
                    A(i, p) = c * aip - s * aiq;
                    A(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = A(p, i), aqi = A(q, i);
                    A(p, i) = c * api - s * aqi;
                    A(q, i) = s * api + c * aqi;
                }
                if (V)
                    for (int i = 0; i < n; ++i) {
                        double vip = (*V)(i, p), viq = (*V)(i, q);
                        (*V)(i, p) = c * vip - s * viq;
                        (*V)(i, q) = s * vip + c * viq;
                    }
            }
    }
    Vec ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[i] = A(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// exp(M) for symmetric M via Jacobi eigendecomposition.
inline Mat sym_exp(const Mat& M) {
    Mat V;
    Mat A = M;
    const int n = M.n;
    // jacobi destroys A; we need eigenvalues in original order w.r.t. V
    Mat W = Mat::identity(n);
    Mat B = M;
    // run jacobi manually to keep value/vector pairing
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += B(p, q) * B(p, q);
        if (off < 1e-300) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = B(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (B(q, q) - B(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = B(i, p), aiq = B(i, q);
                    B(i, p) = c * aip - s * aiq;
                    B(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = B(p, i), aqi = B(q, i);
                    B(p, i) = c * api - s * aqi;
                    B(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = W(i, p), viq = W(i, q);
                    W(i, p) = c * vip - s * viq;
                    W(i, q) = s * vip + c * viq;
                }
            }
    }
    Mat R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += W(i, k) * std::exp(B(k, k)) * W(j, k);
            R(i, j) = s;
        }
    return R;
}

// surface area of the unit sphere S^{m-1} in R^m
inline double sphere_area(int m) {
    return 2.0 * std::pow(M_PI, 0.5 * m) / std::tgamma(0.5 * m);
}

inline double log_gamma(double x) { return std::lgamma(x); }

// Beta(a,b) via log-gamma, safe for largish arguments
inline double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// Exact rational on int64 with __int128 overflow checks.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n_) : num(n_), den(1) {}
    Rational(long long n_, long long d_) : num(n_), den(d_) { normalize(); }

    void normalize() {
        require(den != 0, Error::domain, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static long long checked(__int128 v) {
        require(v <= std::numeric_limits<long long>::max() &&
                    v >= std::numeric_limits<long long>::min(),
                Error::domain, "rational overflow (use the big-integer path)");
        return static_cast<long long>(v);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational x(Rational::checked(static_cast<__int128>(a.num) * b.num),
                   Rational::checked(static_cast<__int128>(a.den) * b.den));
        return x;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return Rational(checked(n), checked(d));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(-b.num, b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return std::to_string(num) + (den == 1 ? "" : "/" + std::to_string(den));
    }
};

}  // namespace yamabe
