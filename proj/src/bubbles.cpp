#include "bubbles.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace yamabe {

double Bubble::profile(double w) const {
    double e = 0.5 * (n - 2);
    return std::pow(lam, e) * std::pow(1.0 + lam * lam * w, -e);
}

double Bubble::profile_d1(double w) const {
    double e = 0.5 * (n - 2);
    return -e * lam * lam * std::pow(lam, e) * std::pow(1.0 + lam * lam * w, -e - 1.0);
}

double Bubble::profile_d2(double w) const {
    double e = 0.5 * (n - 2);
    return e * (e + 1.0) * std::pow(lam, e + 4.0) *
           std::pow(1.0 + lam * lam * w, -e - 2.0);
}

double Bubble::profile_d3(double w) const {
    double e = 0.5 * (n - 2);
    return -e * (e + 1.0) * (e + 2.0) * std::pow(lam, e + 6.0) *
           std::pow(1.0 + lam * lam * w, -e - 3.0);
}

double Bubble::value(const Vec& x) const {
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = x[i] - center[i];
        w += d * d;
    }
    return profile(w);
}

Vec Bubble::grad(const Vec& x) const {
    double w = 0.0;
    Vec y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[i] = x[i] - center[i];
        w += y[i] * y[i];
    }
    double f1 = profile_d1(w);
    for (int i = 0; i < n; ++i) y[i] *= 2.0 * f1;
    return y;
}

Mat Bubble::hess(const Vec& x) const {
    double w = 0.0;
    Vec y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[i] = x[i] - center[i];
        w += y[i] * y[i];
    }
    double f1 = profile_d1(w);
    double f2 = profile_d2(w);
    Mat h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = 2.0 * f1;
        for (int j = 0; j < n; ++j) h(i, j) += 4.0 * f2 * y[i] * y[j];
    }
    return h;
}

double Bubble::laplacian(const Vec& x) const {
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = x[i] - center[i];
        w += d * d;
    }
    return 2.0 * n * profile_d1(w) + 4.0 * w * profile_d2(w);
}

double Bubble::pde_residual(const Vec& x) const {
    double v = value(x);
    return -laplacian(x) - n * (n - 2.0) * std::pow(v, (n + 2.0) / (n - 2.0));
}

double Bubble::z(int mu, const Vec& x) const {
    double w = 0.0;
    Vec y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[i] = x[i] - center[i];
        w += y[i] * y[i];
    }
    double q = 1.0 + lam * lam * w;
    double e = 0.5 * (n - 2);
    if (mu == 0) {
        // d sigma / d lambda = (n-2)/2 lam^{(n-4)/2} (1-lam^2 w) q^{-n/2}
        return e * std::pow(lam, 0.5 * (n - 4)) * (1.0 - lam * lam * w) *
               std::pow(q, -0.5 * n);
    }
    require(mu >= 1 && mu <= n, Error::invalid_argument, "tangent index out of range");
    // d sigma / d xi_mu = (n-2) lam^{(n+2)/2} (x-xi)_mu q^{-n/2}
    return (n - 2.0) * std::pow(lam, 0.5 * (n + 2)) * y[mu - 1] * std::pow(q, -0.5 * n);
}

Vec Bubble::z_grad(int mu, const Vec& x) const {
    double w = 0.0;
    Vec y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[i] = x[i] - center[i];
        w += y[i] * y[i];
    }
    double q = 1.0 + lam * lam * w;
    double e = 0.5 * (n - 2);
    Vec g(static_cast<std::size_t>(n), 0.0);
    if (mu == 0) {
        // d/dx_a of e lam^{(n-4)/2}(1-lam^2 w) q^{-n/2}:
        // radial: G'(w) = -lam^2 q^{-n/2-1} [ q + (n/2)(1-lam^2 w) ]
        double gp = -lam * lam * std::pow(q, -0.5 * n - 1.0) *
                    (q + 0.5 * n * (1.0 - lam * lam * w));
        double c = e * std::pow(lam, 0.5 * (n - 4));
        for (int i = 0; i < n; ++i) g[i] = 2.0 * c * gp * y[i];
        return g;
    }
    require(mu >= 1 && mu <= n, Error::invalid_argument, "tangent index out of range");
    double c = (n - 2.0) * std::pow(lam, 0.5 * (n + 2));
    double qn = std::pow(q, -0.5 * n);
    double qn1 = std::pow(q, -0.5 * n - 1.0);
    for (int a = 0; a < n; ++a) {
        g[a] = c * ((a == mu - 1 ? qn : 0.0) - n * lam * lam * y[a] * y[mu - 1] * qn1);
    }
    return g;
}

Mat pointwise_bubble_identity(const Bubble& b, const Vec& x, double c) {
    const int n = b.n;
    Vec ds = b.grad(x);
    Mat hs = b.hess(x);
    double v = b.value(x);
    double lap = b.laplacian(x);
    double ds2 = dot(ds, ds);
    // D_uv(s^2) = 2 D_u s D_v s + 2 s D_uv s ; Lap(s^2) = 2|Ds|^2 + 2 s Lap s
    double iso = (ds2 - c * (2.0 * ds2 + 2.0 * v * lap)) / n;
    Mat r(n);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            double lhs = ds[u] * ds[w] - c * (2.0 * ds[u] * ds[w] + 2.0 * v * hs(u, w));
            r(u, w) = lhs - (u == w ? iso : 0.0);
        }
    return r;
}

MultiBubble MultiBubble::base_config(const CenterSet& cs) {
    MultiBubble mb;
    mb.cs = cs;
    mb.xi.assign(static_cast<std::size_t>(cs.k), Vec(static_cast<std::size_t>(cs.n), 0.0));
    mb.lam.assign(static_cast<std::size_t>(cs.k), 1.0);
    mb.constrained = true;
    return mb;
}

MultiBubble MultiBubble::make(const CenterSet& cs, std::vector<Vec> xi,
                              std::vector<double> lam, bool constrained) {
    require(xi.size() == static_cast<std::size_t>(cs.k) &&
                lam.size() == static_cast<std::size_t>(cs.k),
            Error::invalid_argument, "one (xi, lambda) pair per center required");
    if (constrained) {
        for (int j = 0; j < cs.k; ++j) {
            require(lam[static_cast<std::size_t>(j)] > 0.75 &&
                        lam[static_cast<std::size_t>(j)] < 4.0 / 3.0,
                    Error::domain, "lambda outside (3/4, 4/3) in constrained mode");
            require(norm2(xi[static_cast<std::size_t>(j)]) < 0.5, Error::domain,
                    "|xi| >= 1/2 in constrained mode");
        }
    }
    MultiBubble mb;
    mb.cs = cs;
    mb.xi = std::move(xi);
    mb.lam = std::move(lam);
    mb.constrained = constrained;
    return mb;
}

Bubble MultiBubble::bubble(int j) const {
    Vec c = cs.centers[static_cast<std::size_t>(j)];
    for (int i = 0; i < cs.n; ++i) c[i] += xi[static_cast<std::size_t>(j)][i];
    return Bubble(cs.n, std::move(c), lam[static_cast<std::size_t>(j)]);
}

double MultiBubble::u(const Vec& x) const {
    double s = 0.0;
    for (int j = 0; j < k(); ++j) s += bubble(j).value(x);
    return s;
}

Vec MultiBubble::u_grad(const Vec& x) const {
    Vec g(static_cast<std::size_t>(n()), 0.0);
    for (int j = 0; j < k(); ++j) {
        Vec gj = bubble(j).grad(x);
        for (int i = 0; i < n(); ++i) g[i] += gj[i];
    }
    return g;
}

void MultiBubble::write_csv(std::ostream& os) const {
    os.precision(17);
    os << "j";
    for (int i = 1; i <= n(); ++i) os << ",xi" << i;
    os << ",lambda\n";
    for (int j = 0; j < k(); ++j) {
        os << (j + 1);
        for (int i = 0; i < n(); ++i) os << "," << xi[static_cast<std::size_t>(j)][i];
        os << "," << lam[static_cast<std::size_t>(j)] << "\n";
    }
}

MultiBubble MultiBubble::read_csv(std::istream& is, const CenterSet& cs,
                                  bool constrained) {
    std::string line;
    std::getline(is, line);  // header
    std::vector<Vec> xi;
    std::vector<double> lam;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        require(row.size() == static_cast<std::size_t>(cs.n) + 2, Error::parse,
                "bubble csv row has wrong arity");
        Vec x(row.begin() + 1, row.end() - 1);
        xi.push_back(std::move(x));
        lam.push_back(row.back());
    }
    return MultiBubble::make(cs, std::move(xi), std::move(lam), constrained);
}

}  // namespace yamabe
