#include "weyl.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace yamabe {

namespace {

std::size_t idx4(int n, int mu, int al, int nu, int be) {
    return ((static_cast<std::size_t>(mu) * n + al) * n + nu) * n + be;
}

}  // namespace

WeylForm::WeylForm(int n, Vec coeffs) : n_(n), c_(std::move(coeffs)) {
    require(n_ >= 4, Error::invalid_argument, "weyl form needs dimension >= 4");
    require(c_.size() == static_cast<std::size_t>(n_) * n_ * n_ * n_,
            Error::invalid_argument, "coefficient array has wrong size");
    require(all_finite(c_), Error::invalid_argument, "non-finite weyl coefficients");
    double scale = 0.0;
    for (double v : c_) scale = std::max(scale, std::fabs(v));
    double cut = scale * 1e-15;
    for (int mu = 0; mu < n_; ++mu)
        for (int al = 0; al < n_; ++al)
            for (int nu = 0; nu < n_; ++nu)
                for (int be = 0; be < n_; ++be) {
                    double w = c_[idx(mu, al, nu, be)];
                    if (std::fabs(w) > cut) nz_.push_back({mu, al, nu, be, w});
                }
}

std::array<double, 4> WeylForm::symmetry_residuals() const {
    double anti = 0.0, pair = 0.0, bianchi = 0.0, trace = 0.0;
    for (int mu = 0; mu < n_; ++mu)
        for (int al = 0; al < n_; ++al) {
            for (int nu = 0; nu < n_; ++nu) {
                double tr = 0.0;
                for (int m = 0; m < n_; ++m) tr += at(m, mu, m, al);
                trace = std::max(trace, std::fabs(tr));
                for (int be = 0; be < n_; ++be) {
                    double w = at(mu, al, nu, be);
                    anti = std::max(anti, std::fabs(w + at(al, mu, nu, be)));
                    anti = std::max(anti, std::fabs(w + at(mu, al, be, nu)));
                    pair = std::max(pair, std::fabs(w - at(nu, be, mu, al)));
                    bianchi = std::max(
                        bianchi, std::fabs(w + at(mu, nu, be, al) + at(mu, be, al, nu)));
                }
            }
        }
    return {anti, pair, bianchi, trace};
}

double WeylForm::nontriviality() const {
    double s = 0.0;
    for (int mu = 0; mu < n_; ++mu)
        for (int al = 0; al < n_; ++al)
            for (int nu = 0; nu < n_; ++nu)
                for (int be = 0; be < n_; ++be) {
                    double v = at(mu, al, nu, be) + at(mu, be, nu, al);
                    s += v * v;
                }
    return s;
}

double WeylForm::frob() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return std::sqrt(s);
}

void WeylForm::contract_xx(const Vec& x, Mat& s) const {
    if (s.n != n_) s = Mat(n_);
    else std::fill(s.a.begin(), s.a.end(), 0.0);
    for (const Nonzero& z : nz_) s(z.mu, z.nu) += z.w * x[z.al] * x[z.be];
}

void WeylForm::write(std::ostream& os) const {
    os << "weylform n=" << n_ << "\n";
    os.precision(17);
    for (const Nonzero& z : nz_)
        os << z.mu << " " << z.al << " " << z.nu << " " << z.be << " " << z.w << "\n";
}

WeylForm WeylForm::read(std::istream& is) {
    std::string header;
    std::getline(is, header);
    int n = 0;
    if (std::sscanf(header.c_str(), "weylform n=%d", &n) != 1)
        fail(Error::parse, "bad weylform header: " + header);
    require(n >= 4, Error::parse, "weylform header has n < 4");
    Vec c(static_cast<std::size_t>(n) * n * n * n, 0.0);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int mu, al, nu, be;
        double w;
        if (!(ls >> mu >> al >> nu >> be >> w))
            fail(Error::parse, "bad weylform row: " + line);
        require(mu >= 0 && mu < n && al >= 0 && al < n && nu >= 0 && nu < n &&
                    be >= 0 && be < n,
                Error::parse, "weylform index out of range");
        c[idx4(n, mu, al, nu, be)] = w;
    }
    return WeylForm(n, std::move(c));
}

WeylForm project_to_weyl(const Vec& t, int n) {
    require(n >= 4, Error::invalid_argument, "projection needs dimension >= 4");
    require(t.size() == static_cast<std::size_t>(n) * n * n * n,
            Error::invalid_argument, "input array has wrong size");
    require(all_finite(t), Error::invalid_argument, "non-finite input tensor");

    auto id = [n](int a, int b, int c, int d) { return idx4(n, a, b, c, d); };
    Vec a(t.size());

    // antisymmetrize both pairs
    for (int mu = 0; mu < n; ++mu)
        for (int al = 0; al < n; ++al)
            for (int nu = 0; nu < n; ++nu)
                for (int be = 0; be < n; ++be)
                    a[id(mu, al, nu, be)] =
                        0.25 * (t[id(mu, al, nu, be)] - t[id(al, mu, nu, be)] -
                                t[id(mu, al, be, nu)] + t[id(al, mu, be, nu)]);

    // symmetrize pair exchange
    Vec b(t.size());
    for (int mu = 0; mu < n; ++mu)
        for (int al = 0; al < n; ++al)
            for (int nu = 0; nu < n; ++nu)
                for (int be = 0; be < n; ++be)
                    b[id(mu, al, nu, be)] =
                        0.5 * (a[id(mu, al, nu, be)] + a[id(nu, be, mu, al)]);

    // remove the totally antisymmetric part: the cyclic sum over the last
    // three slots projects onto it within this symmetry class
    Vec r(t.size());
    for (int mu = 0; mu < n; ++mu)
        for (int al = 0; al < n; ++al)
            for (int nu = 0; nu < n; ++nu)
                for (int be = 0; be < n; ++be) {
                    double cyc = (b[id(mu, al, nu, be)] + b[id(mu, nu, be, al)] +
                                  b[id(mu, be, al, nu)]) / 3.0;
                    r[id(mu, al, nu, be)] = b[id(mu, al, nu, be)] - cyc;
                }

    // subtract the Ricci part through the Kulkarni-Nomizu products
    // r = w + (S kn delta)/(n-2) + scal (delta kn delta)/(2n(n-1))
    Vec ric(static_cast<std::size_t>(n) * n, 0.0);
    for (int al = 0; al < n; ++al)
        for (int be = 0; be < n; ++be) {
            double s = 0.0;
            for (int m = 0; m < n; ++m) s += r[id(m, al, m, be)];
            ric[static_cast<std::size_t>(al) * n + be] = s;
        }
    double scal = 0.0;
    for (int al = 0; al < n; ++al) scal += ric[static_cast<std::size_t>(al) * n + al];
    Vec s0 = ric;  // trace-free Ricci
    for (int al = 0; al < n; ++al) s0[static_cast<std::size_t>(al) * n + al] -= scal / n;

    auto kn_sd = [&](int mu, int al, int nu, int be) {
        auto S = [&](int i, int j) { return s0[static_cast<std::size_t>(i) * n + j]; };
        auto D = [](int i, int j) { return i == j ? 1.0 : 0.0; };
        return S(mu, nu) * D(al, be) + S(al, be) * D(mu, nu) - S(mu, be) * D(al, nu) -
               S(al, nu) * D(mu, be);
    };
    auto kn_dd = [&](int mu, int al, int nu, int be) {
        auto D = [](int i, int j) { return i == j ? 1.0 : 0.0; };
        return 2.0 * (D(mu, nu) * D(al, be) - D(mu, be) * D(al, nu));
    };

    for (int mu = 0; mu < n; ++mu)
        for (int al = 0; al < n; ++al)
            for (int nu = 0; nu < n; ++nu)
                for (int be = 0; be < n; ++be)
                    r[id(mu, al, nu, be)] -= kn_sd(mu, al, nu, be) / (n - 2) +
                                             scal * kn_dd(mu, al, nu, be) /
                                                 (2.0 * n * (n - 1));

    return WeylForm(n, std::move(r));
}

WeylForm canonical_weyl(int n) {
    require(n >= 4, Error::invalid_argument, "canonical weyl form needs n >= 4");
    Vec omega(static_cast<std::size_t>(n) * n, 0.0);
    omega[0 * n + 1] = 1.0;
    omega[1 * n + 0] = -1.0;
    omega[2 * n + 3] = 1.0;
    omega[3 * n + 2] = -1.0;
    Vec seed(static_cast<std::size_t>(n) * n * n * n, 0.0);
    for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al)
            for (int nu = 0; nu < 4; ++nu)
                for (int be = 0; be < 4; ++be)
                    seed[idx4(n, mu, al, nu, be)] =
                        omega[static_cast<std::size_t>(mu) * n + al] *
                        omega[static_cast<std::size_t>(nu) * n + be];
    WeylForm w = project_to_weyl(seed, n);
    require(w.nontriviality() > 0.0, Error::domain,
            "canonical seed projected to a trivial form");
    double f = w.frob();
    Vec c = w.coeffs();
    for (double& v : c) v /= f;
    return WeylForm(n, std::move(c));
}

}  // namespace yamabe
