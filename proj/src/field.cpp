#include "field.hpp"

#include <cmath>

namespace yamabe {

Rational SingleLevelField::rational_8_c0() const {
    // exact when c0 is a multiple of 1/64; otherwise nearest such rational
    long long num = std::llround(lat->c0 * 64.0);
    return Rational(8 * 64 + num, 64);
}

namespace {

// cutoff argument for center j: k^4 t^2 |x-P|^2; its radial derivative chain
struct LevelGeom {
    double kt4t2;
    LevelGeom(const Lattice& lat) {
        double k = lat.k();
        kt4t2 = k * k * k * k * std::exp(2.0 * lat.ln_t);
    }
};

}  // namespace

void SingleLevelField::eval(const Vec& x, Mat& out) const {
    require(all_finite(x), Error::invalid_argument, "non-finite point");
    const int n = lat->n();
    if (out.n != n) out = Mat(n);
    else std::fill(out.a.begin(), out.a.end(), 0.0);
    LevelGeom geo(*lat);
    Mat hij;
    Vec y(static_cast<std::size_t>(n));
    for (const Vec& p : lat->centers()) {
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] = x[i] - p[i];
            d2 += y[i] * y[i];
        }
        double s = geo.kt4t2 * d2;
        if (s >= 1.0) continue;
        double et = CutoffProfile::value(s);
        h->eval(y, hij);
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += et * hij.a[i];
    }
}

void SingleLevelField::eval_grad(const Vec& x, Mat& out, std::vector<Mat>& grad) const {
    const int n = lat->n();
    if (out.n != n) out = Mat(n);
    else std::fill(out.a.begin(), out.a.end(), 0.0);
    grad.assign(static_cast<std::size_t>(n), Mat(n));
    LevelGeom geo(*lat);
    Mat hij;
    std::vector<Mat> hg;
    Vec y(static_cast<std::size_t>(n));
    for (const Vec& p : lat->centers()) {
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] = x[i] - p[i];
            d2 += y[i] * y[i];
        }
        double s = geo.kt4t2 * d2;
        if (s >= 1.0) continue;
        double et = CutoffProfile::value(s);
        double etp = CutoffProfile::d1(s);
        h->eval(y, hij);
        h->eval_grad(y, hg);
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += et * hij.a[i];
        // D_a [eta(s) H] = eta'(s) * 2 geo * y_a * H + eta(s) D_a H
        for (int a = 0; a < n; ++a) {
            double ca = etp * 2.0 * geo.kt4t2 * y[a];
            Mat& g = grad[a];
            for (std::size_t i = 0; i < g.a.size(); ++i)
                g.a[i] += ca * hij.a[i] + et * hg[a].a[i];
        }
    }
}

void SingleLevelField::eval_hess(const Vec& x, Mat& out, std::vector<Mat>& grad,
                                 std::vector<Mat>& hess) const {
    const int n = lat->n();
    if (out.n != n) out = Mat(n);
    else std::fill(out.a.begin(), out.a.end(), 0.0);
    grad.assign(static_cast<std::size_t>(n), Mat(n));
    hess.assign(static_cast<std::size_t>(n) * n, Mat(n));
    LevelGeom geo(*lat);
    Mat hij;
    std::vector<Mat> hg, hh;
    Vec y(static_cast<std::size_t>(n));
    for (const Vec& p : lat->centers()) {
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] = x[i] - p[i];
            d2 += y[i] * y[i];
        }
        double s = geo.kt4t2 * d2;
        if (s >= 1.0) continue;
        double et = CutoffProfile::value(s);
        double etp = CutoffProfile::d1(s);
        double etpp = CutoffProfile::d2(s);
        h->eval(y, hij);
        h->eval_grad(y, hg);
        h->eval_hess(y, hh);
        for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += et * hij.a[i];
        double c = 2.0 * geo.kt4t2;
        for (int a = 0; a < n; ++a) {
            double ca = etp * c * y[a];
            Mat& g = grad[a];
            for (std::size_t i = 0; i < g.a.size(); ++i)
                g.a[i] += ca * hij.a[i] + et * hg[a].a[i];
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Mat& hb = hess[static_cast<std::size_t>(a) * n + b];
                double cab = etpp * c * c * y[a] * y[b] + (a == b ? etp * c : 0.0);
                double ca = etp * c * y[a];
                double cb = etp * c * y[b];
                const Mat& hab = hh[static_cast<std::size_t>(a) * n + b];
                for (std::size_t i = 0; i < hb.a.size(); ++i)
                    hb.a[i] += cab * hij.a[i] + ca * hg[b].a[i] + cb * hg[a].a[i] +
                               et * hab.a[i];
            }
    }
}

double SingleLevelField::grad_square(const Vec& x) const {
    const int n = lat->n();
    LevelGeom geo(*lat);
    double total = 0.0;
    Vec y(static_cast<std::size_t>(n));
    for (const Vec& p : lat->centers()) {
        double d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] = x[i] - p[i];
            d2 += y[i] * y[i];
        }
        double s = geo.kt4t2 * d2;
        if (s >= 1.0) continue;
        double et = CutoffProfile::value(s);
        double etp = CutoffProfile::d1(s);
        // (D(eta H))^2 = (eta' 2c y_a H + eta D_a H)^2 summed; with
        // q4 = sum S^2 and x.DH = 2(p' rho^2 + p) S the cross term closes.
        double rho2 = d2;
        double pv = HField::profile(rho2, h->tau0());
        double dpv = HField::profile_d1(rho2);
        double q4 = h->q4(y);
        double c = 2.0 * geo.kt4t2;
        double h2 = pv * pv * q4;                       // sum H_{uv}^2
        double ydh = 2.0 * pv * (dpv * rho2 + pv) * q4; // sum y_a H_uv D_a H_uv
        double gs = h->grad_square(y);
        total += etp * etp * c * c * rho2 * h2 + 2.0 * etp * c * et * ydh +
                 et * et * gs;
    }
    return total;
}

SeriesResult eval_h_full_series(const Vec& xhat, const HField& h, double c0, int k_max) {
    require(k_max >= 3, Error::invalid_argument, "series truncation needs k_max >= 3");
    const int n = h.dim();
    SeriesResult res;
    res.value = Mat(n);
    Mat hij;
    Vec y(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n));
    for (int k = 3; k <= k_max; ++k) {
        double ek = std::exp(static_cast<double>(k));
        double w = std::exp(-(8.0 + c0) * k);
        double k4 = std::pow(static_cast<double>(k), 4.0);
        CenterSet cs = make_centers(n, k, 1.0 / k);
        for (const Vec& p : cs.centers) {
            double d2 = 0.0;
            for (int i = 0; i < n; ++i) {
                y[i] = xhat[i] - p[i];
                d2 += y[i] * y[i];
            }
            if (k4 * d2 >= 1.0) continue;
            double et = CutoffProfile::value(k4 * d2);
            for (int i = 0; i < n; ++i) z[i] = ek * y[i];
            h.eval(z, hij);
            for (std::size_t i = 0; i < res.value.a.size(); ++i)
                res.value.a[i] += w * et * hij.a[i];
        }
    }
    // tail bound: per level, sup of e^{-8k}|H(e^k y)| over the support is
    // within the sup of |H| over the unit ball; geometric sum of e^{-c0 k}
    double sup_h = 0.0;
    {
        Vec probe(static_cast<std::size_t>(n), 0.0);
        for (int m = 1; m <= 32; ++m) {
            double rad = m / 32.0;
            probe.assign(static_cast<std::size_t>(n), 0.0);
            probe[0] = rad * 0.6;
            probe[1] = rad * 0.64;
            probe[2] = rad * 0.48;
            Mat hm = h.eval(probe);
            sup_h = std::max(sup_h, hm.max_abs());
        }
    }
    res.tail_bound = sup_h * std::exp(-c0 * (k_max + 1)) / (1.0 - std::exp(-c0));
    return res;
}

double series_deriv_max(const Vec& xhat, const HField& h, double c0, int k_max, int m) {
    require(m == 0 || m == 1, Error::invalid_argument, "only m = 0,1 supported");
    const int n = h.dim();
    if (m == 0) return eval_h_full_series(xhat, h, c0, k_max).value.max_abs();
    double best = 0.0;
    Mat hij;
    std::vector<Mat> hg;
    Vec y(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n));
    std::vector<Mat> acc(static_cast<std::size_t>(n), Mat(n));
    for (int k = 3; k <= k_max; ++k) {
        double ek = std::exp(static_cast<double>(k));
        double w = std::exp(-(8.0 + c0) * k);
        double k4 = std::pow(static_cast<double>(k), 4.0);
        CenterSet cs = make_centers(n, k, 1.0 / k);
        for (const Vec& p : cs.centers) {
            double d2 = 0.0;
            for (int i = 0; i < n; ++i) {
                y[i] = xhat[i] - p[i];
                d2 += y[i] * y[i];
            }
            if (k4 * d2 >= 1.0) continue;
            double et = CutoffProfile::value(k4 * d2);
            double etp = CutoffProfile::d1(k4 * d2);
            for (int i = 0; i < n; ++i) z[i] = ek * y[i];
            h.eval(z, hij);
            h.eval_grad(z, hg);
            for (int a = 0; a < n; ++a) {
                double ca = etp * 2.0 * k4 * y[a];
                Mat& g = acc[a];
                for (std::size_t i = 0; i < g.a.size(); ++i)
                    g.a[i] += w * (ca * hij.a[i] + et * ek * hg[a].a[i]);
            }
        }
    }
    for (const Mat& g : acc) best = std::max(best, g.max_abs());
    return best;
}

MetricResult metric_from_field(const Mat& n_value, double s) {
    const int n = n_value.n;
    MetricResult r;
    Mat sh = n_value;
    for (double& v : sh.a) v *= s;
    r.g_dn = sym_exp(sh);
    Mat msh = sh;
    for (double& v : msh.a) v = -v;
    r.g_up = sym_exp(msh);
    r.det_g = std::exp(sh.trace());
    // order-2 truncations
    Mat h2 = mul(sh, sh);
    r.order2_dn = Mat::identity(n);
    r.order2_up = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.order2_dn(i, j) += sh(i, j) + 0.5 * h2(i, j);
            r.order2_up(i, j) += -sh(i, j) + 0.5 * h2(i, j);
        }
    return r;
}

MetricResult metric_at(const Vec& x, const SingleLevelField& f) {
    ScaledQuantity sc = f.scale();
    require(sc.materializable(f.lat->ln_t, std::log(f.lat->eps)), Error::domain,
            "eps * t^(8+c0) underflows; use the symbolic expansion instead");
    double s = sc.materialize(f.lat->ln_t, std::log(f.lat->eps));
    Mat nv;
    f.eval(x, nv);
    return metric_from_field(nv, s);
}

CurvaturePair curvature_expansion(const Vec& x, const SingleLevelField& f) {
    const int n = f.lat->n();
    Mat nv;
    std::vector<Mat> g, hh;
    f.eval_hess(x, nv, g, hh);
    CurvaturePair out;
    // R1 = D_uv N_uv - D_uu N_vv
    double r1a = 0.0, r1b = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            r1a += hh[static_cast<std::size_t>(u) * n + v](u, v);
            r1b += hh[static_cast<std::size_t>(u) * n + u](v, v);
        }
    out.r1 = r1a - r1b;
    // five-term R2
    double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0, t5 = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            double huv = nv(u, v);
            for (int a = 0; a < n; ++a) {
                t1 += huv * (hh[static_cast<std::size_t>(u) * n + v](a, a) -
                             hh[static_cast<std::size_t>(u) * n + a](a, v));
                t2 += g[u](u, v) * g[v](a, a);
                t3 += g[u](u, v) * g[a](a, v);
                t4 += g[u](v, v) * g[u](a, a);
                t5 += g[u](v, a) * g[u](v, a);
            }
        }
    out.r2 = t1 + t2 - 0.5 * t3 - 0.25 * t4 - 0.25 * t5;
    return out;
}

}  // namespace yamabe
