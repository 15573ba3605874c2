#include "hfield.hpp"

#include <cmath>

namespace yamabe {

HField::HField(std::shared_ptr<const WeylForm> w, double tau0)
    : w_(std::move(w)), tau0_(tau0) {
    require(static_cast<bool>(w_), Error::invalid_argument, "null weyl form");
    const int n = w_->dim();
    m_ = Mat(n);
    // M_{cd} = sum_{a,u,v} G_{auv c} G_{auv d} with G_{auv c} = W_{uavc} + W_{ucva}.
    // Assemble from the nonzero list: for fixed (u,v,a) the vector over c is
    // sparse, so accumulate outer products pairwise.
    // Direct quadruple loop over nonzeros would be O(nnz^2); instead loop
    // over (u,v,a) rows of the dense array once.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int a = 0; a < n; ++a) {
                // g[c] = W_{uavc} + W_{ucva}
                for (int c = 0; c < n; ++c) {
                    double gc = w_->at(u, a, v, c) + w_->at(u, c, v, a);
                    if (gc == 0.0) continue;
                    for (int d = c; d < n; ++d) {
                        double gd = w_->at(u, a, v, d) + w_->at(u, d, v, a);
                        if (gd == 0.0) continue;
                        m_(c, d) += gc * gd;
                    }
                }
            }
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < c; ++d) m_(c, d) = m_(d, c);
}

void HField::eval(const Vec& x, Mat& out) const {
    require(all_finite(x), Error::invalid_argument, "non-finite point");
    const int n = w_->dim();
    if (out.n != n) out = Mat(n);
    w_->contract_xx(x, out);
    double p = profile(dot(x, x), tau0_);
    for (double& v : out.a) v *= p;
}

Mat HField::eval(const Vec& x) const {
    Mat m;
    eval(x, m);
    return m;
}

void HField::apply(const Vec& x, const Vec& v, Vec& out) const {
    const int n = w_->dim();
    out.assign(static_cast<std::size_t>(n), 0.0);
    for (const WeylForm::Nonzero& z : w_->nonzeros())
        out[z.mu] += z.w * x[z.al] * x[z.be] * v[z.nu];
    double p = profile(dot(x, x), tau0_);
    for (double& o : out) o *= p;
}

void HField::eval_grad(const Vec& x, std::vector<Mat>& grad) const {
    require(all_finite(x), Error::invalid_argument, "non-finite point");
    const int n = w_->dim();
    grad.assign(static_cast<std::size_t>(n), Mat(n));
    double y = dot(x, x);
    double p = profile(y, tau0_);
    double dp = profile_d1(y);
    Mat s(n);
    w_->contract_xx(x, s);
    // D_a H_{uv} = 2 p' x_a S_{uv} + p (W_{uavc} + W_{ucva}) x_c
    for (int a = 0; a < n; ++a) {
        Mat& g = grad[a];
        double f = 2.0 * dp * x[a];
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) g(u, v) = f * s(u, v);
    }
    for (const WeylForm::Nonzero& z : w_->nonzeros()) {
        // W_{uavc}: contributes to D_a H_{uv} via both cutoff slots
        grad[z.al](z.mu, z.nu) += p * z.w * x[z.be];
        grad[z.be](z.mu, z.nu) += p * z.w * x[z.al];
    }
}

void HField::eval_hess(const Vec& x, std::vector<Mat>& hess) const {
    const int n = w_->dim();
    hess.assign(static_cast<std::size_t>(n) * n, Mat(n));
    double y = dot(x, x);
    double p = profile(y, tau0_);
    double dp = profile_d1(y);
    double ddp = profile_d2(y);
    Mat s(n);
    w_->contract_xx(x, s);
    // D_{ab} H = (4 p'' x_a x_b + 2 p' d_ab) S
    //          + 2 p' (x_a G_b + x_b G_a) + p (W_{uavb} + W_{ubva})
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mat& h = hess[static_cast<std::size_t>(a) * n + b];
            double f = 4.0 * ddp * x[a] * x[b] + (a == b ? 2.0 * dp : 0.0);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) h(u, v) = f * s(u, v);
        }
    for (const WeylForm::Nonzero& z : w_->nonzeros()) {
        // G_{c uv} = (W_{uavc}+W_{ucva}) x_c pieces, c running over al/be slots
        for (int a = 0; a < n; ++a) {
            double xa = x[a];
            hess[static_cast<std::size_t>(a) * n + z.al](z.mu, z.nu) +=
                2.0 * dp * xa * z.w * x[z.be];
            hess[static_cast<std::size_t>(a) * n + z.be](z.mu, z.nu) +=
                2.0 * dp * xa * z.w * x[z.al];
            hess[static_cast<std::size_t>(z.al) * n + a](z.mu, z.nu) +=
                2.0 * dp * xa * z.w * x[z.be];
            hess[static_cast<std::size_t>(z.be) * n + a](z.mu, z.nu) +=
                2.0 * dp * xa * z.w * x[z.al];
        }
        hess[static_cast<std::size_t>(z.al) * n + z.be](z.mu, z.nu) += p * z.w;
        hess[static_cast<std::size_t>(z.be) * n + z.al](z.mu, z.nu) += p * z.w;
    }
}

double HField::q4(const Vec& x) const {
    Mat s(w_->dim());
    w_->contract_xx(x, s);
    double q = 0.0;
    for (double v : s.a) q += v * v;
    return q;
}

double HField::q2_form(const Vec& x) const {
    const int n = w_->dim();
    double q = 0.0;
    for (int c = 0; c < n; ++c) {
        double row = 0.0;
        for (int d = 0; d < n; ++d) row += m_(c, d) * x[d];
        q += x[c] * row;
    }
    return q;
}

double HField::grad_square(const Vec& x) const {
    double y = dot(x, x);
    double p = profile(y, tau0_);
    double dp = profile_d1(y);
    double q4v = q4(x);
    return 4.0 * dp * dp * y * q4v + 8.0 * p * dp * q4v + p * p * q2_form(x);
}

}  // namespace yamabe
