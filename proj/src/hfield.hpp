#pragma once

#include <memory>

#include "common.hpp"
#include "weyl.hpp"

namespace yamabe {

// The perturbation profile H_{uv}(x) = p(|x|^2) W_{uavb} x_a x_b with
// p(y) = tau0 + 5y - y^2 + y^3/20. Trace-free, annihilates x, and
// divergence-free, all exactly from the algebra of W.
class HField {
  public:
    HField(std::shared_ptr<const WeylForm> w, double tau0);

    int dim() const { return w_->dim(); }
    double tau0() const { return tau0_; }
    const WeylForm& weyl() const { return *w_; }

    static double profile(double y, double tau0) {
        return tau0 + y * (5.0 + y * (-1.0 + y / 20.0));
    }
    static double profile_d1(double y) { return 5.0 + y * (-2.0 + 0.15 * y); }
    static double profile_d2(double y) { return -2.0 + 0.3 * y; }

    // H(x), symmetric n x n
    void eval(const Vec& x, Mat& out) const;
    Mat eval(const Vec& x) const;

    // D_a H_{uv}(x), laid out as grad[a](u,v)
    void eval_grad(const Vec& x, std::vector<Mat>& grad) const;

    // D_{ab} H_{uv}(x); hess[a*n+b](u,v)
    void eval_hess(const Vec& x, std::vector<Mat>& hess) const;

    // sum over all indices of (D_a H_{uv})^2, evaluated through the
    // structured decomposition 4 p'^2 |x|^2 Q4 + 8 p p' Q4 + p^2 Q2 with
    // Q4 = sum S_{uv}^2 and Q2 = x^T M x
    double grad_square(const Vec& x) const;

    // the two W-invariants entering grad_square
    double q4(const Vec& x) const;      // sum_{uv} (W_{uavb} x_a x_b)^2
    double q2_form(const Vec& x) const; // x^T M x

    // H(x) v without forming the matrix
    void apply(const Vec& x, const Vec& v, Vec& out) const;

  private:
    std::shared_ptr<const WeylForm> w_;
    double tau0_;
    Mat m_;  // M_{cd} = sum_{auv}(W_{uavc}+W_{ucva})(W_{uavd}+W_{udva})
};

}  // namespace yamabe
