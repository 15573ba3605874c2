#pragma once

#include "cutoff.hpp"
#include "hfield.hpp"
#include "lattice.hpp"
#include "scaled.hpp"

namespace yamabe {

// Level-k glued field in scaled coordinates. The raw profile is
//   N(x) = sum_j eta(k^4 t^2 |x-P^j|^2) H(x-P^j),
// and the physical metric perturbation at level k is eps * t^(8+c0) * N(x).
// N vanishes exactly outside the balls B(P^j, (k^2 t)^{-1}), is trace-free
// and divergence-free.
struct SingleLevelField {
    const Lattice* lat;
    const HField* h;

    // scale carried by the level field: (1, 8+c0, 1)
    ScaledQuantity scale() const {
        // c0 enters an exponent; rationals keep it exact for the default
        // integer/half-integer choices and fall back to a close rational.
        return {1.0, rational_8_c0(), 1};
    }
    Rational rational_8_c0() const;

    void eval(const Vec& x, Mat& out) const;
    // first derivatives: grad[a](u,v) = D_a N_{uv}
    void eval_grad(const Vec& x, Mat& out, std::vector<Mat>& grad) const;
    // second derivatives as well: hess[a*n+b](u,v) = D_ab N_{uv}
    void eval_hess(const Vec& x, Mat& out, std::vector<Mat>& grad,
                   std::vector<Mat>& hess) const;

    // sum over indices of (D_a N_{uv})^2 without forming the gradient,
    // exploiting the structured form of H (single contributing center only)
    double grad_square(const Vec& x) const;
};

// Unit-scale series  hhat(x) = sum_{level>=3} e^{-(8+c0) level} hhat_level(x),
// hhat_level(x) = sum_j eta(level^4 |x-Phat^j|^2) H(e^level (x-Phat^j)).
struct SeriesResult {
    Mat value;
    double tail_bound = 0.0;
};
SeriesResult eval_h_full_series(const Vec& xhat, const HField& h, double c0, int k_max);
// m-th derivative magnitude probe of the series (m = 0 or 1): max abs entry
double series_deriv_max(const Vec& xhat, const HField& h, double c0, int k_max, int m);

struct MetricResult {
    Mat g_dn;
    Mat g_up;
    double det_g = 1.0;
    Mat order2_dn;  // delta + s h + s^2 h^2/2
    Mat order2_up;  // delta - s h + s^2 h^2/2
};

// Metric exp(s N(x)) for an explicit scalar s (callers materialize
// eps * t^(8+c0) themselves when representable).
MetricResult metric_from_field(const Mat& n_value, double s);

// Physical metric at x: s = eps * t^(8+c0); fails if not representable.
MetricResult metric_at(const Vec& x, const SingleLevelField& f);

// First and second order scalar-curvature coefficients of exp(s N) in s:
//   R1 = D_uv N_uv - D_uu N_vv   (vanishes for this field; still computed)
//   R2 = N_uv (D_uv N_aa - D_ua N_av) + D_u N_uv D_v N_aa
//        - 1/2 D_u N_uv D_a N_av - 1/4 D_u N_vv D_u N_aa - 1/4 (D_u N_va)^2
struct CurvaturePair {
    double r1 = 0.0;
    double r2 = 0.0;
};
CurvaturePair curvature_expansion(const Vec& x, const SingleLevelField& f);

}  // namespace yamabe
