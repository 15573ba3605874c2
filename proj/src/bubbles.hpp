#pragma once

#include <optional>
#include <vector>

#include "common.hpp"
#include "lattice.hpp"

namespace yamabe {

// Aubin-Talenti bubble sigma_{xi,lambda}(x) = lam^{(n-2)/2} (1+lam^2|x-xi|^2)^{-(n-2)/2}.
// All derivatives are hand-derived closed forms; the radial profile and its
// derivatives in w = rho^2 are exposed for the quadrature reductions.
struct Bubble {
    int n = 0;
    Vec center;
    double lam = 1.0;

    Bubble(int n_, Vec c, double l) : n(n_), center(std::move(c)), lam(l) {
        require(l > 0.0, Error::invalid_argument, "concentration must be positive");
    }

    // F(w) = lam^{(n-2)/2}(1+lam^2 w)^{-(n-2)/2} and derivatives in w
    double profile(double w) const;
    double profile_d1(double w) const;
    double profile_d2(double w) const;
    double profile_d3(double w) const;

    double value(const Vec& x) const;
    Vec grad(const Vec& x) const;
    Mat hess(const Vec& x) const;
    double laplacian(const Vec& x) const;

    // PDE residual -Lap(sigma) - n(n-2) sigma^{(n+2)/(n-2)}
    double pde_residual(const Vec& x) const;

    // tangent fields: mu = 0 is d/d lambda, mu >= 1 is d/d xi_mu
    double z(int mu, const Vec& x) const;
    Vec z_grad(int mu, const Vec& x) const;
};

// D_u s D_v s - c D_uv(s^2) - (1/n)(|Ds|^2 - c Lap(s^2)) delta_uv,
// which vanishes identically when c = (n-2)/(4(n-1)).
Mat pointwise_bubble_identity(const Bubble& b, const Vec& x, double c);

inline double conformal_cn(int n) { return (n - 2) / (4.0 * (n - 1)); }

// Multi-bubble configuration: one (xi, lam) pair per center. Constrained
// mode enforces the parameter box 3/4 < lam < 4/3, |xi| < 1/2.
struct MultiBubble {
    CenterSet cs;
    std::vector<Vec> xi;
    std::vector<double> lam;
    bool constrained = true;

    static MultiBubble base_config(const CenterSet& cs);  // xi = 0, lam = 1
    static MultiBubble make(const CenterSet& cs, std::vector<Vec> xi,
                            std::vector<double> lam, bool constrained);

    int n() const { return cs.n; }
    int k() const { return cs.k; }

    Bubble bubble(int j) const;

    double u(const Vec& x) const;
    Vec u_grad(const Vec& x) const;

    double z(int j, int mu, const Vec& x) const { return bubble(j).z(mu, x); }

    void write_csv(std::ostream& os) const;
    static MultiBubble read_csv(std::istream& is, const CenterSet& cs, bool constrained);
};

}  // namespace yamabe
