#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "common.hpp"

namespace yamabe {

// k centers on the circle of radius r in the (x1,x2)-plane:
// P^j = O^{k,j}(r,0,...,0), O^{k,j} the planar rotation by 2*pi*(j-1)/k.
// Shared by the lattice proper and by the free-mode helpers of the
// weighted-norm and bubble modules.
struct CenterSet {
    int n = 0;
    int k = 0;
    double r = 0.0;
    std::vector<Vec> centers;

    // minimal pairwise distance 2 r sin(pi/k) (r for k=1,2 degenerate cases)
    double min_separation() const;
    double dist_min(const Vec& x) const;   // d(x) = min_j <x - P^j>
    double weight_sum(const Vec& x, double s) const;  // sum_j <x-P^j>^{-s}
};

CenterSet make_centers(int n, int k, double r);

// Geometric stage for one level k: centers plus the scale parameters.
// t is kept with its exact logarithm so t^(8+c0)-type powers never go
// through a subnormal double.
struct Lattice {
    CenterSet cs;
    double t = 0.0;
    double ln_t = 0.0;
    double eps = 0.0;
    double c0 = 0.0;
    bool paper_regime = false;

    int n() const { return cs.n; }
    int k() const { return cs.k; }
    double r() const { return cs.r; }
    const std::vector<Vec>& centers() const { return cs.centers; }

    double support_radius() const;  // (k^2 t)^{-1}, exact support of the level field

    std::string config_text() const;
    void centers_csv(std::ostream& os) const;
};

Lattice make_lattice(int n, int k, double r, double t, double eps, double c0);
// paper regime: t = e^{-k}, r = e^k / k
Lattice make_lattice_paper(int n, int k, double eps, double c0);

Lattice lattice_from_config(const std::string& text);

}  // namespace yamabe
