#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "common.hpp"

namespace yamabe {

// Rank-4 coefficient array with the algebraic symmetries of a Weyl tensor:
//   W_{uavb} = W_{vbua} = -W_{auvb} = -W_{uabv},
//   W_{uavb} + W_{uvba} + W_{ubav} = 0,
//   W_{uaub} = 0 (all traces vanish with the symmetries above).
// Immutable after construction; dense n^4 storage plus a nonzero list for
// fast contractions.
class WeylForm {
  public:
    WeylForm(int n, Vec coeffs);

    int dim() const { return n_; }
    double at(int mu, int al, int nu, int be) const {
        return c_[idx(mu, al, nu, be)];
    }
    const Vec& coeffs() const { return c_; }

    // max-norm residuals of the four invariant families:
    // [0] antisymmetry (both pairs), [1] pair-exchange symmetry,
    // [2] first Bianchi identity, [3] trace-freeness
    std::array<double, 4> symmetry_residuals() const;

    // sum over all indices of (W_{uavb} + W_{ubva})^2
    double nontriviality() const;

    double frob() const;

    struct Nonzero {
        int mu, al, nu, be;
        double w;
    };
    const std::vector<Nonzero>& nonzeros() const { return nz_; }

    // S_{uv}(x) = W_{uavb} x_a x_b, written into s (n*n)
    void contract_xx(const Vec& x, Mat& s) const;

    void write(std::ostream& os) const;
    static WeylForm read(std::istream& is);

  private:
    std::size_t idx(int mu, int al, int nu, int be) const {
        return ((static_cast<std::size_t>(mu) * n_ + al) * n_ + nu) * n_ + be;
    }
    int n_;
    Vec c_;
    std::vector<Nonzero> nz_;
};

// Orthogonal projection (Frobenius) of an arbitrary rank-4 array onto the
// space of algebraic Weyl tensors. Idempotent.
WeylForm project_to_weyl(const Vec& t, int n);

// Deterministic seed-free instance: project the tensor
// S_{uavb} = w_{ua} w_{vb} built from the 2-form w_12 = -w_21 = w_34 = -w_43 = 1,
// then normalize to unit Frobenius norm.
WeylForm canonical_weyl(int n);

}  // namespace yamabe
