#pragma once

#include <cstdint>

#include "common.hpp"

namespace yamabe {

// Counter-based generator: every draw is a pure function of
// (seed, stream, batch, index, slot). No state is carried between draws,
// so parallel batch evaluation is reproducible regardless of scheduling.
struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    static std::uint64_t mix(std::uint64_t x);
    std::uint64_t bits(std::uint64_t batch, std::uint64_t index, std::uint64_t slot) const;

    // uniform in (0,1)
    double uniform(std::uint64_t batch, std::uint64_t index, std::uint64_t slot) const;
    // standard normal (Box-Muller, consumes slots 2*slot and 2*slot+1)
    double normal(std::uint64_t batch, std::uint64_t index, std::uint64_t slot) const;

    // uniform direction on S^{n-1}
    Vec sphere_dir(int n, std::uint64_t batch, std::uint64_t index) const;
    // uniform point in the unit ball of R^n
    Vec ball_point(int n, std::uint64_t batch, std::uint64_t index) const;
};

}  // namespace yamabe
