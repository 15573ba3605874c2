#include "rng.hpp"

#include <cmath>

namespace yamabe {

std::uint64_t CounterRng::mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t batch, std::uint64_t index,
                               std::uint64_t slot) const {
    std::uint64_t h = mix(seed ^ 0x243f6a8885a308d3ULL);
    h = mix(h ^ stream);
    h = mix(h ^ batch);
    h = mix(h ^ index);
    h = mix(h ^ slot);
    return h;
}

double CounterRng::uniform(std::uint64_t batch, std::uint64_t index,
                           std::uint64_t slot) const {
    return (static_cast<double>(bits(batch, index, slot) >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t batch, std::uint64_t index,
                          std::uint64_t slot) const {
    double u1 = uniform(batch, index, 2 * slot);
    double u2 = uniform(batch, index, 2 * slot + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Vec CounterRng::sphere_dir(int n, std::uint64_t batch, std::uint64_t index) const {
    Vec d(static_cast<std::size_t>(n));
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        d[i] = normal(batch, index, 100 + static_cast<std::uint64_t>(i));
        s2 += d[i] * d[i];
    }
    double inv = 1.0 / std::sqrt(s2);
    for (double& x : d) x *= inv;
    return d;
}

Vec CounterRng::ball_point(int n, std::uint64_t batch, std::uint64_t index) const {
    Vec d = sphere_dir(n, batch, index);
    double u = uniform(batch, index, 99);
    double rad = std::pow(u, 1.0 / n);
    for (double& x : d) x *= rad;
    return d;
}

}  // namespace yamabe
