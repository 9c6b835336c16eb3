#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace nrc {

// Deterministic generator used throughout the check suites.  Outputs are
// reproducible across platforms and runs for a given seed, which is what the
// byte-identical-output guarantee of the CLI rests on.  splitmix64 is used
// both as the stream generator and to derive independent per-batch seeds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; avoids log(0) by shifting into (0,1].
    double gaussian() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::complex<double> complex_gaussian() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = uniform();
        double r = std::sqrt(-std::log(u1));
        double t = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        Rng g(seed ^ (0x94d049bb133111ebull * (stream + 1)));
        return g.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace nrc
