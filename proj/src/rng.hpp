#pragma once

#include <cstdint>
#include <random>

namespace planechroma::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Portable stream: mt19937_64 output mapped to [0,1) without library distributions.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t lane) : gen_(splitmix64(seed ^ splitmix64(lane + 1))) {}
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace planechroma::detail
