#pragma once

#include <cstdint>
#include <random>

namespace hgcolor {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for an independent stream, so trial i gives the same numbers no
// matter which thread runs it.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index + 0x51ed270b0a1cULL));
}

// mt19937_64 with hand-rolled draws; std::uniform_*_distribution is not
// pinned by the standard, these are.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, 1), 53-bit resolution
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double unit_open_closed() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform in [0, bound), unbiased
    int below(int bound) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return static_cast<int>(x % b);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hgcolor
