#ifndef EGH_RNG_HPP
#define EGH_RNG_HPP

#include <cstdint>
#include <string_view>

namespace egh {

// SplitMix64. Fixed across platforms and compilers, so every seeded run is
// bit-for-bit reproducible; the identifier below is recorded in log headers
// and bumps if the generator ever changes.
inline constexpr std::string_view kRngVersion = "splitmix64-v1";

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

  private:
    std::uint64_t state_;
};

// Per-trial seed derived from the master seed and the trial index; replaying
// one trial never needs the stream position of the others.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng mix(master ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return mix.next();
}

}  // namespace egh

#endif
