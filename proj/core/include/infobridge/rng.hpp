#pragma once

#include <array>
#include <cstdint>

namespace infobridge {

namespace detail {

/// splitmix64 step; used both for seeding and for substream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Inverse of the standard normal CDF (Wichura's AS 241, double precision).
/// Accurate to about 1e-15 over (0,1).
double inverse_normal_cdf(double p);

}  // namespace detail

/// Seeded, splittable random stream (xoshiro256++ core, inverse-CDF normals).
///
/// The generator is self-contained so that simulation output is bit-identical
/// across platforms and standard libraries. Substreams for parallel ensembles
/// are derived by the documented splitting rule
///     child_seed = splitmix64(parent_seed ^ golden * (index + 1)),
/// so ensembles reproduce for a fixed master seed regardless of thread count.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    std::uint64_t seed() const { return seed_; }

    /// Substream `index`; independent of draws already made on the parent.
    RandomStream substream(std::uint64_t index) const {
        std::uint64_t sm = seed_ ^ (0x9e3779b97f4a7c15ull * (index + 1));
        return RandomStream(detail::splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform draw on the open interval (0,1); safe as inverse-CDF input.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw via the inverse CDF (monotone in the uniform).
    double normal() { return detail::inverse_normal_cdf(uniform()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
};

}  // namespace infobridge
