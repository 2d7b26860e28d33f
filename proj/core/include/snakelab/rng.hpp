#pragma once

#include <cstdint>
#include <random>

namespace snakelab {

/// splitmix64 step, used to key per-replica streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic stream RNG.  An experiment is identified by
/// (master seed, stream index); every replica owns one stream, so results
/// are reproducible independently of scheduling and thread count.
class Rng {
public:
    using result_type = std::uint64_t;

    Rng(std::uint64_t master_seed, std::uint64_t stream) {
        std::uint64_t s = master_seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        std::seed_seq seq{splitmix64(s), splitmix64(s), splitmix64(s), splitmix64(s)};
        engine_.seed(seq);
    }

    std::uint64_t operator()() { return engine_(); }
    static constexpr std::uint64_t min() { return std::mt19937_64::min(); }
    static constexpr std::uint64_t max() { return std::mt19937_64::max(); }

    /// Uniform on [0, 1).
    double uniform() {
        return (engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal (polar method; platform independent).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace snakelab
