#pragma once

#include <cstdint>
#include <vector>

#include "twistsieve/params.hpp"

namespace twistsieve {

/// User-visible seed plus the internal state vector it expands into.
struct SeedStatus {
    std::uint32_t seed = 0;
    std::vector<std::uint32_t> state;
    std::uint32_t index = 0;  // position in [0, n]; n means "refill next"
};

std::uint32_t temper(std::uint32_t word, const ParameterizedStatus& p);
std::uint32_t untemper(std::uint32_t word, const ParameterizedStatus& p);

/// Generic MT-family engine. An instance is fully determined by the
/// (ParameterizedStatus, seed) pair: identical inputs give identical
/// output sequences.
class Generator {
public:
    Generator(ParameterizedStatus params, std::uint32_t seed);

    // Bypasses seeding; for tests that need a hand-built state
    // (e.g. the all-zero fixed point).
    static Generator from_state(ParameterizedStatus params,
                                std::vector<std::uint32_t> state,
                                std::uint32_t index);

    std::uint32_t next_u32() {
        if (seed_.index >= params_.n) refill();
        return temper(seed_.state[seed_.index++], params_);
    }

    // next_u32() / 2^32, in [0, 1).
    double next_f64_01() {
        return static_cast<double>(next_u32()) * (1.0 / 4294967296.0);
    }

    const ParameterizedStatus& params() const { return params_; }
    const SeedStatus& seed_status() const { return seed_; }

private:
    Generator() = default;
    void refill();

    ParameterizedStatus params_;
    SeedStatus seed_;
};

Generator init_from_seed(const ParameterizedStatus& params, std::uint32_t seed);

}  // namespace twistsieve
