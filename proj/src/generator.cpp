#include "twistsieve/generator.hpp"

#include <stdexcept>

namespace twistsieve {

std::uint32_t temper(std::uint32_t y, const ParameterizedStatus& p) {
    y ^= y >> p.temper_u;
    y ^= (y << p.temper_s) & p.temper_b;
    y ^= (y << p.temper_t) & p.temper_c;
    y ^= y >> p.temper_l;
    return y;
}

// Each tempering step XORs a word with a shifted/masked copy of itself,
// so it inverts by re-applying the step until the shift has cleared the
// word; ceil(32/shift) rounds suffice.
std::uint32_t untemper(std::uint32_t y, const ParameterizedStatus& p) {
    auto undo_right = [](std::uint32_t v, std::uint32_t shift) {
        std::uint32_t res = v;
        for (std::uint32_t done = shift; done < 32; done += shift) res = v ^ (res >> shift);
        return res;
    };
    auto undo_left = [](std::uint32_t v, std::uint32_t shift, std::uint32_t mask) {
        std::uint32_t res = v;
        for (std::uint32_t done = shift; done < 32; done += shift)
            res = v ^ ((res << shift) & mask);
        return res;
    };
    y = undo_right(y, p.temper_l);
    y = undo_left(y, p.temper_t, p.temper_c);
    y = undo_left(y, p.temper_s, p.temper_b);
    y = undo_right(y, p.temper_u);
    return y;
}

Generator::Generator(ParameterizedStatus params, std::uint32_t seed)
    : params_(std::move(params)) {
    params_.validate();
    if (params_.engine != Engine::mt)
        throw std::invalid_argument("Generator requires an mt-engine status");
    seed_.seed = seed;
    seed_.state.resize(params_.n);
    seed_.state[0] = seed;
    for (std::uint32_t i = 1; i < params_.n; ++i) {
        // Knuth-style multiplicative initializer; the +i term makes the
        // all-zero state unreachable for every seed, including 0.
        seed_.state[i] =
            1812433253u * (seed_.state[i - 1] ^ (seed_.state[i - 1] >> 30)) + i;
    }
    seed_.index = params_.n;
}

Generator Generator::from_state(ParameterizedStatus params,
                                std::vector<std::uint32_t> state,
                                std::uint32_t index) {
    if (state.size() != params.n)
        throw std::invalid_argument("state length must equal n");
    if (index > params.n) throw std::invalid_argument("index must be in [0, n]");
    Generator g;
    g.params_ = std::move(params);
    g.seed_.seed = 0;
    g.seed_.state = std::move(state);
    g.seed_.index = index;
    return g;
}

void Generator::refill() {
    const std::uint32_t n = params_.n;
    const std::uint32_t m = params_.m;
    const std::uint32_t upper = 0xFFFFFFFFu << params_.r;   // high 32-r bits
    const std::uint32_t lower = ~upper;                     // low r bits
    const std::uint32_t a = params_.a;
    auto* st = seed_.state.data();

    std::uint32_t k = 0;
    for (; k + m < n; ++k) {
        const std::uint32_t y = (st[k] & upper) | (st[k + 1] & lower);
        st[k] = st[k + m] ^ (y >> 1) ^ ((y & 1u) ? a : 0u);
    }
    for (; k + 1 < n; ++k) {
        const std::uint32_t y = (st[k] & upper) | (st[k + 1] & lower);
        st[k] = st[k + m - n] ^ (y >> 1) ^ ((y & 1u) ? a : 0u);
    }
    const std::uint32_t y = (st[n - 1] & upper) | (st[0] & lower);
    st[n - 1] = st[m - 1] ^ (y >> 1) ^ ((y & 1u) ? a : 0u);
    seed_.index = 0;
}

Generator init_from_seed(const ParameterizedStatus& params, std::uint32_t seed) {
    return Generator(params, seed);
}

}  // namespace twistsieve
