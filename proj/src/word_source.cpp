#include "twistsieve/word_source.hpp"

namespace twistsieve {

std::unique_ptr<WordSource> make_word_source(const ParameterizedStatus& params,
                                             std::uint32_t seed) {
    switch (params.engine) {
        case Engine::constant:
            return std::make_unique<ConstantWordSource>(params.a);
        case Engine::lfsr16:
            return std::make_unique<Lfsr16WordSource>(seed);
        case Engine::mt:
            break;
    }
    return std::make_unique<MtWordSource>(params, seed);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint32_t derive_seed(std::uint64_t source, std::uint32_t j) {
    return static_cast<std::uint32_t>(splitmix64(source + j));
}

}  // namespace twistsieve
