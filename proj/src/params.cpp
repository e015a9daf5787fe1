#include "twistsieve/params.hpp"

#include <stdexcept>

namespace twistsieve {

const char* to_string(Engine e) {
    switch (e) {
        case Engine::mt: return "mt";
        case Engine::constant: return "constant";
        case Engine::lfsr16: return "lfsr16";
    }
    return "mt";
}

Engine engine_from_string(const std::string& name) {
    if (name == "mt") return Engine::mt;
    if (name == "constant") return Engine::constant;
    if (name == "lfsr16") return Engine::lfsr16;
    throw std::invalid_argument("unknown engine: " + name);
}

void ParameterizedStatus::validate() const {
    if (engine != Engine::mt) return;  // planted sources ignore the recurrence fields
    if (word_size != 32) throw std::invalid_argument("word_size must be 32");
    if (n < 2) throw std::invalid_argument("state length n must be >= 2");
    if (r >= 32) throw std::invalid_argument("split position r must be < 32");
    if (32 * n - r != mexp)
        throw std::invalid_argument("32*n - r must equal mexp");
    if (!is_supported_mexp(mexp))
        throw std::invalid_argument("unsupported period exponent " + std::to_string(mexp));
    if (m < 1 || m >= n) throw std::invalid_argument("middle offset m must satisfy 1 <= m < n");
    if ((a & 0xFFFFu) != id)
        throw std::invalid_argument("low 16 bits of twist coefficient must carry the id");
    for (std::uint32_t shift : {temper_u, temper_s, temper_t, temper_l}) {
        if (shift < 1 || shift > 31)
            throw std::invalid_argument("tempering shifts must be in [1, 31]");
    }
}

std::string status_display_id(const ParameterizedStatus& p) {
    switch (p.engine) {
        case Engine::constant: return "const-id" + std::to_string(p.id);
        case Engine::lfsr16: return "lfsr16-id" + std::to_string(p.id);
        case Engine::mt: break;
    }
    return "m" + std::to_string(p.mexp) + "-id" + std::to_string(p.id);
}

bool is_supported_mexp(std::uint32_t mexp) {
    for (auto e : kSupportedMexp)
        if (e == mexp) return true;
    return false;
}

StateShape shape_for_mexp(std::uint32_t mexp) {
    if (!is_supported_mexp(mexp))
        throw std::invalid_argument("unsupported period exponent " + std::to_string(mexp));
    const std::uint32_t n = (mexp + 31) / 32;
    return StateShape{n, 32 * n - mexp};
}

ParameterizedStatus mt19937_params() {
    ParameterizedStatus p;
    p.id = 0xB0DF;
    p.mexp = 19937;
    p.n = 624;
    p.m = 397;
    p.r = 31;
    p.a = 0x9908B0DF;
    p.temper_b = 0x9D2C5680;
    p.temper_c = 0xEFC60000;
    // Frozen SHA-1 of the degree-19937 minimal polynomial; verify_digest
    // recomputes it from scratch in the test suite.
    p.charpoly_digest = "736dbad14b19609ef909097e1b440834727ed02c";
    return p;
}

ParameterizedStatus make_constant_status(std::uint16_t id, std::uint32_t word) {
    ParameterizedStatus p;
    p.engine = Engine::constant;
    p.id = id;
    p.mexp = 89;
    p.n = 3;
    p.m = 1;
    p.r = 7;
    p.a = word;  // the constant source emits this word forever
    return p;
}

ParameterizedStatus make_lfsr16_status(std::uint16_t id) {
    ParameterizedStatus p;
    p.engine = Engine::lfsr16;
    p.id = id;
    p.mexp = 89;
    p.n = 3;
    p.m = 1;
    p.r = 7;
    return p;
}

}  // namespace twistsieve
