#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace twistsieve {

// Engines a status record can describe. "mt" is the real recurrence;
// "constant" and "lfsr16" are planted degenerate sources used to
// calibrate the sieve (they must fail it).
enum class Engine { mt, constant, lfsr16 };

const char* to_string(Engine e);
Engine engine_from_string(const std::string& name);

/// Per-generator parameter set: the recurrence and tempering coefficients
/// that distinguish one family member from another. Two generators with
/// different ParameterizedStatus values produce unrelated streams; the
/// creator id is embedded in the low 16 bits of the twist coefficient.
struct ParameterizedStatus {
    std::uint16_t id = 0;
    std::uint32_t mexp = 0;       // period exponent, period = 2^mexp - 1
    std::uint32_t word_size = 32;
    std::uint32_t n = 0;          // state length in words
    std::uint32_t m = 0;          // middle offset, 1 <= m < n
    std::uint32_t r = 0;          // split bit position, 32*n - r == mexp
    std::uint32_t a = 0;          // twist coefficient, a & 0xFFFF == id
    std::uint32_t temper_b = 0;
    std::uint32_t temper_c = 0;
    std::uint32_t temper_u = 11;
    std::uint32_t temper_s = 7;
    std::uint32_t temper_t = 15;
    std::uint32_t temper_l = 18;
    std::string charpoly_digest;  // hex SHA-1 of the characteristic polynomial
    Engine engine = Engine::mt;

    // Throws std::invalid_argument on any violated invariant.
    void validate() const;

    bool operator==(const ParameterizedStatus&) const = default;
};

// Stable identifier used in result rows and reports, e.g. "m19937-id45279".
std::string status_display_id(const ParameterizedStatus& p);

// Mersenne prime exponents the creator accepts. Irreducibility of a
// degree-mexp polynomial then implies primitivity (2^mexp - 1 is prime),
// so no factoring is ever needed.
inline constexpr std::array<std::uint32_t, 10> kSupportedMexp = {
    89, 127, 521, 607, 1279, 2203, 2281, 3217, 19937, 23209};

bool is_supported_mexp(std::uint32_t mexp);

struct StateShape {
    std::uint32_t n;
    std::uint32_t r;
};

// n = ceil(mexp/32), r = 32*n - mexp. Throws for unsupported mexp.
StateShape shape_for_mexp(std::uint32_t mexp);

// The canonical MT19937 parameter set (id = 0xB0DF, the low half of the
// twist coefficient). charpoly_digest is the frozen SHA-1 of its
// degree-19937 minimal polynomial.
ParameterizedStatus mt19937_params();

// Planted degenerate statuses for sieve calibration. The constant source
// emits `word` forever; the LFSR source has period 65535 words.
ParameterizedStatus make_constant_status(std::uint16_t id, std::uint32_t word);
ParameterizedStatus make_lfsr16_status(std::uint16_t id);

}  // namespace twistsieve
