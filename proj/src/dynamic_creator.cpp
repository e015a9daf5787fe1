#include "twistsieve/dynamic_creator.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <random>
#include <stdexcept>

namespace twistsieve {

std::string poly_digest(const Gf2Poly& p) {
    // Canonical encoding: coefficient count (degree+1, 0 for the zero
    // polynomial) as 8 little-endian bytes, then the little-endian
    // coefficient bytes.
    const std::uint64_t nbits = p.is_zero() ? 0 : static_cast<std::uint64_t>(p.degree()) + 1;
    std::vector<std::uint8_t> payload(8);
    for (int i = 0; i < 8; ++i)
        payload[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(nbits >> (8 * i));
    const auto coeffs = p.to_bytes_le();
    payload.insert(payload.end(), coeffs.begin(), coeffs.end());

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha1(), nullptr) != 1)
        throw std::runtime_error("SHA-1 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

Gf2Poly probe_minimal_polynomial(Generator gen, std::uint32_t mexp) {
    const std::size_t nbits = 2 * static_cast<std::size_t>(mexp) + 64;
    std::vector<std::uint8_t> bits(nbits);
    for (auto& b : bits) b = static_cast<std::uint8_t>(gen.next_u32() & 1u);
    return berlekamp_massey(bits);
}

Gf2Poly minimal_polynomial_of(Generator gen, std::uint32_t mexp) {
    Gf2Poly poly = probe_minimal_polynomial(std::move(gen), mexp);
    if (poly.degree() < static_cast<int>(mexp))
        throw std::runtime_error(
            "minimal polynomial degree " + std::to_string(poly.degree()) +
            " below period exponent " + std::to_string(mexp) +
            ": status rejected");
    return poly;
}

Gf2Poly minimal_polynomial(const ParameterizedStatus& params,
                           std::uint32_t probe_seed) {
    params.validate();
    return minimal_polynomial_of(Generator(params, probe_seed), params.mexp);
}

ParameterizedStatus dc_search(std::uint32_t mexp, std::uint16_t id,
                              std::uint64_t search_seed, std::uint32_t budget) {
    const StateShape shape = shape_for_mexp(mexp);
    // mt19937_64 is fully pinned by the standard, so the search is
    // reproducible across platforms for a given (mexp, id, seed).
    std::mt19937_64 rng(search_seed);
    auto draw32 = [&rng]() { return static_cast<std::uint32_t>(rng() >> 32); };

    for (std::uint32_t attempt = 0; attempt < budget; ++attempt) {
        ParameterizedStatus cand;
        cand.id = id;
        cand.mexp = mexp;
        cand.n = shape.n;
        cand.r = shape.r;
        cand.m = 1 + static_cast<std::uint32_t>(rng() % (shape.n - 1));
        cand.a = (draw32() << 16) | id;
        cand.temper_b = draw32();
        cand.temper_c = draw32();

        Gf2Poly poly =
            probe_minimal_polynomial(Generator(cand, kDefaultProbeSeed), mexp);
        if (poly.degree() != static_cast<int>(mexp)) continue;
        if (!is_irreducible(poly)) continue;
        cand.charpoly_digest = poly_digest(poly);
        return cand;
    }
    throw std::runtime_error("search exhausted");
}

std::vector<ParameterizedStatus> dc_search_batch(std::uint32_t mexp,
                                                 std::uint16_t id_first,
                                                 std::uint16_t id_last,
                                                 std::uint64_t search_seed) {
    if (id_last < id_first) throw std::invalid_argument("empty id range");
    std::vector<ParameterizedStatus> out;
    out.reserve(static_cast<std::size_t>(id_last - id_first) + 1);
    for (std::uint32_t id = id_first; id <= id_last; ++id)
        out.push_back(dc_search(mexp, static_cast<std::uint16_t>(id), search_seed));
    return out;
}

bool verify_digest(const ParameterizedStatus& status) {
    const Gf2Poly poly = minimal_polynomial(status, kDefaultProbeSeed);
    return poly_digest(poly) == status.charpoly_digest;
}

}  // namespace twistsieve
