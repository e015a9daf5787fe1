#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistsieve/generator.hpp"
#include "twistsieve/gf2poly.hpp"
#include "twistsieve/params.hpp"

namespace twistsieve {

// SHA-1 hex digest (40 chars) of the polynomial's canonical encoding:
// an 8-byte little-endian coefficient count followed by the little-endian
// coefficient bytes.
std::string poly_digest(const Gf2Poly& p);

// Minimal polynomial of the generator's output bit 0, from 2*mexp + 64
// probe words. No degree check; dc_search uses this directly.
Gf2Poly probe_minimal_polynomial(Generator gen, std::uint32_t mexp);

// Checked variant: throws std::runtime_error when the recovered degree is
// below mexp (degenerate linear functional or non-maximal recurrence).
Gf2Poly minimal_polynomial_of(Generator gen, std::uint32_t mexp);

// As above, starting from init_from_seed(params, probe_seed).
Gf2Poly minimal_polynomial(const ParameterizedStatus& params,
                           std::uint32_t probe_seed);

inline constexpr std::uint32_t kDefaultProbeSeed = 1;
inline constexpr std::uint32_t kDefaultSearchBudget = 100000;

// Deterministically mints a full-period status: candidates vary the upper
// 16 bits of the twist coefficient (low half pinned to `id`), the middle
// offset m, and the tempering masks; the first candidate whose minimal
// polynomial has degree mexp and is irreducible wins. 2^mexp - 1 is prime
// for every supported mexp, so irreducible implies period 2^mexp - 1.
// Throws std::runtime_error("search exhausted") when the budget runs out.
ParameterizedStatus dc_search(std::uint32_t mexp, std::uint16_t id,
                              std::uint64_t search_seed,
                              std::uint32_t budget = kDefaultSearchBudget);

// Convenience for minting an id range; results ordered by id.
std::vector<ParameterizedStatus> dc_search_batch(std::uint32_t mexp,
                                                 std::uint16_t id_first,
                                                 std::uint16_t id_last,
                                                 std::uint64_t search_seed);

// Recomputes the minimal polynomial and digest from the status; true iff
// it reproduces status.charpoly_digest exactly.
bool verify_digest(const ParameterizedStatus& status);

}  // namespace twistsieve
