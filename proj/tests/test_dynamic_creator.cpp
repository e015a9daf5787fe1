#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "twistsieve/dynamic_creator.hpp"

using namespace twistsieve;

TEST_CASE("poly_digest canonical goldens") {
    // Golden values computed once with an independent SHA-1 (Python
    // hashlib) over the canonical encoding.
    CHECK(poly_digest(Gf2Poly::one()) == "fb2b68585225a5d50c9b64c3cc5ab00fc484cdea");
    CHECK(poly_digest(Gf2Poly::zero()) == "05fe405753166f125559e7c9ac558654f107c7e9");
    CHECK(poly_digest(Gf2Poly::from_integer(0b111)) ==
          "fe1b29dbc45fc88204fdbcd65f9b259ef937ad60");

    SUBCASE("equal polynomials digest equally; near misses do not collide") {
        Gf2Poly p;
        p.set_coeff(89, true);
        p.set_coeff(12, true);
        p.set_coeff(0, true);
        Gf2Poly q = p;
        CHECK(poly_digest(p) == poly_digest(q));
        for (std::size_t i = 0; i <= 89; ++i) {
            Gf2Poly flipped = p;
            flipped.set_coeff(i, !flipped.coeff(i));
            CAPTURE(i);
            REQUIRE(poly_digest(flipped) != poly_digest(p));
        }
    }
}

TEST_CASE("minimal polynomial of the mt19937 preset") {
    auto params = mt19937_params();
    const Gf2Poly poly = minimal_polynomial(params, kDefaultProbeSeed);
    CHECK(poly.degree() == 19937);
    // Digest stability: the frozen preset digest reproduces from scratch.
    CHECK(poly_digest(poly) == params.charpoly_digest);
    CHECK(verify_digest(params));
}

TEST_CASE("zeroed-state probe yields polynomial 1 and a rejection") {
    auto params = mt19937_params();
    auto make_zero_gen = [&] {
        return Generator::from_state(params, std::vector<std::uint32_t>(params.n, 0),
                                     params.n);
    };
    CHECK(probe_minimal_polynomial(make_zero_gen(), params.mexp) == Gf2Poly::one());
    CHECK_THROWS_AS(minimal_polynomial_of(make_zero_gen(), params.mexp),
                    std::runtime_error);
}

TEST_CASE("dc_search") {
    SUBCASE("deterministic for identical inputs") {
        const auto a = dc_search(89, 7, 1);
        const auto b = dc_search(89, 7, 1);
        CHECK(a == b);
    }

    SUBCASE("id embedding and invariants") {
        const auto st = dc_search(89, 7, 1);
        CHECK((st.a & 0xFFFFu) == 7u);
        CHECK(st.id == 7u);
        CHECK(32 * st.n - st.r == 89u);
        CHECK_NOTHROW(st.validate());
    }

    SUBCASE("distinct ids give distinct digests") {
        const auto a = dc_search(89, 1, 42);
        const auto b = dc_search(89, 2, 42);
        CHECK(a.charpoly_digest != b.charpoly_digest);
    }

    SUBCASE("minted statuses verify: degree, irreducibility, digest stability") {
        for (std::uint16_t id : {0, 3, 9}) {
            const auto st = dc_search(89, id, 1);
            const Gf2Poly poly = minimal_polynomial(st, kDefaultProbeSeed);
            CAPTURE(id);
            REQUIRE(poly.degree() == 89);
            REQUIRE(is_irreducible(poly));
            REQUIRE(poly_digest(poly) == st.charpoly_digest);
            REQUIRE(verify_digest(st));
        }
    }

    SUBCASE("batch is ordered by id with pairwise distinct digests") {
        const auto batch = dc_search_batch(89, 0, 9, 1);
        REQUIRE(batch.size() == 10);
        std::set<std::string> digests;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            CHECK(batch[i].id == i);
            digests.insert(batch[i].charpoly_digest);
        }
        CHECK(digests.size() == 10);
    }

    SUBCASE("budget exhaustion reports search exhausted") {
        CHECK_THROWS_WITH_AS(dc_search(89, 7, 1, 0), "search exhausted",
                             std::runtime_error);
    }

    SUBCASE("unsupported exponent is rejected up front") {
        CHECK_THROWS_AS(dc_search(90, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("probe sequence of a toy mexp=89 status has full linear complexity") {
    const auto st = dc_search(89, 11, 3);
    Generator gen(st, 1234);
    std::vector<std::uint8_t> bits(2 * 89);
    for (auto& b : bits) b = static_cast<std::uint8_t>(gen.next_u32() & 1u);
    CHECK(berlekamp_massey(bits).degree() == 89);
}
