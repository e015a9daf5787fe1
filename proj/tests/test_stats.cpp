#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "twistsieve/stats.hpp"

using namespace twistsieve;
using doctest::Approx;

namespace {

// Direct-summation oracle in extended precision, multiplicative term
// updates, no logs; usable for n <= 1000.
long double binom_tail_oracle(std::uint64_t count, std::uint64_t n, long double p) {
    long double term = std::pow(1.0L - p, static_cast<long double>(n));  // k = 0
    long double sum = count == 0 ? term : 0.0L;
    for (std::uint64_t k = 0; k < n; ++k) {
        term *= static_cast<long double>(n - k) / static_cast<long double>(k + 1) * p /
                (1.0L - p);
        if (k + 1 >= count) sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("ln_gamma matches libm references") {
    CHECK(ln_gamma(0.5) == Approx(0.5723649429247004).epsilon(1e-14));
    CHECK(ln_gamma(1.0) == Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(std::fabs(ln_gamma(1.0)) < 1e-14);
    CHECK(ln_gamma(10.0) == Approx(12.801827480081467).epsilon(1e-14));
    CHECK(ln_gamma(0.1) == Approx(2.2527126517342055).epsilon(1e-14));
    CHECK(ln_gamma(123.75) == Approx(471.02057616097693).epsilon(1e-14));
    CHECK_THROWS_AS(ln_gamma(0.0), std::invalid_argument);
}

TEST_CASE("regularized gamma P and Q partition unity") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ua(0.1, 50.0), ux(0.0, 80.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = ua(rng), x = ux(rng);
        CAPTURE(a);
        CAPTURE(x);
        REQUIRE(regularized_gamma_p(a, x) + regularized_gamma_q(a, x) ==
                Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("chi-square p-values") {
    SUBCASE("statistic zero gives 1 for any df") {
        for (unsigned df : {1u, 2u, 10u, 100u}) CHECK(chi_square_pvalue(0.0, df) == 1.0);
    }

    SUBCASE("df=2 closed form exp(-x/2) to 1e-12") {
        for (double x : {0.1, 1.0, 2.0, 5.0, 10.0}) {
            CAPTURE(x);
            REQUIRE(chi_square_pvalue(x, 2) == Approx(std::exp(-x / 2)).epsilon(1e-12));
        }
        CHECK(chi_square_pvalue(2.0, 2) == Approx(std::exp(-1.0)).epsilon(1e-12));
        CHECK(chi_square_pvalue(4.605, 2) == Approx(0.100).epsilon(1e-3));
    }

    SUBCASE("matches independent references at other df") {
        CHECK(chi_square_pvalue(31.4, 31) == Approx(0.446192339228382).epsilon(1e-12));
        CHECK(chi_square_pvalue(5.0, 1) == Approx(0.025347318677468325).epsilon(1e-12));
        CHECK(chi_square_pvalue(100.0, 50) ==
              Approx(3.454931382984871e-05).epsilon(1e-12));
        CHECK(chi_square_pvalue(3.3, 7) == Approx(0.8559330472514932).epsilon(1e-12));
    }

    SUBCASE("monotone decreasing in the statistic") {
        for (unsigned df : {1u, 2u, 31u}) {
            double prev = 1.0;
            for (double x = 0.25; x < 120.0; x += 0.25) {
                const double p = chi_square_pvalue(x, df);
                CAPTURE(df);
                CAPTURE(x);
                REQUIRE(p <= prev);
                prev = p;
            }
        }
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(chi_square_pvalue(-0.1, 2), std::invalid_argument);
        CHECK_THROWS_AS(chi_square_pvalue(1.0, 0), std::invalid_argument);
    }
}

TEST_CASE("poisson tails") {
    CHECK(poisson_cdf(120, 128.0) == Approx(0.2563446424219648).epsilon(1e-12));
    CHECK(poisson_sf(140, 128.0) == Approx(0.1547385712318767).epsilon(1e-12));
    CHECK(poisson_pmf(128, 128.0) == Approx(0.03523889955682396).epsilon(1e-12));
    CHECK(poisson_sf(0, 5.0) == 1.0);

    SUBCASE("cdf + upper tail account for every outcome") {
        for (std::uint64_t k : {0ull, 3ull, 12ull, 130ull}) {
            CAPTURE(k);
            REQUIRE(poisson_cdf(k, 17.5) + poisson_sf(k + 1, 17.5) ==
                    Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("cdf equals direct pmf summation for small lambda") {
        for (double lambda : {0.5, 3.0, 9.25}) {
            double acc = 0.0;
            for (std::uint64_t k = 0; k <= 40; ++k) {
                acc += poisson_pmf(k, lambda);
                CAPTURE(lambda);
                CAPTURE(k);
                REQUIRE(poisson_cdf(k, lambda) == Approx(acc).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("binomial upper tail") {
    SUBCASE("count zero is certain") {
        CHECK(binomial_upper_tail(0, 10000, 0.002) == 1.0);
    }

    SUBCASE("reference values") {
        CHECK(binomial_upper_tail(41, 10000, 0.002) ==
              Approx(2.4875398524673038e-05).epsilon(1e-12));
        CHECK(binomial_upper_tail(20, 10000, 0.002) ==
              Approx(0.5298316707974653).epsilon(1e-12));
        CHECK(binomial_upper_tail(5, 20, 0.3) ==
              Approx(0.7624922211223987).epsilon(1e-12));
    }

    SUBCASE("matches the direct-summation oracle to 1e-12 for n <= 1000") {
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 300; ++trial) {
            const std::uint64_t n = 1 + rng() % 1000;
            const std::uint64_t count = rng() % (n + 1);
            const double p = 0.001 + 0.998 * (static_cast<double>(rng() % 1000) / 1000.0);
            const long double oracle = binom_tail_oracle(count, n, p);
            const double got = binomial_upper_tail(count, n, p);
            CAPTURE(n);
            CAPTURE(count);
            CAPTURE(p);
            if (oracle > 1e-280L) {
                REQUIRE(got == Approx(static_cast<double>(oracle)).epsilon(1e-12));
            }
        }
    }

    SUBCASE("non-increasing in count") {
        double prev = 1.0;
        for (std::uint64_t c = 0; c <= 100; ++c) {
            const double v = binomial_upper_tail(c, 10000, 0.002);
            REQUIRE(v <= prev);
            prev = v;
        }
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(binomial_upper_tail(5, 4, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(binomial_upper_tail(1, 10, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(binomial_upper_tail(1, 10, 1.0), std::invalid_argument);
    }
}
