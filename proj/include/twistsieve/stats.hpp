#pragma once

#include <cstdint>

namespace twistsieve {

// ln Gamma(x) for x > 0, Lanczos g=7. Hand-rolled so report bytes do not
// depend on the platform's libm.
double ln_gamma(double x);

// Regularized incomplete gamma P(a, x) (lower) and Q(a, x) (upper),
// series/continued-fraction evaluation, relative error <= 1e-12.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper-tail probability P(X >= statistic) for X ~ chi-square(df).
// Throws std::invalid_argument for a negative statistic or df < 1.
double chi_square_pvalue(double statistic, unsigned df);

// Poisson(lambda) pieces, all exact identities on the regularized gamma:
//   P(X <= k) = Q(k+1, lambda)      P(X >= k) = P(k, lambda) for k >= 1
double poisson_cdf(std::uint64_t k, double lambda);
double poisson_sf(std::uint64_t k, double lambda);   // P(X >= k)
double poisson_pmf(std::uint64_t k, double lambda);

// log of C(n, k) * p^k * (1-p)^(n-k)
double binomial_log_pmf(std::uint64_t k, std::uint64_t n, double p);

// P(X >= count) for X ~ Binomial(n, p), log-space term recursion.
// Throws std::invalid_argument unless 0 <= count <= n and 0 < p < 1.
double binomial_upper_tail(std::uint64_t count, std::uint64_t n, double p);

}  // namespace twistsieve
