#include "twistsieve/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace twistsieve {

namespace {

// Lanczos approximation, g = 7, 9 coefficients (~15 significant digits).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Series form of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

// Modified Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("ln_gamma requires x > 0");
    if (x < 0.5) {
        // Reflection keeps the Lanczos series in its accurate range.
        return std::log(M_PI / std::sin(M_PI * x)) - ln_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::invalid_argument("regularized gamma requires a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::invalid_argument("regularized gamma requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_pvalue(double statistic, unsigned df) {
    if (statistic < 0.0) throw std::invalid_argument("negative chi-square statistic");
    if (df < 1) throw std::invalid_argument("chi-square df must be >= 1");
    return regularized_gamma_q(0.5 * static_cast<double>(df), 0.5 * statistic);
}

double poisson_cdf(std::uint64_t k, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    return regularized_gamma_q(static_cast<double>(k) + 1.0, lambda);
}

double poisson_sf(std::uint64_t k, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (k == 0) return 1.0;
    return regularized_gamma_p(static_cast<double>(k), lambda);
}

double poisson_pmf(std::uint64_t k, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    const double kf = static_cast<double>(k);
    return std::exp(-lambda + kf * std::log(lambda) - ln_gamma(kf + 1.0));
}

double binomial_log_pmf(std::uint64_t k, std::uint64_t n, double p) {
    const double nf = static_cast<double>(n);
    const double kf = static_cast<double>(k);
    const double lchoose =
        ln_gamma(nf + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(nf - kf + 1.0);
    return lchoose + kf * std::log(p) + (nf - kf) * std::log1p(-p);
}

double binomial_upper_tail(std::uint64_t count, std::uint64_t n, double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("binomial p must be in (0, 1)");
    if (count > n) throw std::invalid_argument("count must be <= n");
    if (count == 0) return 1.0;

    // Sum upward from the first term with the multiplicative term ratio;
    // only the first term needs the log-space evaluation.
    double term = std::exp(binomial_log_pmf(count, n, p));
    double sum = term;
    const double odds = p / (1.0 - p);
    for (std::uint64_t k = count; k < n; ++k) {
        term *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum < 1.0 ? sum : 1.0;
}

}  // namespace twistsieve
