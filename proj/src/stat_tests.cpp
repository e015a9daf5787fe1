#include "twistsieve/stat_tests.hpp"

#include <cmath>
#include <cstdio>

namespace twistsieve {

void TestSpec::validate() const {
    if (n < 1) throw std::invalid_argument("sample size n must be >= 1");
    if (r > 31) throw std::invalid_argument("r must be in [0, 31]");
    if (test_id == "gap") {
        if (!(alpha >= 0.0 && alpha < beta && beta <= 1.0))
            throw std::invalid_argument("gap test requires 0 <= alpha < beta <= 1");
    } else if (test_id == "hamming_indep") {
        if (s < 1 || s > 31) throw std::invalid_argument("s must be in [1, 31]");
        if (r + s > 32) throw std::invalid_argument("r + s must be <= 32");
        if (L < 1) throw std::invalid_argument("block length L must be >= 1");
        if (d != 0) throw std::invalid_argument("only d = 0 is supported");
    } else if (test_id == "collision_over") {
        if (s < 1 || s > 14)
            throw std::invalid_argument("s must be in [1, 14]");
        if (r + s > 32) throw std::invalid_argument("r + s must be <= 32");
        if (t != 0 && t != 2 * s)
            throw std::invalid_argument("cell-count exponent t must equal 2*s");
    } else if (test_id == "random_walk") {
        if (l < 2 || l % 2 != 0)
            throw std::invalid_argument("walk length l must be even and >= 2");
    } else {
        throw std::invalid_argument("unknown test id: " + test_id);
    }
}

std::string TestSpec::describe() const {
    char buf[160];
    if (test_id == "gap") {
        std::snprintf(buf, sizeof buf, "gap(n=%llu,r=%u,alpha=%.9g,beta=%.9g)",
                      static_cast<unsigned long long>(n), r, alpha, beta);
    } else if (test_id == "hamming_indep") {
        std::snprintf(buf, sizeof buf, "hamming_indep(n=%llu,r=%u,s=%u,L=%u,d=%u)",
                      static_cast<unsigned long long>(n), r, s, L, d);
    } else if (test_id == "collision_over") {
        std::snprintf(buf, sizeof buf, "collision_over(n=%llu,r=%u,s=%u,t=%u)",
                      static_cast<unsigned long long>(n), r, s, t ? t : 2 * s);
    } else {
        std::snprintf(buf, sizeof buf, "random_walk(n=%llu,r=%u,l=%u)",
                      static_cast<unsigned long long>(n), r, l);
    }
    return buf;
}

TestSpec desk_gap_spec() {
    TestSpec spec;
    spec.test_id = "gap";
    spec.n = 1000000;
    spec.r = 25;
    spec.alpha = 0.0;
    spec.beta = 1.0 / 32.0;
    return spec;
}

TestSpec desk_hamming_spec() {
    TestSpec spec;
    spec.test_id = "hamming_indep";
    spec.n = 100000;
    spec.r = 25;
    spec.s = 5;
    spec.L = 1200;
    spec.d = 0;
    return spec;
}

TestSpec desk_opso_spec() {
    TestSpec spec;
    spec.test_id = "collision_over";
    spec.n = 32768;  // lambda = n^2 / 2^(2s+1) = 128
    spec.r = 0;
    spec.s = 11;
    spec.t = 22;
    return spec;
}

TestSpec desk_walk_spec() {
    TestSpec spec;
    spec.test_id = "random_walk";
    spec.n = 100000;
    spec.r = 0;
    spec.l = 128;
    return spec;
}

std::vector<TestSpec> desk_battery() {
    return {desk_gap_spec(), desk_hamming_spec(), desk_opso_spec(), desk_walk_spec()};
}

TestSpec named_spec(const std::string& name) {
    if (name == "gap") return desk_gap_spec();
    if (name == "hamming" || name == "hamming_indep") return desk_hamming_spec();
    if (name == "opso" || name == "collision_over") return desk_opso_spec();
    if (name == "walk" || name == "random_walk") return desk_walk_spec();
    throw std::invalid_argument("unknown test name: " + name);
}

std::vector<double> gap_expected_counts(const TestSpec& spec) {
    spec.validate();
    if (spec.test_id != "gap") throw std::invalid_argument("spec is not a gap spec");
    const double p = spec.beta - spec.alpha;
    const double q = 1.0 - p;
    std::uint64_t tcut = 1;
    while (tcut < 65536 &&
           static_cast<double>(spec.n) * std::pow(q, static_cast<double>(tcut + 1)) >= 5.0 &&
           static_cast<double>(spec.n) * p * std::pow(q, static_cast<double>(tcut)) >= 5.0) {
        ++tcut;
    }
    std::vector<double> expected(tcut + 1);
    for (std::uint64_t s2 = 0; s2 < tcut; ++s2)
        expected[s2] = static_cast<double>(spec.n) * p * std::pow(q, static_cast<double>(s2));
    expected[tcut] = static_cast<double>(spec.n) * std::pow(q, static_cast<double>(tcut));
    return expected;
}

}  // namespace twistsieve
