#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twistsieve/classify.hpp"
#include "twistsieve/params.hpp"
#include "twistsieve/stat_tests.hpp"

namespace twistsieve {

enum class Verdict { pass, suspect_only, fail };
const char* to_string(Verdict v);

/// Per-status summary over a set of test results: fail iff any disastrous
/// result, pass iff all correct, suspect-only otherwise.
struct StatusVerdict {
    std::string status_id;
    std::uint64_t correct = 0;
    std::uint64_t suspect = 0;
    std::uint64_t disastrous = 0;
    std::uint64_t errors = 0;
    Verdict verdict = Verdict::pass;
};

/// One campaign cell: a TestResult plus its coordinates, or an error that
/// the test raised (errors never abort a campaign).
struct ResultRow {
    std::uint32_t status_index = 0;
    std::uint32_t seed_index = 0;
    std::string status_id;
    std::string test_id;
    std::uint32_t seed = 0;
    double statistic = 0.0;
    double p_value = 0.0;
    PValueClass classification = PValueClass::correct;
    bool degenerate = false;
    std::string error;  // non-empty marks an error row
    bool is_error() const { return !error.empty(); }
};

struct SeedPolicy {
    enum class Kind { fixed, random_spacing };
    Kind kind = Kind::fixed;
    std::uint32_t fixed_seed = 0;
    std::uint32_t count = 1;       // seeds drawn under random spacing
    std::uint64_t source = 0;      // counter-based source, recorded for replay

    static SeedPolicy fixed(std::uint32_t seed);
    static SeedPolicy random_spacing(std::uint32_t count, std::uint64_t source);
    std::vector<std::uint32_t> seeds() const;
};

struct PerTestSummary {
    std::string test_id;
    std::uint64_t rows = 0;
    std::uint64_t correct = 0;
    std::uint64_t suspect = 0;
    std::uint64_t disastrous = 0;
    std::uint64_t errors = 0;
    double suspect_excess = 1.0;  // P(X >= suspect) under Binomial(rows, 0.002)
};

struct GridCell {
    std::uint32_t param_index = 0;
    std::uint32_t seed_index = 0;
    // Worst outcome across tests: disastrous > suspect > error > correct.
    std::string cls;
};

struct SieveReport {
    std::vector<std::string> status_ids;       // by status index
    std::vector<std::uint32_t> seeds;          // by seed index
    SeedPolicy policy;
    std::vector<TestSpec> specs;
    std::vector<ResultRow> rows;               // ordered (status, seed, test)
    std::vector<StatusVerdict> verdicts;       // per status, over all seeds
    std::vector<PerTestSummary> per_test;
    std::vector<GridCell> grid;                // filled by the cross experiment

    std::string results_csv() const;
    std::string summary_text() const;
    std::string grid_csv() const;
};

// p in [0, 1] classified per the three bands; rows for one status roll up
// into a verdict. status_verdict throws on an empty input or mixed ids.
StatusVerdict status_verdict(std::span<const ResultRow> rows);

// P(X >= count) for X ~ Binomial(n_statuses, p), log space; the H0'
// rejection probability behind "more than 40 suspects" flags.
double suspect_excess_probability(std::uint64_t count, std::uint64_t n_statuses,
                                  double p);

// Recomputes verdicts, per-test summaries and (optionally) the grid from
// report.rows; campaigns call it once, and `report` regeneration reuses it
// after parsing a results CSV back in.
void aggregate_report(SieveReport& report, bool want_grid);

// Runs every (status, seed, test) combination; individual test errors are
// recorded per-row. The report is byte-identical for any worker count.
SieveReport run_campaign(const std::vector<ParameterizedStatus>& statuses,
                         const SeedPolicy& policy,
                         const std::vector<TestSpec>& specs,
                         unsigned workers = 1);

// The Random Spacing experiment: n_seeds random seeds crossed with every
// parameter set; adds the param-by-seed grid of worst classifications.
SieveReport random_spacing_cross(const std::vector<ParameterizedStatus>& params,
                                 std::uint32_t n_seeds, std::uint64_t seed_source,
                                 const std::vector<TestSpec>& specs,
                                 unsigned workers = 1);

// Pass percentage per test for two engines' campaigns, as CSV
// (test_id,<label_a>,<label_b>). A result passes unless disastrous or
// errored. Throws when the two reports ran different test spec sets.
std::string variation_report_csv(const SieveReport& a, const SieveReport& b,
                                 const std::string& label_a,
                                 const std::string& label_b);

// Statuses re-emitted with a verdict field: pass tier first, then the
// clearly-labelled suspect-only tier. Requires statuses parallel to the
// report's status indices.
std::string verified_statuses_jsonl(const SieveReport& report,
                                    const std::vector<ParameterizedStatus>& statuses);

}  // namespace twistsieve
