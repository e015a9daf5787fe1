#include "twistsieve/sieve.hpp"

#include <atomic>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include "twistsieve/stats.hpp"
#include "twistsieve/status_io.hpp"
#include "twistsieve/word_source.hpp"

namespace twistsieve {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int severity_rank(const ResultRow& row) {
    if (row.is_error()) return 1;
    switch (row.classification) {
        case PValueClass::disastrous: return 3;
        case PValueClass::suspect: return 2;
        case PValueClass::correct: return 0;
    }
    return 0;
}

const char* severity_name(int rank) {
    switch (rank) {
        case 3: return "disastrous";
        case 2: return "suspect";
        case 1: return "error";
        default: return "correct";
    }
}

std::string sanitize_csv(std::string s) {
    for (auto& ch : s)
        if (ch == ',' || ch == '\n') ch = ';';
    return s;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::suspect_only: return "suspect-only";
        case Verdict::fail: return "fail";
    }
    return "pass";
}

SeedPolicy SeedPolicy::fixed(std::uint32_t seed) {
    SeedPolicy p;
    p.kind = Kind::fixed;
    p.fixed_seed = seed;
    p.count = 1;
    return p;
}

SeedPolicy SeedPolicy::random_spacing(std::uint32_t count, std::uint64_t source) {
    if (count < 1) throw std::invalid_argument("seed count must be >= 1");
    SeedPolicy p;
    p.kind = Kind::random_spacing;
    p.count = count;
    p.source = source;
    return p;
}

std::vector<std::uint32_t> SeedPolicy::seeds() const {
    if (kind == Kind::fixed) return {fixed_seed};
    std::vector<std::uint32_t> out(count);
    for (std::uint32_t j = 0; j < count; ++j) out[j] = derive_seed(source, j);
    return out;
}

StatusVerdict status_verdict(std::span<const ResultRow> rows) {
    if (rows.empty()) throw std::invalid_argument("no results");
    StatusVerdict v;
    v.status_id = rows.front().status_id;
    for (const auto& row : rows) {
        if (row.status_id != v.status_id)
            throw std::invalid_argument("mixed status ids");
        if (row.is_error()) {
            ++v.errors;
        } else {
            switch (row.classification) {
                case PValueClass::correct: ++v.correct; break;
                case PValueClass::suspect: ++v.suspect; break;
                case PValueClass::disastrous: ++v.disastrous; break;
            }
        }
    }
    if (v.disastrous > 0)
        v.verdict = Verdict::fail;
    else if (v.suspect == 0 && v.errors == 0)
        v.verdict = Verdict::pass;
    else
        v.verdict = Verdict::suspect_only;
    return v;
}

double suspect_excess_probability(std::uint64_t count, std::uint64_t n_statuses,
                                  double p) {
    return binomial_upper_tail(count, n_statuses, p);
}

namespace {

SieveReport run_grid(const std::vector<ParameterizedStatus>& statuses,
                     const SeedPolicy& policy, const std::vector<TestSpec>& specs,
                     unsigned workers, bool want_grid) {
    if (statuses.empty()) throw std::invalid_argument("no statuses");
    if (specs.empty()) throw std::invalid_argument("no test specs");
    for (const auto& st : statuses) st.validate();
    for (const auto& sp : specs) sp.validate();

    SieveReport report;
    report.policy = policy;
    report.specs = specs;
    report.seeds = policy.seeds();
    for (const auto& st : statuses) report.status_ids.push_back(status_display_id(st));

    const std::size_t n_statuses = statuses.size();
    const std::size_t n_seeds = report.seeds.size();
    const std::size_t n_specs = specs.size();
    const std::size_t total = n_statuses * n_seeds * n_specs;
    report.rows.resize(total);

    // Work items are indexed (status, seed, test); workers pull items with
    // an atomic cursor and write into the slot the index names, so the
    // report layout never depends on scheduling.
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t item = cursor.fetch_add(1);
            if (item >= total) return;
            const std::size_t si = item / (n_seeds * n_specs);
            const std::size_t rest = item % (n_seeds * n_specs);
            const std::size_t wi = rest / n_specs;
            const std::size_t ti = rest % n_specs;

            ResultRow row;
            row.status_index = static_cast<std::uint32_t>(si);
            row.seed_index = static_cast<std::uint32_t>(wi);
            row.status_id = report.status_ids[si];
            row.test_id = specs[ti].test_id;
            row.seed = report.seeds[wi];
            try {
                auto source = make_word_source(statuses[si], report.seeds[wi]);
                BufferedStream stream(*source);
                const TestResult res = run_test(stream, specs[ti]);
                row.statistic = res.statistic;
                row.p_value = res.p_value;
                row.classification = res.classification;
                row.degenerate = res.degenerate;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            report.rows[item] = std::move(row);
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    aggregate_report(report, want_grid);
    return report;
}

}  // namespace

void aggregate_report(SieveReport& report, bool want_grid) {
    const std::size_t n_statuses = report.status_ids.size();
    const std::size_t n_seeds = report.seeds.size();
    const std::size_t n_specs = report.specs.size();
    if (report.rows.size() != n_statuses * n_seeds * n_specs)
        throw std::invalid_argument("row count does not match campaign shape");
    report.verdicts.clear();
    report.per_test.clear();
    report.grid.clear();

    // Per-status verdicts over every (seed, test) row of the status.
    for (std::size_t si = 0; si < n_statuses; ++si) {
        const std::size_t begin = si * n_seeds * n_specs;
        report.verdicts.push_back(status_verdict(
            std::span<const ResultRow>(report.rows.data() + begin, n_seeds * n_specs)));
    }

    // Per-test tallies and the binomial excess probability.
    for (std::size_t ti = 0; ti < n_specs; ++ti) {
        PerTestSummary s;
        s.test_id = report.specs[ti].test_id;
        for (std::size_t si = 0; si < n_statuses; ++si) {
            for (std::size_t wi = 0; wi < n_seeds; ++wi) {
                const auto& row = report.rows[(si * n_seeds + wi) * n_specs + ti];
                ++s.rows;
                if (row.is_error()) {
                    ++s.errors;
                } else {
                    switch (row.classification) {
                        case PValueClass::correct: ++s.correct; break;
                        case PValueClass::suspect: ++s.suspect; break;
                        case PValueClass::disastrous: ++s.disastrous; break;
                    }
                }
            }
        }
        s.suspect_excess = suspect_excess_probability(s.suspect, s.rows, 0.002);
        report.per_test.push_back(std::move(s));
    }

    if (want_grid) {
        for (std::size_t si = 0; si < n_statuses; ++si) {
            for (std::size_t wi = 0; wi < n_seeds; ++wi) {
                int worst = 0;
                for (std::size_t ti = 0; ti < n_specs; ++ti) {
                    const auto& row = report.rows[(si * n_seeds + wi) * n_specs + ti];
                    worst = std::max(worst, severity_rank(row));
                }
                report.grid.push_back(GridCell{static_cast<std::uint32_t>(si),
                                               static_cast<std::uint32_t>(wi),
                                               severity_name(worst)});
            }
        }
    }
}

SieveReport run_campaign(const std::vector<ParameterizedStatus>& statuses,
                         const SeedPolicy& policy,
                         const std::vector<TestSpec>& specs, unsigned workers) {
    return run_grid(statuses, policy, specs, workers, /*want_grid=*/false);
}

SieveReport random_spacing_cross(const std::vector<ParameterizedStatus>& params,
                                 std::uint32_t n_seeds, std::uint64_t seed_source,
                                 const std::vector<TestSpec>& specs,
                                 unsigned workers) {
    return run_grid(params, SeedPolicy::random_spacing(n_seeds, seed_source), specs,
                    workers, /*want_grid=*/true);
}

std::string SieveReport::results_csv() const {
    std::string out =
        "status_id,test_id,seed_index,seed,statistic,p_value,classification,degenerate,error\n";
    for (const auto& row : rows) {
        out += row.status_id;
        out += ',';
        out += row.test_id;
        out += ',';
        out += std::to_string(row.seed_index);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        if (row.is_error()) {
            out += ",,error,0,";
            out += sanitize_csv(row.error);
        } else {
            out += fmt_double(row.statistic);
            out += ',';
            out += fmt_double(row.p_value);
            out += ',';
            out += to_string(row.classification);
            out += ',';
            out += row.degenerate ? '1' : '0';
            out += ',';
        }
        out += '\n';
    }
    return out;
}

std::string SieveReport::summary_text() const {
    std::string out;
    out += "statuses: " + std::to_string(status_ids.size()) + "\n";
    if (policy.kind == SeedPolicy::Kind::fixed) {
        out += "seed policy: fixed seed=" + std::to_string(policy.fixed_seed) + "\n";
    } else {
        out += "seed policy: random-spacing count=" + std::to_string(policy.count) +
               " source=" + std::to_string(policy.source) + "\n";
    }
    out += "tests:";
    for (const auto& sp : specs) out += " " + sp.describe();
    out += "\n";

    std::uint64_t errors = 0;
    for (const auto& row : rows)
        if (row.is_error()) ++errors;
    out += "rows: " + std::to_string(rows.size()) +
           " (errors: " + std::to_string(errors) + ")\n";

    std::uint64_t pass = 0, susp = 0, fail = 0;
    for (const auto& v : verdicts) {
        if (v.verdict == Verdict::pass) ++pass;
        else if (v.verdict == Verdict::suspect_only) ++susp;
        else ++fail;
    }
    out += "verdicts: pass=" + std::to_string(pass) +
           " suspect-only=" + std::to_string(susp) + " fail=" + std::to_string(fail) +
           "\n";
    out += "per-test:\n";
    for (const auto& s : per_test) {
        out += "  " + s.test_id + ": rows=" + std::to_string(s.rows) +
               " correct=" + std::to_string(s.correct) +
               " suspect=" + std::to_string(s.suspect) +
               " disastrous=" + std::to_string(s.disastrous) +
               " errors=" + std::to_string(s.errors) +
               " suspect_excess=" + fmt_double(s.suspect_excess) + "\n";
    }
    for (auto verdict : {Verdict::pass, Verdict::suspect_only, Verdict::fail}) {
        out += std::string(to_string(verdict)) + ":";
        for (const auto& v : verdicts)
            if (v.verdict == verdict) out += " " + v.status_id;
        out += "\n";
    }
    return out;
}

std::string SieveReport::grid_csv() const {
    std::string out = "param_index,seed_index,class\n";
    for (const auto& cell : grid) {
        out += std::to_string(cell.param_index) + "," +
               std::to_string(cell.seed_index) + "," + cell.cls + "\n";
    }
    return out;
}

std::string variation_report_csv(const SieveReport& a, const SieveReport& b,
                                 const std::string& label_a,
                                 const std::string& label_b) {
    if (a.specs.size() != b.specs.size())
        throw std::invalid_argument("mismatched test spec sets");
    for (std::size_t i = 0; i < a.specs.size(); ++i) {
        if (a.specs[i].describe() != b.specs[i].describe())
            throw std::invalid_argument("mismatched test spec sets");
    }
    auto pass_pct = [](const SieveReport& rep, std::size_t ti) {
        const auto& s = rep.per_test[ti];
        if (s.rows == 0) return 0.0;
        const std::uint64_t passed = s.correct + s.suspect;
        return 100.0 * static_cast<double>(passed) / static_cast<double>(s.rows);
    };
    std::string out = "test_id," + label_a + "," + label_b + "\n";
    for (std::size_t ti = 0; ti < a.specs.size(); ++ti) {
        out += a.specs[ti].test_id + "," + fmt_double(pass_pct(a, ti)) + "," +
               fmt_double(pass_pct(b, ti)) + "\n";
    }
    return out;
}

std::string verified_statuses_jsonl(const SieveReport& report,
                                    const std::vector<ParameterizedStatus>& statuses) {
    if (statuses.size() != report.status_ids.size())
        throw std::invalid_argument("statuses do not match report");
    std::string out;
    // Pass tier first (the keep rule: zero suspect, zero disastrous, zero
    // errors), then the clearly labelled suspect-only tier.
    for (auto verdict : {Verdict::pass, Verdict::suspect_only}) {
        for (std::size_t si = 0; si < statuses.size(); ++si) {
            if (report.verdicts[si].verdict != verdict) continue;
            StatusRecord rec;
            rec.status = statuses[si];
            rec.verdict = to_string(verdict);
            out += status_to_json_line(rec);
            out += '\n';
        }
    }
    return out;
}

}  // namespace twistsieve
