#include "twistsieve/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistsieve/dynamic_creator.hpp"
#include "twistsieve/generator.hpp"
#include "twistsieve/sieve.hpp"
#include "twistsieve/stat_tests.hpp"
#include "twistsieve/status_io.hpp"
#include "twistsieve/word_source.hpp"

namespace twistsieve {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCampaign = 2;

TestSpec spec_from_json(const ordered_json& j) {
    if (j.is_string()) return named_spec(j.get<std::string>());
    TestSpec spec = named_spec(j.at("test").get<std::string>());
    if (j.contains("N")) spec.N = j.at("N").get<std::uint32_t>();
    if (j.contains("n")) spec.n = j.at("n").get<std::uint64_t>();
    if (j.contains("r")) spec.r = j.at("r").get<std::uint32_t>();
    if (j.contains("alpha")) spec.alpha = j.at("alpha").get<double>();
    if (j.contains("beta")) spec.beta = j.at("beta").get<double>();
    if (j.contains("s")) spec.s = j.at("s").get<std::uint32_t>();
    if (j.contains("L")) spec.L = j.at("L").get<std::uint32_t>();
    if (j.contains("d")) spec.d = j.at("d").get<std::uint32_t>();
    if (j.contains("l")) spec.l = j.at("l").get<std::uint32_t>();
    if (j.contains("t")) spec.t = j.at("t").get<std::uint32_t>();
    spec.validate();
    return spec;
}

ordered_json spec_to_json(const TestSpec& spec) {
    ordered_json j;
    j["test"] = spec.test_id;
    j["N"] = spec.N;
    j["n"] = spec.n;
    j["r"] = spec.r;
    j["alpha"] = spec.alpha;
    j["beta"] = spec.beta;
    j["s"] = spec.s;
    j["L"] = spec.L;
    j["d"] = spec.d;
    j["l"] = spec.l;
    j["t"] = spec.t;
    return j;
}

struct CampaignSetup {
    std::vector<ParameterizedStatus> statuses;
    std::vector<TestSpec> specs;
    SeedPolicy policy;
    unsigned workers = 1;
    fs::path out_dir;
};

std::vector<ParameterizedStatus> statuses_from_records(
    const std::vector<StatusRecord>& records) {
    std::vector<ParameterizedStatus> out;
    out.reserve(records.size());
    for (const auto& rec : records) out.push_back(rec.status);
    return out;
}

CampaignSetup load_campaign_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path.string());
    ordered_json j;
    in >> j;

    CampaignSetup setup;
    if (j.contains("statuses")) {
        setup.statuses = statuses_from_records(
            read_status_file(j.at("statuses").get<std::string>()));
    } else if (j.contains("preset")) {
        const auto name = j.at("preset").get<std::string>();
        if (name != "mt19937") throw std::invalid_argument("unknown preset: " + name);
        setup.statuses.push_back(mt19937_params());
    } else if (j.contains("dc")) {
        const auto& d = j.at("dc");
        const auto mexp = d.at("mexp").get<std::uint32_t>();
        const auto ids = d.at("ids");
        const auto seed = d.value("search_seed", std::uint64_t{1});
        setup.statuses = dc_search_batch(mexp, ids.at(0).get<std::uint16_t>(),
                                         ids.at(1).get<std::uint16_t>(), seed);
    } else {
        throw std::invalid_argument("config needs one of: statuses, preset, dc");
    }
    if (setup.statuses.empty()) throw std::invalid_argument("no statuses");

    if (!j.contains("tests")) throw std::invalid_argument("config needs tests");
    for (const auto& t : j.at("tests")) setup.specs.push_back(spec_from_json(t));

    if (j.contains("seed_policy")) {
        const auto& sp = j.at("seed_policy");
        const auto type = sp.at("type").get<std::string>();
        if (type == "fixed") {
            setup.policy = SeedPolicy::fixed(sp.value("seed", 0u));
        } else if (type == "random-spacing") {
            setup.policy = SeedPolicy::random_spacing(
                sp.at("count").get<std::uint32_t>(),
                sp.value("source", std::uint64_t{0}));
        } else {
            throw std::invalid_argument("unknown seed policy: " + type);
        }
    } else {
        setup.policy = SeedPolicy::fixed(0);
    }

    setup.workers = j.value("workers", 1u);
    setup.out_dir = j.value("out_dir", std::string{"out"});

    if (const char* env = std::getenv("TWISTSIEVE_WORKERS")) {
        setup.workers = static_cast<unsigned>(std::stoul(env));
    }
    if (const char* env = std::getenv("TWISTSIEVE_OUT")) setup.out_dir = env;
    if (setup.workers < 1) throw std::invalid_argument("workers must be >= 1");
    return setup;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ordered_json campaign_metadata(const CampaignSetup& setup, const SieveReport& report,
                               bool grid) {
    ordered_json j;
    ordered_json ids = ordered_json::array();
    for (const auto& id : report.status_ids) ids.push_back(id);
    j["status_ids"] = ids;
    ordered_json seeds = ordered_json::array();
    for (auto s : report.seeds) seeds.push_back(s);
    j["seeds"] = seeds;
    ordered_json policy;
    policy["type"] =
        setup.policy.kind == SeedPolicy::Kind::fixed ? "fixed" : "random-spacing";
    policy["seed"] = setup.policy.fixed_seed;
    policy["count"] = setup.policy.count;
    policy["source"] = setup.policy.source;
    j["seed_policy"] = policy;
    ordered_json specs = ordered_json::array();
    for (const auto& sp : setup.specs) specs.push_back(spec_to_json(sp));
    j["tests"] = specs;
    j["grid"] = grid;
    return j;
}

void write_campaign_outputs(const CampaignSetup& setup, const SieveReport& report,
                            bool grid) {
    fs::create_directories(setup.out_dir);
    write_text(setup.out_dir / "results.csv", report.results_csv());
    write_text(setup.out_dir / "summary.txt", report.summary_text());
    write_text(setup.out_dir / "verified.jsonl",
               verified_statuses_jsonl(report, setup.statuses));
    if (grid) write_text(setup.out_dir / "grid.csv", report.grid_csv());
    write_text(setup.out_dir / "campaign.json",
               campaign_metadata(setup, report, grid).dump(2) + "\n");
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

SieveReport report_from_dir(const fs::path& dir) {
    std::ifstream meta_in(dir / "campaign.json");
    if (!meta_in)
        throw std::invalid_argument("cannot open " + (dir / "campaign.json").string());
    ordered_json meta;
    meta_in >> meta;

    SieveReport report;
    for (const auto& id : meta.at("status_ids"))
        report.status_ids.push_back(id.get<std::string>());
    for (const auto& s : meta.at("seeds"))
        report.seeds.push_back(s.get<std::uint32_t>());
    const auto& pol = meta.at("seed_policy");
    if (pol.at("type").get<std::string>() == "fixed") {
        report.policy = SeedPolicy::fixed(pol.at("seed").get<std::uint32_t>());
    } else {
        report.policy = SeedPolicy::random_spacing(
            pol.at("count").get<std::uint32_t>(), pol.at("source").get<std::uint64_t>());
    }
    for (const auto& t : meta.at("tests")) report.specs.push_back(spec_from_json(t));

    std::ifstream in(dir / "results.csv");
    if (!in) throw std::invalid_argument("cannot open " + (dir / "results.csv").string());
    std::string line;
    std::getline(in, line);  // header
    const std::size_t n_specs = report.specs.size();
    const std::size_t n_seeds = report.seeds.size();
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 9) throw std::runtime_error("malformed results row: " + line);
        ResultRow row;
        row.status_id = f[0];
        row.test_id = f[1];
        row.seed_index = static_cast<std::uint32_t>(std::stoul(f[2]));
        row.seed = static_cast<std::uint32_t>(std::stoul(f[3]));
        row.status_index = static_cast<std::uint32_t>(index / (n_seeds * n_specs));
        if (f[6] == "error") {
            row.error = f[8].empty() ? "error" : f[8];
        } else {
            row.statistic = std::strtod(f[4].c_str(), nullptr);
            row.p_value = std::strtod(f[5].c_str(), nullptr);
            if (f[6] == "correct") row.classification = PValueClass::correct;
            else if (f[6] == "suspect") row.classification = PValueClass::suspect;
            else if (f[6] == "disastrous") row.classification = PValueClass::disastrous;
            else throw std::runtime_error("unknown classification: " + f[6]);
            row.degenerate = f[7] == "1";
        }
        report.rows.push_back(std::move(row));
        ++index;
    }
    aggregate_report(report, meta.value("grid", false));
    return report;
}

int run_dc(std::uint32_t mexp, const std::string& ids, const std::string& out_file,
           std::uint64_t search_seed, std::uint32_t budget) {
    const auto sep = ids.find("..");
    std::uint32_t first = 0;
    std::uint32_t last = 0;
    try {
        if (sep == std::string::npos) {
            first = last = static_cast<std::uint32_t>(std::stoul(ids));
        } else {
            first = static_cast<std::uint32_t>(std::stoul(ids.substr(0, sep)));
            last = static_cast<std::uint32_t>(std::stoul(ids.substr(sep + 2)));
        }
    } catch (const std::exception&) {
        std::cerr << "bad id range: " << ids << "\n";
        return kExitUsage;
    }
    if (last < first || last > 0xFFFF) {
        std::cerr << "bad id range: " << ids << "\n";
        return kExitUsage;
    }
    std::vector<StatusRecord> records;
    for (std::uint32_t id = first; id <= last; ++id) {
        StatusRecord rec;
        rec.status = dc_search(mexp, static_cast<std::uint16_t>(id), search_seed, budget);
        records.push_back(std::move(rec));
    }
    write_status_file(out_file, records);
    std::cout << "minted " << records.size() << " statuses (mexp=" << mexp
              << ") -> " << out_file << "\n";
    return kExitOk;
}

std::vector<ParameterizedStatus> resolve_statuses(const std::string& status_file,
                                                  const std::string& preset,
                                                  std::optional<std::uint32_t> id) {
    std::vector<ParameterizedStatus> statuses;
    if (!preset.empty()) {
        if (preset != "mt19937") throw std::invalid_argument("unknown preset: " + preset);
        statuses.push_back(mt19937_params());
    } else if (!status_file.empty()) {
        statuses = statuses_from_records(read_status_file(status_file));
    } else {
        throw std::invalid_argument("need --status or --preset");
    }
    if (id) {
        std::vector<ParameterizedStatus> picked;
        for (const auto& st : statuses)
            if (st.id == *id) picked.push_back(st);
        if (picked.empty())
            throw std::invalid_argument("id " + std::to_string(*id) + " not in status set");
        statuses = std::move(picked);
    }
    if (statuses.empty()) throw std::invalid_argument("no statuses");
    return statuses;
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"parameterized twister family: mint, generate, test, sieve"};
    app.require_subcommand(1);

    auto* dc = app.add_subcommand("dc", "mint full-period statuses");
    std::uint32_t dc_mexp = 89;
    std::string dc_ids = "0..9";
    std::string dc_out = "statuses.jsonl";
    std::uint64_t dc_seed = 1;
    std::uint32_t dc_budget = kDefaultSearchBudget;
    dc->add_option("--mexp", dc_mexp, "period exponent")->required();
    dc->add_option("--ids", dc_ids, "id range A..B (inclusive)")->required();
    dc->add_option("--out", dc_out, "output status file")->required();
    dc->add_option("--search-seed", dc_seed, "candidate stream seed");
    dc->add_option("--budget", dc_budget, "candidates per id before giving up");

    auto* gen = app.add_subcommand("gen", "dump output words in decimal");
    std::string gen_status, gen_preset;
    std::optional<std::uint32_t> gen_id;
    std::uint32_t gen_seed = 5489;
    std::uint64_t gen_count = 10;
    gen->add_option("--status", gen_status, "status file");
    gen->add_option("--preset", gen_preset, "built-in preset (mt19937)");
    gen->add_option("--id", gen_id, "pick one creator id from the file");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--count", gen_count, "words to emit");

    auto* test = app.add_subcommand("test", "run one test spec");
    std::string test_status, test_preset, test_spec_name;
    std::optional<std::uint32_t> test_id_opt;
    std::uint32_t test_seed = 0;
    test->add_option("--status", test_status, "status file");
    test->add_option("--preset", test_preset, "built-in preset (mt19937)");
    test->add_option("--id", test_id_opt, "pick one creator id from the file");
    test->add_option("--spec", test_spec_name, "gap|hamming|opso|walk")->required();
    test->add_option("--seed", test_seed, "seed");

    auto* sieve = app.add_subcommand("sieve", "run a sieving campaign");
    std::string sieve_config;
    sieve->add_option("--config", sieve_config, "campaign config (JSON)")->required();

    auto* cross = app.add_subcommand("cross", "run the Random Spacing cross experiment");
    std::string cross_config;
    cross->add_option("--config", cross_config, "campaign config (JSON)")->required();

    auto* rep = app.add_subcommand("report", "regenerate summary tables from results");
    std::string rep_dir;
    rep->add_option("--in", rep_dir, "campaign output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);  // --help
            return kExitOk;
        }
        std::cerr << app.help() << "\nerror: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dc->parsed()) return run_dc(dc_mexp, dc_ids, dc_out, dc_seed, dc_budget);

        if (gen->parsed()) {
            const auto statuses = resolve_statuses(gen_status, gen_preset, gen_id);
            auto source = make_word_source(statuses.front(), gen_seed);
            std::vector<std::uint32_t> buf(1024);
            std::uint64_t left = gen_count;
            while (left > 0) {
                const std::size_t batch =
                    static_cast<std::size_t>(std::min<std::uint64_t>(left, buf.size()));
                source->fill(std::span<std::uint32_t>(buf.data(), batch));
                for (std::size_t i = 0; i < batch; ++i) std::cout << buf[i] << "\n";
                left -= batch;
            }
            return kExitOk;
        }

        if (test->parsed()) {
            const auto statuses = resolve_statuses(test_status, test_preset, test_id_opt);
            const TestSpec spec = named_spec(test_spec_name);
            SieveReport report = run_campaign(statuses, SeedPolicy::fixed(test_seed),
                                              {spec}, 1);
            std::cout << report.results_csv();
            return kExitOk;
        }

        if (sieve->parsed() || cross->parsed()) {
            CampaignSetup setup;
            try {
                setup = load_campaign_config(sieve->parsed() ? sieve_config : cross_config);
                if (cross->parsed() &&
                    setup.policy.kind != SeedPolicy::Kind::random_spacing)
                    throw std::invalid_argument(
                        "cross requires a random-spacing seed policy");
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            try {
                const bool grid = cross->parsed();
                SieveReport report =
                    grid ? random_spacing_cross(setup.statuses, setup.policy.count,
                                                setup.policy.source, setup.specs,
                                                setup.workers)
                         : run_campaign(setup.statuses, setup.policy, setup.specs,
                                        setup.workers);
                write_campaign_outputs(setup, report, grid);
                std::cout << report.summary_text();
                return kExitOk;
            } catch (const std::exception& e) {
                std::cerr << "campaign failed: " << e.what() << "\n";
                return kExitCampaign;
            }
        }

        if (rep->parsed()) {
            SieveReport report = report_from_dir(rep_dir);
            write_text(fs::path(rep_dir) / "summary.txt", report.summary_text());
            std::cout << report.summary_text();
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCampaign;
    }
    return kExitUsage;
}

}  // namespace twistsieve
