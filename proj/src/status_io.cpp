#include "twistsieve/status_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twistsieve {

namespace {

using ordered_json = nlohmann::ordered_json;

ParameterizedStatus status_from_json(const ordered_json& j) {
    ParameterizedStatus p;
    p.id = j.at("id").get<std::uint16_t>();
    p.mexp = j.at("mexp").get<std::uint32_t>();
    p.word_size = j.value("word_size", 32u);
    p.n = j.at("n").get<std::uint32_t>();
    p.m = j.at("m").get<std::uint32_t>();
    p.r = j.at("r").get<std::uint32_t>();
    p.a = j.at("a").get<std::uint32_t>();
    p.temper_b = j.at("temper_b").get<std::uint32_t>();
    p.temper_c = j.at("temper_c").get<std::uint32_t>();
    p.temper_u = j.value("temper_u", 11u);
    p.temper_s = j.value("temper_s", 7u);
    p.temper_t = j.value("temper_t", 15u);
    p.temper_l = j.value("temper_l", 18u);
    p.charpoly_digest = j.value("charpoly_digest", std::string{});
    p.engine = engine_from_string(j.value("engine", std::string{"mt"}));
    return p;
}

std::uint64_t parse_uint(const std::string& v) {
    std::size_t used = 0;
    const std::uint64_t out = std::stoull(v, &used, 0);  // base 0: 0x accepted
    if (used != v.size()) throw std::invalid_argument("bad numeric value: " + v);
    return out;
}

StatusRecord status_from_kv(const std::string& line) {
    StatusRecord rec;
    ParameterizedStatus& p = rec.status;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got: " + token);
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "id") p.id = static_cast<std::uint16_t>(parse_uint(value));
        else if (key == "mexp") p.mexp = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "word_size") p.word_size = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "n") p.n = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "m") p.m = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "r") p.r = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "a") p.a = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "temper_b") p.temper_b = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "temper_c") p.temper_c = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "temper_u") p.temper_u = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "temper_s") p.temper_s = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "temper_t") p.temper_t = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "temper_l") p.temper_l = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "charpoly_digest") p.charpoly_digest = value;
        else if (key == "engine") p.engine = engine_from_string(value);
        else if (key == "seed") rec.seed = static_cast<std::uint32_t>(parse_uint(value));
        else if (key == "verdict") rec.verdict = value;
        else throw std::invalid_argument("unknown status field: " + key);
    }
    return rec;
}

}  // namespace

std::string status_to_json_line(const StatusRecord& rec) {
    const ParameterizedStatus& p = rec.status;
    ordered_json j;
    j["id"] = p.id;
    j["mexp"] = p.mexp;
    j["word_size"] = p.word_size;
    j["n"] = p.n;
    j["m"] = p.m;
    j["r"] = p.r;
    j["a"] = p.a;
    j["temper_b"] = p.temper_b;
    j["temper_c"] = p.temper_c;
    j["temper_u"] = p.temper_u;
    j["temper_s"] = p.temper_s;
    j["temper_t"] = p.temper_t;
    j["temper_l"] = p.temper_l;
    j["charpoly_digest"] = p.charpoly_digest;
    if (p.engine != Engine::mt) j["engine"] = to_string(p.engine);
    if (rec.seed) j["seed"] = *rec.seed;
    if (!rec.verdict.empty()) j["verdict"] = rec.verdict;
    return j.dump();
}

StatusRecord status_from_line(const std::string& line) {
    StatusRecord rec;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '{') {
        const ordered_json j = ordered_json::parse(line);
        rec.status = status_from_json(j);
        if (j.contains("seed")) rec.seed = j.at("seed").get<std::uint32_t>();
        if (j.contains("verdict")) rec.verdict = j.at("verdict").get<std::string>();
    } else {
        rec = status_from_kv(line);
    }
    rec.status.validate();
    return rec;
}

std::vector<StatusRecord> read_status_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open status file: " + path.string());
    std::vector<StatusRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(status_from_line(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return out;
}

void write_status_file(const std::filesystem::path& path,
                       const std::vector<StatusRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write status file: " + path.string());
    for (const auto& rec : records) out << status_to_json_line(rec) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace twistsieve
