#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "twistsieve/params.hpp"

namespace twistsieve {

struct StatusRecord {
    ParameterizedStatus status;
    std::optional<std::uint32_t> seed;
    std::string verdict;  // empty unless re-emitted by the sieve
};

// One status per line. JSON objects with canonical field order; the
// reader also accepts self-describing key=value lines (0x-prefixed hex
// allowed for the coefficient fields).
std::string status_to_json_line(const StatusRecord& rec);
StatusRecord status_from_line(const std::string& line);

std::vector<StatusRecord> read_status_file(const std::filesystem::path& path);
void write_status_file(const std::filesystem::path& path,
                       const std::vector<StatusRecord>& records);

}  // namespace twistsieve
