#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace medread {

std::string read_file(const std::filesystem::path& path);

// Lines split on '\n'; a trailing '\r' is stripped; a final empty line is
// dropped.
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// "key<TAB>value" rows; blank lines skipped. Throws ParseError on rows
// without a tab.
std::vector<std::pair<std::string, std::string>> read_tsv_pairs(
    const std::filesystem::path& path);

double parse_double(std::string_view text, std::string_view what);
std::uint64_t parse_count(std::string_view text, std::string_view what);

// RFC 4180: quotes a field when it contains a comma, quote or newline.
std::string csv_field(std::string_view value);

}  // namespace medread
