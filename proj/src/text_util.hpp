#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edcol/graph.hpp"

// Shared helpers for the line-oriented file formats.
namespace edcol::detail {

/// Splits on LF. A single trailing LF does not produce an empty last line.
std::vector<std::string_view> split_lines(std::string_view text);

bool is_comment(std::string_view line);

/// Splits on single spaces. nullopt when the line has leading/trailing/double
/// spaces, tabs or CR (the formats forbid stray whitespace).
std::optional<std::vector<std::string_view>> split_tokens(std::string_view line);

std::optional<long long> parse_int(std::string_view s);

/// "c label <v> <name>" -> (v, name); nullopt for any other comment.
std::optional<std::pair<Vertex, std::string>> parse_label_comment(std::string_view line, int line_no);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace edcol::detail
