#include "text_util.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "edcol/error.hpp"

namespace edcol::detail {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

bool is_comment(std::string_view line) { return line == "c" || line.starts_with("c "); }

std::optional<std::vector<std::string_view>> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  if (line.empty()) return out;
  if (line.find_first_of("\t\r\v\f") != std::string_view::npos) return std::nullopt;
  std::size_t pos = 0;
  while (true) {
    std::size_t sp = line.find(' ', pos);
    std::string_view tok = line.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
    if (tok.empty()) return std::nullopt;
    out.push_back(tok);
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<std::pair<Vertex, std::string>> parse_label_comment(std::string_view line, int line_no) {
  constexpr std::string_view prefix = "c label ";
  if (!line.starts_with(prefix)) return std::nullopt;
  std::string_view rest = line.substr(prefix.size());
  std::size_t sp = rest.find(' ');
  if (sp == std::string_view::npos || sp + 1 >= rest.size())
    throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'c label <v> <name>'");
  auto v = parse_int(rest.substr(0, sp));
  if (!v) throw ParseError(ParseErrorKind::Malformed, line_no, "bad label vertex");
  return std::make_pair(static_cast<Vertex>(*v), std::string(rest.substr(sp + 1)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace edcol::detail
