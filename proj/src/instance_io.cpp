#include "bbmatch/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bbm::io {

namespace {

using nlohmann::json;

Color parse_color(std::string_view token, int line) {
  if (token == "R" || token == "r") return Color::Red;
  if (token == "B" || token == "b") return Color::Blue;
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": color must be R or B, got '" +
                                    std::string(token) + "'");
}

double parse_double(std::string_view token, int line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": bad number '" + std::string(token) + "'");
  }
  return value;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

}  // namespace

std::vector<ColoredPoint> parse_points_text(std::string_view text) {
  std::vector<ColoredPoint> points;
  long expected = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (expected < 0) {
      if (tokens.size() != 1) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected point count");
      const auto* end = tokens[0].data() + tokens[0].size();
      const auto [ptr, ec] = std::from_chars(tokens[0].data(), end, expected);
      if (ec != std::errc() || ptr != end || expected < 0) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad point count");
      }
      continue;
    }
    if (tokens.size() != 3) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 'x y c'");
    }
    points.push_back({parse_double(tokens[0], line_no), parse_double(tokens[1], line_no),
                      parse_color(tokens[2], line_no)});
  }
  if (expected < 0) throw Error(ErrorCode::Parse, "missing point count");
  if (static_cast<long>(points.size()) != expected) {
    throw Error(ErrorCode::Parse, "header says " + std::to_string(expected) + " points, found " +
                                      std::to_string(points.size()));
  }
  return points;
}

std::vector<ColoredPoint> parse_points_json(std::string_view text) {
  std::vector<ColoredPoint> points;
  try {
    const json doc = json::parse(text);
    for (const auto& p : doc.at("points")) {
      points.push_back({p.at("x").get<double>(), p.at("y").get<double>(),
                        parse_color(p.at("c").get<std::string>(), 0)});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return points;
}

std::vector<ColoredPoint> parse_points(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_points_json(text);
  return parse_points_text(text);
}

std::string write_text(const std::vector<ColoredPoint>& points) {
  std::string out = std::to_string(points.size()) + "\n";
  for (const auto& p : points) {
    out += format_double(p.x);
    out += ' ';
    out += format_double(p.y);
    out += ' ';
    out += to_char(p.color);
    out += '\n';
  }
  return out;
}

std::string write_json(const std::vector<ColoredPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) {
    arr.push_back({{"x", p.x}, {"y", p.y}, {"c", std::string(1, to_char(p.color))}});
  }
  return json{{"points", std::move(arr)}}.dump() + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

Instance load_instance(const std::filesystem::path& path) {
  return Instance::validate(parse_points(read_file(path)));
}

std::vector<IndexPair> parse_matching_json(std::string_view text) {
  std::vector<IndexPair> pairs;
  try {
    const json doc = json::parse(text);
    for (const auto& p : doc.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::Parse, "each pair must be [i, j]");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return pairs;
}

}  // namespace bbm::io
