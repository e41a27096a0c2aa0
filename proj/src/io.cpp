#include "kdiam/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  token = trim(token);
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InputError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Point parse_xy(std::string_view line, std::size_t line_no) {
  auto comma = line.find(',');
  if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
    throw InputError("line " + std::to_string(line_no) + ": expected 'x,y'");
  }
  Point p(parse_number<double>(line.substr(0, comma), line_no),
          parse_number<double>(line.substr(comma + 1), line_no));
  if (!p.allFinite()) throw InputError("line " + std::to_string(line_no) + ": non-finite coordinate");
  return p;
}

template <typename Reader>
auto with_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return reader(in);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!trim(line).empty()) return true;
    }
    return false;
  };
  if (!next_content_line()) throw InputError("empty edge list");
  auto header = split_ws(line);
  if (header.size() != 2) throw InputError("line 1: expected header 'n m'");
  const auto n = parse_number<std::uint64_t>(header[0], line_no);
  const auto m = parse_number<std::uint64_t>(header[1], line_no);
  if (n > std::numeric_limits<Vertex>::max()) throw InputError("vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_content_line()) throw InputError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    auto tok = split_ws(line);
    if (tok.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    auto u = parse_number<Vertex>(tok[0], line_no);
    auto v = parse_number<Vertex>(tok[1], line_no);
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop");
    if (!seen.insert(std::minmax(u, v)).second) {
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge");
    }
    edges.emplace_back(u, v);
  }
  if (next_content_line()) throw InputError("line " + std::to_string(line_no) + ": unexpected trailing content");
  Graph g(n, edges);
  if (!g.is_connected()) throw DisconnectedGraphError();
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::vector<Point> read_points(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    points.push_back(parse_xy(line, line_no));
  }
  return points;
}

void write_points(std::ostream& out, const std::vector<Point>& points) {
  out << std::setprecision(17);
  for (const auto& p : points) out << p.x() << ',' << p.y() << '\n';
}

ConvexPolygon read_polygon(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<Point> vertices;
  std::uint64_t expected = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!have_header) {
      expected = parse_number<std::uint64_t>(line, line_no);
      have_header = true;
      continue;
    }
    vertices.push_back(parse_xy(line, line_no));
  }
  if (!have_header) throw InputError("empty polygon file");
  if (vertices.size() != expected) {
    throw InputError("polygon header says " + std::to_string(expected) + " vertices, found " +
                     std::to_string(vertices.size()));
  }
  return ConvexPolygon(std::move(vertices));
}

void write_polygon(std::ostream& out, const ConvexPolygon& polygon) {
  out << polygon.sides() << '\n';
  write_points(out, polygon.vertices());
}

Graph read_edge_list_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_edge_list(in); });
}

std::vector<Point> read_points_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_points(in); });
}

ConvexPolygon read_polygon_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_polygon(in); });
}

}  // namespace kdiam
