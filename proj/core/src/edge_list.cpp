#include "tilinglab/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tilinglab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Parses exactly two unsigned integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip_ws = [&] {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip_ws();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc() || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip_ws();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc() || r2.ptr == p) return false;
  p = r2.ptr;
  skip_ws();
  return p == end;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++number;
    auto cut = text.find('\n', pos);
    std::string_view line =
        trim(text.substr(pos, cut == std::string_view::npos ? std::string_view::npos : cut - pos));
    if (!line.empty()) lines.emplace_back(number, line);
    if (cut == std::string_view::npos) break;
    pos = cut + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!parse_pair(lines[0].second, n, m)) {
    throw ParseError(lines[0].first, "malformed header, expected \"n m\"");
  }
  if (lines.size() - 1 != m) {
    std::size_t at = lines.size() - 1 < m ? lines.back().first + 1 : lines[m + 1].first;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges but " +
                             std::to_string(lines.size() - 1) + " edge lines follow");
  }

  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [lineno, line] = lines[i];
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_pair(line, u, v)) throw ParseError(lineno, "malformed edge, expected \"u v\"");
    if (u >= n || v >= n) {
      throw ParseError(lineno, "vertex index out of range (n = " + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << emit_graph(g);
}

Pattern parse_pattern_spec(std::string_view spec) {
  auto number_after = [&](std::size_t offset) -> std::optional<std::size_t> {
    std::size_t k = 0;
    auto body = spec.substr(offset);
    if (!body.empty() && body.front() == '_') body.remove_prefix(1);
    auto res = std::from_chars(body.data(), body.data() + body.size(), k);
    if (res.ec != std::errc() || res.ptr != body.data() + body.size()) return std::nullopt;
    return k;
  };
  if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P')) {
    if (auto k = number_after(1)) {
      if (*k < 2) throw std::invalid_argument("pattern needs at least 2 vertices");
      if (spec[0] == 'K') return Pattern::clique(*k);
      Graph g(*k);
      for (Vertex i = 0; i + 1 < *k; ++i) g.add_edge(i, i + 1);
      if (spec[0] == 'C') {
        if (*k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        g.add_edge(static_cast<Vertex>(*k - 1), 0);
      }
      return Pattern::from_graph(std::move(g));
    }
  }
  std::string_view path = spec;
  if (path.starts_with("file:")) path.remove_prefix(5);
  return Pattern::from_graph(read_graph_file(std::filesystem::path(std::string(path))));
}

}  // namespace tilinglab
