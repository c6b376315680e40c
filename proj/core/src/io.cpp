#include "antimagic/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace antimagic {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    auto toks = split_ws(line);
    if (!toks.empty() && toks[0].front() != '#') out.push_back({number, std::move(toks)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<long long> ints(const Line& l, std::size_t expected) {
  if (l.tokens.size() != expected) {
    throw ParseError(l.number, "expected " + std::to_string(expected) + " integers");
  }
  std::vector<long long> out(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (!to_int(l.tokens[i], out[i])) throw ParseError(l.number, "not an integer: " + std::string(l.tokens[i]));
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  auto header = ints(lines[0], 2);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 0 || m < 0) throw ParseError(lines[0].number, "negative size in header");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    int at = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[static_cast<std::size_t>(m) + 1].number
                                                            : lines.back().number + 1;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
  }
  std::map<std::pair<int, int>, int> seen;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = ints(lines[i], 2);
    const int ln = lines[i].number;
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) throw ParseError(ln, "vertex out of range");
    if (uv[0] == uv[1]) throw ParseError(ln, "self-loop at vertex " + std::to_string(uv[0]));
    std::pair<int, int> key{static_cast<int>(std::min(uv[0], uv[1])), static_cast<int>(std::max(uv[0], uv[1]))};
    auto [it, fresh] = seen.emplace(key, ln);
    if (!fresh) throw ParseError(ln, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
    edges.push_back(key);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw PreconditionError("graph6 writer supports n <= 258047");
  }
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(1, "empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 character");
  }
  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == 126) throw ParseError(1, "graph6 sizes above 258047 are not supported");
    if (line.size() < 4) throw ParseError(1, "truncated graph6 size");
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    pos = 4;
  }
  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != need) throw ParseError(1, "graph6 length does not match n");
  std::vector<std::pair<int, int>> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  for (const Line& l : content_lines(text)) {
    try {
      out.push_back(from_graph6(l.tokens[0]));
    } catch (const ParseError& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return out;
}

std::string emit_certificate(const Graph& g, const Labeling& l) {
  std::ostringstream os;
  for (EdgeId e = 0; e < g.m(); ++e) os << g.edge(e).u << ' ' << g.edge(e).v << ' ' << l.labels.at(e) << '\n';
  WeightMap w = vertex_sums(g, l);
  for (Vertex v = 0; v < g.n(); ++v) os << v << ' ' << w[v] << '\n';
  auto rep = verify_antimagic(g, l);
  if (rep.ok) {
    os << "OK\n";
  } else if (rep.first_collision) {
    os << "COLLISION " << rep.first_collision->first << ' ' << rep.first_collision->second << '\n';
  } else {
    os << "NOT_BIJECTION\n";
  }
  return os.str();
}

Certificate parse_certificate(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<Label> labels;
  WeightMap sums;
  std::optional<bool> verdict;
  for (const Line& l : content_lines(text)) {
    if (verdict) throw ParseError(l.number, "content after the verdict line");
    if (l.tokens[0] == "OK") {
      verdict = true;
    } else if (l.tokens[0] == "COLLISION" || l.tokens[0] == "NOT_BIJECTION") {
      verdict = false;
    } else if (l.tokens.size() == 3) {
      if (!sums.empty()) throw ParseError(l.number, "edge line after vertex lines");
      auto x = ints(l, 3);
      edges.emplace_back(static_cast<int>(x[0]), static_cast<int>(x[1]));
      labels.push_back(x[2]);
    } else if (l.tokens.size() == 2) {
      auto x = ints(l, 2);
      if (x[0] != static_cast<long long>(sums.size())) throw ParseError(l.number, "vertex lines must be 0..n-1 in order");
      sums.push_back(x[1]);
    } else {
      throw ParseError(l.number, "unrecognized certificate line");
    }
  }
  if (!verdict) throw ParseError(1, "certificate has no verdict line");
  Certificate c;
  try {
    c.graph = Graph::from_edges(static_cast<int>(sums.size()), edges);
  } catch (const StructuralError& e) {
    throw ParseError(1, e.what());
  }
  c.labeling.labels.assign(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    c.labeling.labels[*c.graph.find_edge(edges[i].first, edges[i].second)] = labels[i];
  }
  c.claimed_sums = std::move(sums);
  c.claimed_ok = *verdict;
  return c;
}

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

}  // namespace antimagic
