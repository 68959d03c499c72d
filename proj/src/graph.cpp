#include "srginv/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "srginv/error.hpp"

namespace srginv {

namespace {

constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 18;

bool is_blank_line(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

// ---- Graph -----------------------------------------------------------------

std::size_t Graph::degree(Vertex a) const {
  std::size_t d = 0;
  for (auto w : row(a)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

Matrix Graph::adjacency_matrix() const {
  Matrix m(order_);
  for (Vertex a = 0; a < order_; ++a)
    for (Vertex b = 0; b < order_; ++b) m(a, b) = adjacent(a, b) ? 1 : 0;
  return m;
}

GraphBuilder::GraphBuilder(std::size_t order) {
  g_.order_ = order;
  g_.words_ = (order + 63) / 64;
  g_.bits_.assign(order * g_.words_, 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex a, Vertex b) {
  if (a >= g_.order_ || b >= g_.order_) {
    throw PreconditionError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                            "} out of range for " + std::to_string(g_.order_) + " vertices");
  }
  if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
  if (g_.adjacent(a, b)) return *this;
  g_.bits_[a * g_.words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63U);
  g_.bits_[b * g_.words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63U);
  ++g_.edges_;
  return *this;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph make_graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(order);
  for (auto [x, y] : edges) b.add_edge(x, y);
  return std::move(b).build();
}

std::string SrgParams::label() const {
  auto opt = [](const std::optional<std::uint32_t>& x) {
    return x ? std::to_string(*x) : std::string("?");
  };
  return std::to_string(v) + "-" + std::to_string(k) + "-" + opt(lambda) + "-" + opt(mu);
}

// ---- graph6 ----------------------------------------------------------------

Graph parse_graph6(std::string_view record) {
  if (record.starts_with(">>graph6<<")) record.remove_prefix(10);
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
    record.remove_suffix(1);
  if (record.empty()) throw ParseError("graph6: empty record", 0);
  for (std::size_t i = 0; i < record.size(); ++i) {
    const auto c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                           " is outside 63..126",
                       i);
    }
  }
  auto sextet = [&](std::size_t i) -> std::uint64_t {
    return static_cast<unsigned char>(record[i]) - 63U;
  };

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (record[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else if (record.size() >= 2 && record[1] != '~') {
    if (record.size() < 4) throw ParseError("graph6: truncated length header", record.size());
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  } else {
    if (record.size() < 8) throw ParseError("graph6: truncated length header", record.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    pos = 8;
  }
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds 2^18", 0);
  }

  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t nbytes = (nbits + 5) / 6;
  if (record.size() - pos != nbytes) {
    const std::size_t at = std::min<std::size_t>(record.size(), pos + nbytes);
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(record.size() - pos),
                     at);
  }

  GraphBuilder builder(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) builder.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const std::uint64_t last = sextet(record.size() - 1);
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - nbits % 6)) - 1;
    if (last & pad_mask)
      throw ParseError("graph6: nonzero padding bits in final byte", record.size() - 1);
  }
  return std::move(builder).build();
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63U)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> graphs;
  bool first = true;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (first && line.starts_with(">>graph6<<")) line.remove_prefix(10);
    first = false;
    if (is_blank_line(line)) continue;
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
    }
  }
  return graphs;
}

// ---- raw 0/1 rows ----------------------------------------------------------

std::vector<Graph> parse_adjacency_rows(std::string_view text) {
  std::vector<Graph> graphs;
  std::vector<std::string> block;
  std::vector<std::size_t> block_lines;
  std::size_t block_index = 0;

  auto flush = [&]() {
    if (block.empty()) return;
    const std::size_t n = block.size();
    auto where = [&](std::size_t r) {
      return "block " + std::to_string(block_index) + ", line " + std::to_string(block_lines[r]);
    };
    for (std::size_t r = 0; r < n; ++r) {
      if (block[r].size() != n) {
        throw ParseError("rows: " + where(r) + ": row has " + std::to_string(block[r].size()) +
                             " entries, block has " + std::to_string(n) + " rows",
                         block_lines[r]);
      }
    }
    GraphBuilder builder(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (block[r][r] != '0')
        throw ParseError("rows: " + where(r) + ": nonzero diagonal", block_lines[r]);
      for (std::size_t c = 0; c < n; ++c) {
        if (block[r][c] != block[c][r]) {
          throw ParseError("rows: " + where(r) + ": asymmetric entry (" + std::to_string(r) +
                               "," + std::to_string(c) + ")",
                           block_lines[r]);
        }
        if (c > r && block[r][c] == '1')
          builder.add_edge(static_cast<Vertex>(r), static_cast<Vertex>(c));
      }
    }
    graphs.push_back(std::move(builder).build());
    block.clear();
    block_lines.clear();
    ++block_index;
  };

  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (is_blank_line(line)) {
      flush();
      continue;
    }
    std::string row;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c == '0' || c == '1') {
        row.push_back(c);
      } else if (c != ' ' && c != '\t') {
        throw ParseError("rows: block " + std::to_string(block_index) + ", line " +
                             std::to_string(line_no) + ": stray character '" + std::string(1, c) +
                             "'",
                         line_no);
      }
    }
    block.push_back(std::move(row));
    block_lines.push_back(line_no);
  }
  flush();
  return graphs;
}

std::vector<Graph> parse_graphs(std::string_view text, InputFormat format) {
  if (format == InputFormat::automatic) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    format = (text[first] == '0' || text[first] == '1') ? InputFormat::rows : InputFormat::graph6;
  }
  return format == InputFormat::rows ? parse_adjacency_rows(text) : parse_graph6_lines(text);
}

std::vector<Graph> read_graphs(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graphs(buffer.str(), format);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.offset());
  }
}

// ---- queries ---------------------------------------------------------------

std::vector<Vertex> neighborhood(const Graph& g, Vertex a) {
  if (a >= g.order())
    throw PreconditionError("vertex " + std::to_string(a) + " out of range");
  std::vector<Vertex> out;
  const auto row = g.row(a);
  for (std::size_t w = 0; w < row.size(); ++w) {
    for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.order())
      throw PreconditionError("vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw PreconditionError("induced_subgraph: vertex list must be strictly increasing");
  }
  GraphBuilder builder(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) builder.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(builder).build();
}

Graph complement(const Graph& g) {
  GraphBuilder builder(g.order());
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (!g.adjacent(a, b)) builder.add_edge(a, b);
  return std::move(builder).build();
}

SrgCheck check_srg(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw PreconditionError("check_srg requires at least 2 vertices");
  SrgCheck result;
  const std::size_t k = g.degree(0);
  for (Vertex a = 1; a < n; ++a) {
    if (g.degree(a) != k) {
      result.reason = "not regular: vertex 0 has degree " + std::to_string(k) + ", vertex " +
                      std::to_string(a) + " has degree " + std::to_string(g.degree(a));
      return result;
    }
  }
  std::optional<std::uint32_t> lambda, mu;
  for (Vertex a = 0; a < n; ++a) {
    const auto ra = g.row(a);
    for (Vertex b = a + 1; b < n; ++b) {
      const auto rb = g.row(b);
      std::uint32_t common = 0;
      for (std::size_t w = 0; w < ra.size(); ++w)
        common += static_cast<std::uint32_t>(std::popcount(ra[w] & rb[w]));
      auto& expected = g.adjacent(a, b) ? lambda : mu;
      if (!expected) {
        expected = common;
      } else if (*expected != common) {
        result.reason = std::string(g.adjacent(a, b) ? "adjacent" : "non-adjacent") + " pair (" +
                        std::to_string(a) + "," + std::to_string(b) + ") has " +
                        std::to_string(common) + " common neighbours, expected " +
                        std::to_string(*expected) + (g.adjacent(a, b) ? " (lambda)" : " (mu)");
        return result;
      }
    }
  }
  result.params = SrgParams{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), lambda, mu};
  return result;
}

std::pair<Eigenvalue, Eigenvalue> srg_eigenvalues(const SrgParams& p) {
  if (!p.lambda || !p.mu) throw PreconditionError("srg_eigenvalues: lambda and mu must be defined");
  const std::int64_t diff = static_cast<std::int64_t>(*p.lambda) - static_cast<std::int64_t>(*p.mu);
  const std::int64_t disc = diff * diff + 4 * (static_cast<std::int64_t>(p.k) - *p.mu);
  if (disc < 0) {
    throw Error("infeasible parameters " + p.label() + ": negative discriminant " +
                std::to_string(disc));
  }
  const double root = std::sqrt(static_cast<double>(disc));
  Eigenvalue r{(static_cast<double>(diff) + root) / 2.0, std::nullopt};
  Eigenvalue s{(static_cast<double>(diff) - root) / 2.0, std::nullopt};

  auto isqrt = static_cast<std::int64_t>(std::llround(root));
  while (isqrt * isqrt > disc) --isqrt;
  while ((isqrt + 1) * (isqrt + 1) <= disc) ++isqrt;
  if (isqrt * isqrt == disc) {
    auto reduced = [](std::int64_t num) {
      const std::int64_t g = std::gcd(num, std::int64_t{2});
      return Rational{num / g, 2 / g};
    };
    r.exact = reduced(diff + isqrt);
    s.exact = reduced(diff - isqrt);
    r.value = static_cast<double>(r.exact->num) / static_cast<double>(r.exact->den);
    s.value = static_cast<double>(s.exact->num) / static_cast<double>(s.exact->den);
  }
  return {r, s};
}

InvariantVector trace_power_signature(const Graph& g, unsigned pmax, Arithmetic arithmetic) {
  if (pmax < 1 || pmax > g.order())
    throw PreconditionError("trace_power_signature requires 1 <= pmax <= v");
  const auto rings = rings_for(arithmetic);
  const Matrix a = g.adjacency_matrix();
  InvariantVector out(pmax * rings.size());
  for (std::size_t r = 0; r < rings.size(); ++r) {
    Matrix current = a;
    for (unsigned p = 1; p <= pmax; ++p) {
      if (p > 1) current = multiply(current, a, rings[r]);
      out[(p - 1) * rings.size() + r] = current.trace(rings[r]);
    }
  }
  return out;
}

}  // namespace srginv
