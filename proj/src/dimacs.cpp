#include "hedetniemi/dimacs.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hedetniemi/error.hpp"

namespace hedetniemi {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw ParseError("line " + std::to_string(line_no) +
                         ": header must read 'p edge <n> <m>'");
      n = parse_count(toks[2], line_no);
      parse_count(toks[3], line_no);
      have_header = true;
    } else if (toks[0] == "e") {
      if (!have_header)
        throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      if (toks.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": edge must read 'e <u> <v>'");
      const std::size_t u = parse_count(toks[1], line_no);
      const std::size_t v = parse_count(toks[2], line_no);
      if (u == 0 || v == 0 || u > n || v > n)
        throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range 1.." +
                         std::to_string(n));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" +
                       std::string(toks[0]) + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'p edge' header");
  return Graph(n, edges);
}

std::string emit_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  out.reserve(out.size() + g.edge_count() * 14);
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  return parse_dimacs(read_text_file(path));
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xF];
  }
  return hex;
}

std::string graph_hash(const Graph& g) { return sha256_hex(emit_dimacs(g)); }

std::string emit_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (v < labels.size()) out += " [label=\"" + labels[v] + "\"]";
    out += ";\n";
  }
  for (const Edge& e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace hedetniemi
