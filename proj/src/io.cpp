#include "homaff/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace homaff::io {

namespace {

ParseError syntax(const std::string& what, std::size_t line = 0) {
  return ParseError(ParseErrorKind::Syntax,
                    line ? "line " + std::to_string(line) + ": " + what : what);
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw syntax("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

Element to_element(std::string_view tok, std::size_t line) {
  std::int64_t v = to_int(tok, line);
  if (v < 0 || v > std::int64_t{0xffffffff})
    throw syntax("element index out of range: " + std::string(tok), line);
  return static_cast<Element>(v);
}

std::vector<std::uint32_t> parse_moduli(std::string_view text, std::size_t line) {
  std::vector<std::uint32_t> moduli;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string_view::npos) end = text.size();
    std::int64_t m = to_int(text.substr(start, end - start), line);
    if (m < 1) throw syntax("moduli must be positive", line);
    moduli.push_back(static_cast<std::uint32_t>(m));
    start = end + 1;
  }
  return moduli;
}

std::string moduli_text(const std::vector<std::uint32_t>& moduli) {
  std::string s;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(moduli[i]);
  }
  return s;
}

}  // namespace

Quandle read_quandle(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw syntax("empty quandle file");
  if (lines[0].tokens.size() != 1) throw syntax("first line must be n", lines[0].number);
  const std::int64_t n = to_int(lines[0].tokens[0], lines[0].number);
  if (n < 1) throw syntax("n must be positive", lines[0].number);
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw syntax("expected " + std::to_string(n) + " table rows, found " +
                 std::to_string(lines.size() - 1));
  std::vector<std::vector<Element>> rows;
  for (std::size_t a = 1; a < lines.size(); ++a) {
    const auto& line = lines[a];
    if (line.tokens.size() != static_cast<std::size_t>(n))
      throw syntax("expected " + std::to_string(n) + " entries", line.number);
    std::vector<Element> row;
    for (const auto& tok : line.tokens) row.push_back(to_element(tok, line.number));
    rows.push_back(std::move(row));
  }
  return Quandle::from_table(rows);
}

void write_quandle(std::ostream& out, const Quandle& q) {
  out << q.size() << '\n';
  for (Element a = 0; a < q.size(); ++a) {
    for (Element b = 0; b < q.size(); ++b) out << (b ? " " : "") << q(a, b);
    out << '\n';
  }
}

Partition read_partition(std::istream& in, std::size_t n) {
  std::vector<std::vector<Element>> blocks;
  for (const auto& line : content_lines(in)) {
    std::vector<Element> block;
    for (const auto& tok : line.tokens) block.push_back(to_element(tok, line.number));
    blocks.push_back(std::move(block));
  }
  return Partition::from_blocks(n, std::move(blocks));
}

AffineMesh read_mesh(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "mesh")
    throw syntax("mesh file must start with 'mesh <k>'");
  const std::int64_t k = to_int(lines[0].tokens[1], lines[0].number);
  if (k < 1) throw syntax("mesh needs at least one index", lines[0].number);
  const auto K = static_cast<std::size_t>(k);

  std::vector<std::optional<AbelianGroup>> groups(K);
  MeshData data;
  data.phi.assign(K, std::vector<std::vector<Element>>(K));
  data.c.assign(K, std::vector<Element>(K, 0));
  auto index = [K](const std::string& tok, std::size_t line) {
    const std::int64_t i = to_int(tok, line);
    if (i < 0 || i >= static_cast<std::int64_t>(K))
      throw syntax("index " + tok + " outside 0.." + std::to_string(K - 1), line);
    return static_cast<std::size_t>(i);
  };
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& [number, tok] = lines[l];
    if (tok[0] == "group") {
      if (tok.size() != 3) throw syntax("usage: group <i> <m1>x<m2>...", number);
      const std::size_t i = index(tok[1], number);
      if (groups[i]) throw syntax("group " + tok[1] + " given twice", number);
      groups[i] = AbelianGroup::cyclic_product(parse_moduli(tok[2], number));
    } else if (tok[0] == "phi") {
      if (tok.size() < 3) throw syntax("usage: phi <i> <j> <images...>", number);
      auto& map = data.phi[index(tok[1], number)][index(tok[2], number)];
      map.clear();
      for (std::size_t t = 3; t < tok.size(); ++t)
        map.push_back(to_element(tok[t], number));
      if (map.empty()) throw syntax("phi needs an image list", number);
    } else if (tok[0] == "c") {
      if (tok.size() != 4) throw syntax("usage: c <i> <j> <element>", number);
      data.c[index(tok[1], number)][index(tok[2], number)] =
          to_element(tok[3], number);
    } else {
      throw syntax("unknown directive '" + tok[0] + "'", number);
    }
  }
  for (std::size_t i = 0; i < K; ++i) {
    if (!groups[i]) throw syntax("missing group " + std::to_string(i));
    data.groups.push_back(*groups[i]);
  }
  return AffineMesh::validate(std::move(data));
}

void write_mesh(std::ostream& out, const AffineMesh& mesh) {
  const std::size_t k = mesh.size();
  out << "mesh " << k << '\n';
  for (std::size_t i = 0; i < k; ++i)
    out << "group " << i << ' ' << moduli_text(mesh.group(i).moduli()) << '\n';
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& map = mesh.phi_map(i, j);
      const Element z = mesh.group(j).zero();
      if (std::all_of(map.begin(), map.end(), [z](Element x) { return x == z; }))
        continue;
      out << "phi " << i << ' ' << j;
      for (Element x : map) out << ' ' << x;
      out << '\n';
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (mesh.c(i, j) != mesh.group(j).zero())
        out << "c " << i << ' ' << j << ' ' << mesh.c(i, j) << '\n';
}

AffineQuandle parse_affine_spec(std::string_view spec) {
  if (spec.starts_with("affine ")) spec.remove_prefix(7);
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw syntax("affine spec must look like <m1>x<m2>...:<automorphism>");
  auto group = AbelianGroup::cyclic_product(parse_moduli(spec.substr(0, colon), 0));
  std::string_view rest = spec.substr(colon + 1);
  if (rest.starts_with("mul:")) {
    if (group.moduli().size() != 1)
      throw syntax("mul:<u> needs a single cyclic factor");
    auto f = GroupAutomorphism::multiplication(group, to_int(rest.substr(4), 0));
    return make_affine(group, f);
  }
  std::vector<Element> map;
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t end = rest.find(',', start);
    if (end == std::string_view::npos) end = rest.size();
    map.push_back(to_element(rest.substr(start, end - start), 0));
    start = end + 1;
  }
  return make_affine(group, GroupAutomorphism::validate(group, std::move(map)));
}

void write_cover_sidecar(std::ostream& out, const CoverResult& r) {
  const auto& t = r.transversal;
  out << "# cover sidecar\n";
  out << "# A=" << r.group.order() << " dis=" << r.dis_order << " T=" << t.size()
      << " kappa=" << t.kappa << '\n';
  for (std::size_t k = 0; k < t.size(); ++k)
    out << "# T " << k << ' ' << t.entries[k] << '\n';
  out << "# columns: u alpha_index t_index f(u) psi(u)\n";
  for (Element u = 0; u < r.group.order(); ++u)
    out << u << ' ' << r.alpha_index(u) << ' ' << r.t_index(u) << ' ' << r.f(u)
        << ' ' << r.psi[u] << '\n';
}

Quandle read_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw syntax("cannot open " + path);
  return read_quandle(in);
}

AffineMesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw syntax("cannot open " + path);
  return read_mesh(in);
}

}  // namespace homaff::io
