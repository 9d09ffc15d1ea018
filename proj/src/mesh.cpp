#include "homaff/mesh.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace homaff {

namespace {

std::string idx(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

std::vector<Element> witness(std::initializer_list<std::size_t> xs) {
  std::vector<Element> w;
  for (auto x : xs) w.push_back(static_cast<Element>(x));
  return w;
}

}  // namespace

AffineMesh AffineMesh::validate(MeshData data) {
  const std::size_t k = data.groups.size();
  auto malformed = [](const std::string& what) {
    return MeshError(MeshErrorKind::Malformed, what);
  };
  if (k == 0) throw malformed("mesh needs a nonempty index set");
  if (data.phi.empty()) data.phi.assign(k, std::vector<std::vector<Element>>(k));
  if (data.c.empty()) data.c.assign(k, std::vector<Element>(k, 0));
  if (data.phi.size() != k || data.c.size() != k)
    throw malformed("phi and c must be " + std::to_string(k) + " x " +
                    std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (data.phi[i].size() != k || data.c[i].size() != k)
      throw malformed("row " + std::to_string(i) + " of phi or c has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
      auto& map = data.phi[i][j];
      if (map.empty()) map.assign(data.groups[i].order(), data.groups[j].zero());
      if (map.size() != data.groups[i].order())
        throw malformed("phi" + idx({i, j}) + " must list " +
                        std::to_string(data.groups[i].order()) + " images");
      for (Element x : map)
        if (x >= data.groups[j].order())
          throw malformed("phi" + idx({i, j}) + " has an image outside A_" +
                          std::to_string(j));
      if (data.c[i][j] >= data.groups[j].order())
        throw malformed("c" + idx({i, j}) + " is not an element of A_" +
                        std::to_string(j));
    }
  }

  const auto& A = data.groups;
  const auto& phi = data.phi;
  const auto& c = data.c;

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (auto w = homomorphism_violation(A[i], A[j], phi[i][j]))
        throw MeshError(MeshErrorKind::NotAHomomorphism,
                        "phi" + idx({i, j}) + " is not a homomorphism",
                        witness({i, j}));

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> seen(A[i].order(), false);
    for (Element a = 0; a < A[i].order(); ++a) {
      Element y = A[i].sub(a, phi[i][i][a]);
      if (seen[y])
        throw MeshError(MeshErrorKind::M1Violation,
                        "(M1) 1 - phi" + idx({i, i}) + " is not bijective",
                        witness({i}));
      seen[y] = true;
    }
  }

  for (std::size_t i = 0; i < k; ++i)
    if (c[i][i] != A[i].zero())
      throw MeshError(MeshErrorKind::M2Violation,
                      "(M2) c" + idx({i, i}) + " is not zero", witness({i}));

  auto two_step_agrees = [&](std::size_t i, std::size_t j, std::size_t jp,
                             std::size_t kk) {
    for (Element a = 0; a < A[i].order(); ++a)
      if (phi[j][kk][phi[i][j][a]] != phi[jp][kk][phi[i][jp][a]]) return false;
    return true;
  };
  // All two-step paths i -> j -> kk must agree; only when some (i, kk) fails
  // do we pay for the lexicographic witness scan.
  bool m3_ok = true;
  for (std::size_t i = 0; i < k && m3_ok; ++i)
    for (std::size_t kk = 0; kk < k && m3_ok; ++kk)
      for (std::size_t j = 1; j < k && m3_ok; ++j)
        m3_ok = two_step_agrees(i, 0, j, kk);
  if (!m3_ok) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t jp = 0; jp < k; ++jp)
          for (std::size_t kk = 0; kk < k; ++kk)
            if (!two_step_agrees(i, j, jp, kk))
              throw MeshError(MeshErrorKind::M3Violation,
                              "(M3) fails at (i,j,j',k) = " + idx({i, j, jp, kk}),
                              witness({i, j, jp, kk}));
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t kk = 0; kk < k; ++kk)
        if (phi[j][kk][c[i][j]] != phi[kk][kk][A[kk].sub(c[i][kk], c[j][kk])])
          throw MeshError(MeshErrorKind::M4Violation,
                          "(M4) fails at (i,j,k) = " + idx({i, j, kk}),
                          witness({i, j, kk}));

  AffineMesh mesh;
  mesh.groups_ = std::move(data.groups);
  mesh.phi_ = std::move(data.phi);
  mesh.c_ = std::move(data.c);
  mesh.offsets_.push_back(0);
  for (const auto& g : mesh.groups_)
    mesh.offsets_.push_back(mesh.offsets_.back() + g.order());
  return mesh;
}

std::size_t AffineMesh::fiber_of(Element x) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(),
                             static_cast<std::size_t>(x));
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

bool is_indecomposable(const AffineMesh& mesh) {
  const std::size_t k = mesh.size();
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(mesh.c(i, j));
      for (Element a = 0; a < mesh.group(i).order(); ++a)
        gens.push_back(mesh.phi(i, j, a));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (mesh.group(j).subgroup_generated(gens).size() != mesh.group(j).order())
      return false;
  }
  return true;
}

Quandle mesh_sum(const AffineMesh& mesh) {
  const std::size_t k = mesh.size();
  const std::size_t n = mesh.total_size();
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& Ai = mesh.group(i);
    for (Element a = 0; a < Ai.order(); ++a) {
      const std::size_t row = (mesh.offset(i) + a) * n;
      for (std::size_t j = 0; j < k; ++j) {
        const auto& Aj = mesh.group(j);
        const Element shift = Aj.add(mesh.c(i, j), mesh.phi(i, j, a));
        for (Element b = 0; b < Aj.order(); ++b) {
          const Element fb = Aj.sub(b, mesh.phi(j, j, b));
          flat[row + mesh.offset(j) + b] =
              static_cast<Element>(mesh.offset(j) + Aj.add(shift, fb));
        }
      }
    }
  }
  return Quandle::from_trusted_table(n, std::move(flat));
}

bool coset_criterion(const AffineMesh& mesh) {
  const std::size_t k = mesh.size();
  using Tuple = std::vector<Element>;
  std::vector<Tuple> rows;
  for (std::size_t i = 0; i < k; ++i)
    for (Element a = 0; a < mesh.group(i).order(); ++a) {
      Tuple t(k);
      for (std::size_t j = 0; j < k; ++j)
        t[j] = mesh.group(j).add(mesh.phi(i, j, a), mesh.c(i, j));
      rows.push_back(std::move(t));
    }
  const Tuple h = rows.front();
  std::set<Tuple> shifted;
  for (const auto& t : rows) {
    Tuple s(k);
    for (std::size_t j = 0; j < k; ++j) s[j] = mesh.group(j).sub(t[j], h[j]);
    shifted.insert(std::move(s));
  }
  // A finite subset containing zero is a subgroup iff it is closed under +.
  for (const auto& x : shifted)
    for (const auto& y : shifted) {
      Tuple s(k);
      for (std::size_t j = 0; j < k; ++j) s[j] = mesh.group(j).add(x[j], y[j]);
      if (!shifted.contains(s)) return false;
    }
  return true;
}

bool semiregular_extension_form(const AffineMesh& mesh) {
  const std::size_t k = mesh.size();
  const auto& A = mesh.group(0);
  for (std::size_t i = 1; i < k; ++i)
    if (!mesh.group(i).same_presentation(A)) return false;
  const auto& phi = mesh.phi_map(0, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (mesh.phi_map(i, j) != phi) return false;
  // psi = 1 - phi is an automorphism by (M1); d_i = c_i0 since d_0 = 0.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (mesh.c(i, j) != A.sub(mesh.c(i, 0), mesh.c(j, 0))) return false;
  return true;
}

AffineMesh generate_max_mesh(std::size_t n, std::size_t k) {
  if (k >= 31 || (std::size_t{1} << k) >= n)
    throw MeshError(MeshErrorKind::InvalidParams,
                    "need 2^k < n, got n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
  const std::size_t rows = std::size_t{1} << k;
  using Vec = std::vector<Element>;
  std::vector<Vec> d;
  std::set<Vec> used;
  for (std::size_t i = 0; i < k; ++i) {
    Vec v(k, 1);
    v[i] = 0;
    d.push_back(v);
    used.insert(v);
  }
  std::vector<Vec> rest;
  for (std::size_t bits = 0; bits < rows; ++bits) {
    Vec v(k);
    for (std::size_t t = 0; t < k; ++t) v[t] = (bits >> (k - 1 - t)) & 1u;
    if (!used.contains(v)) rest.push_back(v);
  }
  // Lexicographic order puts the zero vector first; move it to the end.
  if (!rest.empty() && std::all_of(rest.front().begin(), rest.front().end(),
                                   [](Element x) { return x == 0; }))
    std::rotate(rest.begin(), rest.begin() + 1, rest.end());
  d.insert(d.end(), rest.begin(), rest.end());

  MeshData data;
  for (std::size_t i = 0; i < n; ++i)
    data.groups.push_back(AbelianGroup::cyclic_product({i < k ? 2u : 1u}));
  data.c.assign(n, std::vector<Element>(n, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j) data.c[i][j] = d[i][j];
  return AffineMesh::validate(std::move(data));
}

}  // namespace homaff
