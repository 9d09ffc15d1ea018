#include "support/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homaff/displacement.hpp"

namespace homaff::testing {

Quandle projection(std::size_t n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<Element>(b);
  return Quandle::from_table(rows);
}

Quandle affine_cyclic(std::uint32_t m, std::int64_t u) {
  const std::int64_t mm = m;
  const std::int64_t uu = ((u % mm) + mm) % mm;
  std::vector<std::vector<Element>> rows(m, std::vector<Element>(m));
  for (std::int64_t a = 0; a < mm; ++a)
    for (std::int64_t b = 0; b < mm; ++b)
      rows[a][b] = static_cast<Element>((((1 - uu) * a + uu * b) % mm + mm) % mm);
  return Quandle::from_table(rows);
}

Quandle s3_transpositions() {
  // (12)=0, (13)=1, (23)=2; x*y = x y x^-1 swaps the other two.
  return Quandle::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}

AffineMesh zero_phi_mesh(const std::vector<std::uint32_t>& moduli,
                         const std::vector<std::vector<Element>>& c) {
  MeshData data;
  for (auto m : moduli) data.groups.push_back(AbelianGroup::cyclic_product({m}));
  data.c = c;
  return AffineMesh::validate(std::move(data));
}

Quandle s4_transpositions() {
  std::vector<Permutation> t;
  for (Element i = 0; i < 4; ++i)
    for (Element j = i + 1; j < 4; ++j) {
      std::vector<Element> img{0, 1, 2, 3};
      std::swap(img[i], img[j]);
      t.emplace_back(img);
    }
  std::vector<std::vector<Element>> rows(6, std::vector<Element>(6));
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      rows[a][b] = static_cast<Element>(
          std::find(t.begin(), t.end(), t[b].conjugated_by(t[a])) - t.begin());
  return Quandle::from_table(rows);
}

AffineMesh example_mesh(int which) {
  switch (which) {
    case 1:
      return zero_phi_mesh({2, 2, 2}, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
    case 2:
      return zero_phi_mesh({3, 3}, {{0, 1}, {1, 0}});
    default:
      return zero_phi_mesh({2, 1}, {{0, 0}, {1, 0}});
  }
}

namespace {

const std::vector<std::vector<std::uint32_t>>& small_group_moduli() {
  static const std::vector<std::vector<std::uint32_t>> list = {
      {1}, {2}, {3}, {4}, {2, 2}};
  return list;
}

using Map = std::vector<Element>;

std::vector<Map> all_homomorphisms(const AbelianGroup& from,
                                   const AbelianGroup& to) {
  // Images of the standard generators determine the map.
  const auto mods = from.moduli();
  const std::size_t r = mods.size();
  std::vector<Element> basis(r);
  for (std::size_t t = 0; t < r; ++t) {
    std::vector<std::uint32_t> coords(r, 0);
    coords[t] = 1;
    basis[t] = from.from_coordinates(coords);
  }
  auto multiple = [](const AbelianGroup& g, Element a, std::uint32_t k) {
    Element s = g.zero();
    for (std::uint32_t i = 0; i < k; ++i) s = g.add(s, a);
    return s;
  };
  std::vector<std::vector<Element>> choices(r);
  for (std::size_t t = 0; t < r; ++t)
    for (Element b = 0; b < to.order(); ++b)
      if (multiple(to, b, mods[t]) == to.zero()) choices[t].push_back(b);
  std::vector<Map> out;
  std::vector<Element> img(r);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == r) {
      Map map(from.order());
      for (Element a = 0; a < from.order(); ++a) {
        auto coords = from.coordinates(a);
        Element s = to.zero();
        for (std::size_t i = 0; i < r; ++i) s = to.add(s, multiple(to, img[i], coords[i]));
        map[a] = s;
      }
      out.push_back(std::move(map));
      return;
    }
    for (Element b : choices[t]) {
      img[t] = b;
      rec(t + 1);
    }
  };
  rec(0);
  return out;
}

Map compose(const Map& outer, const Map& inner) {
  Map out(inner.size());
  for (std::size_t a = 0; a < inner.size(); ++a) out[a] = outer[inner[a]];
  return out;
}

void enumerate_for_groups(const std::vector<AbelianGroup>& groups,
                          const std::function<void(const AffineMesh&)>& visit) {
  const std::size_t k = groups.size();
  std::vector<std::vector<std::vector<Map>>> homs(k, std::vector<std::vector<Map>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) homs[i][j] = all_homomorphisms(groups[i], groups[j]);

  std::vector<std::vector<const Map*>> phi(k, std::vector<const Map*>(k, nullptr));
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i) cells.emplace_back(i, i);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) cells.emplace_back(i, j);

  // Two-step agreement phi_jk phi_ij = phi_j'k phi_ij' over assigned maps.
  auto m3_ok = [&]() {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t kk = 0; kk < k; ++kk) {
        const Map* ref = nullptr;
        Map ref_val;
        for (std::size_t j = 0; j < k; ++j) {
          if (!phi[i][j] || !phi[j][kk]) continue;
          Map v = compose(*phi[j][kk], *phi[i][j]);
          if (!ref) {
            ref_val = std::move(v);
            ref = &ref_val;
          } else if (v != ref_val) {
            return false;
          }
        }
      }
    return true;
  };

  std::vector<std::vector<Element>> c(k, std::vector<Element>(k, 0));
  std::vector<std::vector<bool>> c_set(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) c_set[i][i] = true;

  auto m4_ok = [&]() {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t kk = 0; kk < k; ++kk) {
          if (!c_set[i][j] || !c_set[i][kk] || !c_set[j][kk]) continue;
          const auto& A = groups[kk];
          if ((*phi[j][kk])[c[i][j]] != (*phi[kk][kk])[A.sub(c[i][kk], c[j][kk])])
            return false;
        }
    return true;
  };

  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) off.emplace_back(i, j);

  std::function<void(std::size_t)> assign_c = [&](std::size_t idx) {
    if (idx == off.size()) {
      MeshData data;
      data.groups = groups;
      data.phi.assign(k, std::vector<Map>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) data.phi[i][j] = *phi[i][j];
      data.c = c;
      visit(AffineMesh::validate(std::move(data)));
      return;
    }
    auto [i, j] = off[idx];
    c_set[i][j] = true;
    for (Element x = 0; x < groups[j].order(); ++x) {
      c[i][j] = x;
      if (m4_ok()) assign_c(idx + 1);
    }
    c[i][j] = 0;
    c_set[i][j] = false;
  };

  std::function<void(std::size_t)> assign_phi = [&](std::size_t idx) {
    if (idx == cells.size()) {
      assign_c(0);
      return;
    }
    auto [i, j] = cells[idx];
    for (const Map& m : homs[i][j]) {
      if (i == j) {
        // (M1): 1 - phi_ii bijective.
        std::vector<bool> seen(m.size(), false);
        bool ok = true;
        for (Element a = 0; a < m.size() && ok; ++a) {
          Element y = groups[i].sub(a, m[a]);
          ok = !seen[y];
          seen[y] = true;
        }
        if (!ok) continue;
      }
      phi[i][j] = &m;
      if (m3_ok()) assign_phi(idx + 1);
    }
    phi[i][j] = nullptr;
  };
  assign_phi(0);
}

}  // namespace

void for_each_mesh(std::size_t max_indices,
                   const std::function<void(const AffineMesh&)>& visit) {
  const auto& list = small_group_moduli();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth,
                                                          std::size_t from) {
    if (depth > 0) {
      std::vector<AbelianGroup> groups;
      for (auto p : pick) groups.push_back(AbelianGroup::cyclic_product(list[p]));
      enumerate_for_groups(groups, visit);
    }
    if (depth == max_indices) return;
    for (std::size_t p = from; p < list.size(); ++p) {
      pick.push_back(p);
      rec(depth + 1, p);
      pick.pop_back();
    }
  };
  rec(0, 0);
}

void for_each_corpus_entry(std::size_t max_indices,
                           const std::function<void(const CorpusEntry&)>& visit) {
  std::size_t count = 0;
  for_each_mesh(max_indices, [&](const AffineMesh& mesh) {
    visit({"mesh#" + std::to_string(count++), mesh_sum(mesh), mesh});
  });
  for (std::uint32_t m = 1; m <= 12; ++m)
    for (std::uint32_t u = 0; u < m; ++u)
      if (std::gcd(u, m) == 1 || m == 1)
        visit({"Aff(Z" + std::to_string(m) + "," + std::to_string(u) + ")",
               affine_cyclic(m, u), std::nullopt});
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

// Sorts in place.
std::uint64_t hash_sorted(std::vector<std::uint64_t>& xs) {
  std::sort(xs.begin(), xs.end());
  std::uint64_t h = xs.size();
  for (auto x : xs) h = mix(h, x);
  return h;
}

}  // namespace

std::vector<std::size_t> IsoDeduper::key(const Quandle& q) {
  // Colour refinement. The initial colour of a combines the cycle type of
  // L_a, its orbit and Cayley class sizes, and the cycle types of L_a L_b^-1
  // and L_a L_b over all b; each round then recolours a by the multiset of
  // (colour b, colour a*b, colour b*a).
  const std::size_t n = q.size();
  // Orbits by union-find over b ~ a*b.
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) parent[find(q(a, b))] = find(b);
  std::vector<std::uint64_t> orbit_size(n, 0);
  for (Element x = 0; x < n; ++x) ++orbit_size[find(x)];
  std::vector<Element> inv(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) inv[a * n + q(a, b)] = b;

  std::vector<Element> perm(n);
  std::vector<char> seen(n);
  std::vector<std::uint64_t> lengths;
  auto cycle_hash = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    lengths.clear();
    for (Element x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::uint64_t len = 0;
      for (Element y = x; !seen[y]; y = perm[y]) {
        seen[y] = 1;
        ++len;
      }
      lengths.push_back(len);
    }
    return hash_sorted(lengths);
  };

  std::vector<std::uint64_t> colour(n), pairs(n);
  for (Element a = 0; a < n; ++a) {
    for (Element x = 0; x < n; ++x) perm[x] = q(a, x);
    std::uint64_t h = cycle_hash();
    h = mix(h, orbit_size[find(a)]);
    std::uint64_t same_row = 0;
    for (Element b = 0; b < n; ++b) {
      bool same = true;
      for (Element x = 0; x < n && same; ++x) same = q(a, x) == q(b, x);
      same_row += same;
      for (Element x = 0; x < n; ++x) perm[x] = q(a, inv[b * n + x]);
      std::uint64_t p = cycle_hash();
      for (Element x = 0; x < n; ++x) perm[x] = q(a, q(b, x));
      pairs[b] = mix(p, cycle_hash());
    }
    colour[a] = mix(mix(h, same_row), hash_sorted(pairs));
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b)
        pairs[b] = mix(mix(mix(1, colour[b]), colour[q(a, b)]), colour[q(b, a)]);
      next[a] = mix(colour[a], hash_sorted(pairs));
    }
    colour = std::move(next);
  }
  std::sort(colour.begin(), colour.end());
  std::vector<std::size_t> out{n};
  out.insert(out.end(), colour.begin(), colour.end());
  return out;
}

bool IsoDeduper::insert(const CorpusEntry& entry) {
  auto& bucket = buckets_[key(entry.quandle)];
  for (auto idx : bucket)
    if (is_isomorphic(entries_[idx].quandle, entry.quandle)) return false;
  bucket.push_back(entries_.size());
  entries_.push_back(entry);
  return true;
}

const std::vector<CorpusEntry>& small_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for_each_corpus_entry(2, [&](const CorpusEntry& e) { out.push_back(e); });
    return out;
  }();
  return entries;
}

const std::vector<CorpusEntry>& small_corpus_up_to_iso() {
  static const std::vector<CorpusEntry> entries = [] {
    IsoDeduper d;
    for (const auto& e : small_corpus()) d.insert(e);
    return d.entries();
  }();
  return entries;
}

}  // namespace homaff::testing
