#include "homaff/displacement.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace homaff {

namespace {

std::vector<Permutation> translations(const Quandle& q) {
  std::vector<Permutation> out;
  out.reserve(q.size());
  for (Element a = 0; a < q.size(); ++a) out.push_back(q.left_translation(a));
  return out;
}

std::vector<Permutation> displacement_generators(const Quandle& q, Element e) {
  auto ls = translations(q);
  Permutation le_inv = ls[e].inverse();
  std::vector<Permutation> gens;
  gens.reserve(q.size());
  for (const auto& la : ls) gens.push_back(la * le_inv);
  return gens;
}

Partition orbits_of(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (Element x = 0; x < n; ++x) parent[find(x)] = find(g(x));
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = find(x);
  return Partition::from_labels(labels);
}

}  // namespace

PermGroup multiplication_group(const Quandle& q) {
  auto gens = translations(q);
  return PermGroup::closure(q.size(), gens);
}

PermGroup displacement_group(const Quandle& q) {
  auto gens = displacement_generators(q, 0);
  return PermGroup::closure(q.size(), gens);
}

std::vector<Permutation> displacement_set(const Quandle& q, Element e) {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (auto& p : displacement_generators(q, e))
    if (seen.insert(p).second) out.push_back(std::move(p));
  return out;
}

Partition orbits(const Quandle& q) {
  Partition dis = orbits_of(q.size(), displacement_generators(q, 0));
  Partition lmlt = orbits_of(q.size(), translations(q));
  if (!(dis == lmlt))
    throw std::logic_error("Dis(Q) and LMlt(Q) orbits differ");
  return dis;
}

Partition cayley_kernel(const Quandle& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> labels(n);
  for (Element a = 0; a < n; ++a) {
    labels[a] = a;
    for (Element b = 0; b < a; ++b) {
      if (std::equal(q.row(a).begin(), q.row(a).end(), q.row(b).begin())) {
        labels[a] = labels[b];
        break;
      }
    }
  }
  return Partition::from_labels(labels);
}

bool is_tiny(const Quandle& q, Element e) {
  auto lambda = displacement_set(q, e);
  std::unordered_set<Permutation, PermutationHash> members(lambda.begin(),
                                                           lambda.end());
  for (const auto& a : lambda) {
    if (!members.contains(a.inverse())) return false;
    for (const auto& b : lambda)
      if (!members.contains(a * b)) return false;
  }
  return true;
}

bool is_medial(const Quandle& q) {
  const std::size_t n = q.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v)
          if (q(q(x, y), q(u, v)) != q(q(x, u), q(y, v))) return false;
  return true;
}

}  // namespace homaff
