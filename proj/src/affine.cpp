#include "homaff/affine.hpp"

#include <algorithm>
#include <functional>

#include "homaff/displacement.hpp"

namespace homaff {

AffineQuandle make_affine(const AbelianGroup& group,
                          const GroupAutomorphism& f) {
  const std::size_t n = group.order();
  std::vector<Element> one_minus_f(n);
  for (Element a = 0; a < n; ++a) one_minus_f[a] = group.sub(a, f(a));
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      flat[a * n + b] = group.add(one_minus_f[a], f(b));
  return AffineQuandle{group, f, Quandle::from_trusted_table(n, std::move(flat))};
}

std::vector<Element> image_of_one_minus_f(const AbelianGroup& group,
                                          const GroupAutomorphism& f) {
  std::vector<Element> image;
  for (Element a = 0; a < group.order(); ++a) image.push_back(group.sub(a, f(a)));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

std::vector<Element> subquandle_closure(const Quandle& q,
                                        std::span<const Element> seed) {
  std::vector<bool> in(q.size(), false);
  std::vector<Element> members;
  for (Element x : seed)
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  auto add = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  // Each new element is combined with everything found so far, both ways.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Element a = members[i], b = members[j];
      add(q(a, b));
      add(q(b, a));
      add(q.left_divide(a, b));
      add(q.left_divide(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t k) {
  // Partitions of k into nonincreasing parts.
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  std::function<void(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t rest, std::uint32_t max_part) {
        if (rest == 0) {
          out.push_back(current);
          return;
        }
        for (std::uint32_t p = std::min(rest, max_part); p >= 1; --p) {
          current.push_back(p);
          rec(rest - p, p);
          current.pop_back();
        }
      };
  rec(k, k);
  return out;
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(std::size_t n) {
  if (n == 1) return {AbelianGroup::cyclic_product({1})};
  // For each prime p^k || n, the choices are the partitions of k.
  std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
  std::size_t rest = n;
  for (std::uint32_t p = 2; rest > 1; ++p) {
    std::uint32_t k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k == 0) continue;
    std::vector<std::vector<std::uint32_t>> options;
    for (const auto& part : partitions_of(k)) {
      std::vector<std::uint32_t> moduli;
      for (auto e : part) {
        std::uint32_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= p;
        moduli.push_back(q);
      }
      options.push_back(moduli);
    }
    per_prime.push_back(std::move(options));
  }
  std::vector<AbelianGroup> groups;
  std::vector<std::uint32_t> moduli;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_prime.size()) {
      groups.push_back(AbelianGroup::cyclic_product(moduli));
      return;
    }
    for (const auto& opt : per_prime[i]) {
      moduli.insert(moduli.end(), opt.begin(), opt.end());
      rec(i + 1);
      moduli.resize(moduli.size() - opt.size());
    }
  };
  rec(0);
  return groups;
}

std::vector<GroupAutomorphism> all_automorphisms(const AbelianGroup& group) {
  const auto mods = group.moduli();
  const std::size_t n = group.order();
  const std::size_t r = mods.size();
  std::vector<Element> basis(r);
  for (std::size_t t = 0; t < r; ++t) {
    std::vector<std::uint32_t> coords(r, 0);
    coords[t] = 1;
    basis[t] = group.from_coordinates(coords);
  }
  auto multiple = [&group](Element a, std::uint32_t k) {
    Element s = group.zero();
    for (std::uint32_t i = 0; i < k; ++i) s = group.add(s, a);
    return s;
  };
  // Admissible images of each basis element: m_t * image = 0.
  std::vector<std::vector<Element>> choices(r);
  for (std::size_t t = 0; t < r; ++t)
    for (Element a = 0; a < n; ++a)
      if (multiple(a, mods[t]) == group.zero()) choices[t].push_back(a);

  std::vector<GroupAutomorphism> out;
  std::vector<Element> images(r);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == r) {
      std::vector<Element> map(n);
      std::vector<bool> seen(n, false);
      for (Element a = 0; a < n; ++a) {
        auto coords = group.coordinates(a);
        Element s = group.zero();
        for (std::size_t i = 0; i < r; ++i)
          s = group.add(s, multiple(images[i], coords[i]));
        if (seen[s]) return;
        seen[s] = true;
        map[a] = s;
      }
      out.push_back(GroupAutomorphism::validate(group, std::move(map)));
      return;
    }
    for (Element c : choices[t]) {
      images[t] = c;
      rec(t + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<AffineQuandle> find_affine_representation(const Quandle& q) {
  // Cheap necessary conditions first: affine quandles are medial, their
  // displacement group is abelian, tiny and semiregular, and all orbits
  // (cosets of Im(1-f)) have the same size.
  auto dis = displacement_group(q);
  if (!is_abelian(dis) || !is_semiregular(dis) || !is_tiny(q)) return std::nullopt;
  auto sizes = orbits(q).block_sizes();
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) !=
      sizes.end())
    return std::nullopt;
  for (const auto& group : abelian_groups_of_order(q.size())) {
    for (const auto& f : all_automorphisms(group)) {
      if (image_of_one_minus_f(group, f).size() != sizes.front()) continue;
      auto aff = make_affine(group, f);
      if (is_isomorphic(aff.quandle, q)) return aff;
    }
  }
  return std::nullopt;
}

}  // namespace homaff
