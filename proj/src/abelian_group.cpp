#include "homaff/abelian_group.hpp"

#include <algorithm>
#include <numeric>

namespace homaff {

namespace {

class CyclicProduct final : public AbelianGroup::Impl {
 public:
  explicit CyclicProduct(std::vector<std::uint32_t> moduli)
      : moduli_(std::move(moduli)), order_(1) {
    for (auto m : moduli_) order_ *= m;
  }

  std::size_t order() const override { return order_; }

  Element add(Element a, Element b) const override {
    Element out = 0;
    Element place = 1;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      const std::uint32_t m = moduli_[i];
      const std::uint32_t da = a % m, db = b % m;
      a /= m;
      b /= m;
      out += place * ((da + db) % m);
      place *= m;
    }
    return out;
  }

  Element neg(Element a) const override {
    Element out = 0;
    Element place = 1;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      const std::uint32_t m = moduli_[i];
      const std::uint32_t da = a % m;
      a /= m;
      out += place * ((m - da) % m);
      place *= m;
    }
    return out;
  }

  std::string label(Element a) const override {
    if (moduli_.size() == 1) return std::to_string(a);
    std::vector<std::uint32_t> digits(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      digits[i] = a % moduli_[i];
      a /= moduli_[i];
    }
    std::string s = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(digits[i]);
    }
    return s + ")";
  }

  const std::vector<std::uint32_t>* moduli() const override { return &moduli_; }

 private:
  std::vector<std::uint32_t> moduli_;
  std::size_t order_;
};

}  // namespace

AbelianGroup AbelianGroup::cyclic_product(std::vector<std::uint32_t> moduli) {
  if (moduli.empty())
    throw GroupError(GroupErrorKind::EmptyModuli, "empty list of moduli");
  std::uint64_t order = 1;
  for (auto m : moduli) {
    if (m == 0)
      throw GroupError(GroupErrorKind::InvalidModulus, "modulus must be >= 1");
    order *= m;
    if (order > (std::uint64_t{1} << 31))
      throw GroupError(GroupErrorKind::InvalidModulus, "group order too large");
  }
  return AbelianGroup(std::make_shared<CyclicProduct>(std::move(moduli)));
}

std::vector<std::uint32_t> AbelianGroup::moduli() const {
  const auto* m = impl_->moduli();
  return m ? *m : std::vector<std::uint32_t>{};
}

std::vector<std::uint32_t> AbelianGroup::coordinates(Element a) const {
  auto mods = moduli();
  std::vector<std::uint32_t> digits(mods.size());
  for (std::size_t i = mods.size(); i-- > 0;) {
    digits[i] = a % mods[i];
    a /= mods[i];
  }
  return digits;
}

Element AbelianGroup::from_coordinates(
    std::span<const std::uint32_t> coords) const {
  auto mods = moduli();
  Element out = 0;
  for (std::size_t i = 0; i < mods.size(); ++i)
    out = out * mods[i] + coords[i] % mods[i];
  return out;
}

bool AbelianGroup::same_presentation(const AbelianGroup& other) const {
  return is_cyclic_product() && other.is_cyclic_product() &&
         moduli() == other.moduli();
}

std::vector<Element> AbelianGroup::subgroup_generated(
    std::span<const Element> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Element> members{zero()};
  in[zero()] = true;
  for (std::size_t next = 0; next < members.size(); ++next) {
    for (Element g : gens) {
      Element s = add(members[next], g);
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> AbelianGroup::generating_set() const {
  std::vector<Element> gens;
  std::vector<bool> covered(order(), false);
  covered[zero()] = true;
  for (Element a = 0; a < order(); ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    for (Element x : subgroup_generated(gens)) covered[x] = true;
  }
  return gens;
}

std::optional<std::string> AbelianGroup::check_axioms() const {
  const Element n = static_cast<Element>(order());
  const Element z = zero();
  auto pair = [this](Element a, Element b) {
    return "(" + label(a) + ", " + label(b) + ")";
  };
  for (Element a = 0; a < n; ++a) {
    if (add(z, a) != a || add(a, z) != a)
      return "zero is not neutral at " + label(a);
    if (neg(a) >= n || add(a, neg(a)) != z)
      return "no inverse for " + label(a);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (add(a, b) != add(b, a)) return "not commutative at " + pair(a, b);
  // Associativity: since the group is finite and every element has an
  // inverse, the closed set of "associative" elements containing a
  // generating set is everything.
  auto gens = generating_set();
  if (subgroup_generated(gens).size() != n) return "generating set is incomplete";
  for (Element g : gens)
    for (Element x = 0; x < n; ++x) {
      const Element xg = add(x, g);
      for (Element y = 0; y < n; ++y)
        if (add(xg, y) != add(x, add(g, y)))
          return "not associative at (" + label(x) + ", " + label(g) + ", " +
                 label(y) + ")";
    }
  return std::nullopt;
}

std::optional<std::vector<Element>> homomorphism_violation(
    const AbelianGroup& from, const AbelianGroup& to,
    std::span<const Element> map) {
  const Element n = static_cast<Element>(from.order());
  for (Element a = 0; a < n; ++a)
    if (map[a] >= to.order()) return std::vector<Element>{a};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[from.add(a, b)] != to.add(map[a], map[b]))
        return std::vector<Element>{a, b};
  return std::nullopt;
}

GroupAutomorphism GroupAutomorphism::validate(const AbelianGroup& group,
                                              std::vector<Element> map) {
  const std::size_t n = group.order();
  if (map.size() != n) {
    throw GroupError(GroupErrorKind::SizeMismatch,
                     "map has " + std::to_string(map.size()) +
                         " entries, group has order " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (map[a] >= n || seen[map[a]]) {
      throw GroupError(GroupErrorKind::NotBijective,
                       "map is not bijective at element " + group.label(a),
                       {static_cast<Element>(a)});
    }
    seen[map[a]] = true;
  }
  if (auto w = homomorphism_violation(group, group, map)) {
    throw GroupError(GroupErrorKind::NotAdditive,
                     "map is not additive at (" + group.label((*w)[0]) + ", " +
                         group.label((*w)[1]) + ")",
                     *w);
  }
  return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::identity(const AbelianGroup& group) {
  std::vector<Element> map(group.order());
  std::iota(map.begin(), map.end(), Element{0});
  return GroupAutomorphism(std::move(map));
}

GroupAutomorphism GroupAutomorphism::multiplication(const AbelianGroup& group,
                                                    std::int64_t unit) {
  auto mods = group.moduli();
  if (mods.size() != 1) {
    throw GroupError(GroupErrorKind::SizeMismatch,
                     "multiplication automorphisms need a single cyclic factor");
  }
  const std::int64_t m = mods[0];
  const std::int64_t u = ((unit % m) + m) % m;
  std::vector<Element> map(m);
  for (std::int64_t x = 0; x < m; ++x)
    map[x] = static_cast<Element>((u * x) % m);
  return validate(group, std::move(map));
}

}  // namespace homaff
