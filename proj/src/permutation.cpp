#include "homaff/permutation.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace homaff {

Permutation::Permutation(std::vector<Element> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Element y = images_[i];
    if (y >= images_.size() || seen[y]) {
      throw PermError(PermErrorKind::NotBijective,
                      "image sequence is not a bijection at position " +
                          std::to_string(i),
                      {static_cast<Element>(i)});
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Element>(i);
  return Permutation(Trusted{}, std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Element>(i);
  return Permutation(Trusted{}, std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++count;
  return count;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation Permutation::conjugated_by(const Permutation& y) const {
  return y * *this * y.inverse();
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw PermError(PermErrorKind::DegreeMismatch,
                    "cannot compose permutations of degree " +
                        std::to_string(lhs.degree()) + " and " +
                        std::to_string(rhs.degree()));
  }
  std::vector<Element> out(rhs.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.images_[rhs.images_[i]];
  return Permutation(Permutation::Trusted{}, std::move(out));
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (Element x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup PermGroup::closure(std::size_t degree,
                             std::span<const Permutation> generators) {
  PermGroup group;
  group.degree_ = degree;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw PermError(PermErrorKind::DegreeMismatch,
                      "generator of degree " + std::to_string(g.degree()) +
                          " in a group of degree " + std::to_string(degree));
    }
  }
  group.generators_.assign(generators.begin(), generators.end());

  auto discover = [&group](Permutation p) {
    auto [it, inserted] = group.index_.emplace(p, group.elements_.size());
    if (inserted) group.elements_.push_back(std::move(p));
    return inserted;
  };
  discover(Permutation::identity(degree));
  for (std::size_t next = 0; next < group.elements_.size(); ++next) {
    for (const auto& g : group.generators_) {
      discover(g * group.elements_[next]);
    }
  }
  return group;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_semiregular(const PermGroup& group) {
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    if (g.fixed_points() != 0) return false;
  }
  return true;
}

}  // namespace homaff
