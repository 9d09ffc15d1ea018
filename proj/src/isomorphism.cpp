#include <algorithm>
#include <map>
#include <numeric>

#include "homaff/quandle.hpp"

namespace homaff {

namespace {

// Isomorphism-invariant fingerprint of an element.
struct Signature {
  std::vector<std::size_t> cycle_type;  // of L_a
  std::size_t orbit_size = 0;
  std::size_t kernel_class_size = 0;  // #b with L_b = L_a
  std::size_t column_fixers = 0;      // #x with x*a = a

  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const Quandle& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) parent[find(b)] = find(q(a, b));
  std::vector<std::size_t> orbit_size(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++orbit_size[find(x)];

  std::vector<Signature> sig(n);
  for (Element a = 0; a < n; ++a) {
    sig[a].cycle_type = q.left_translation(a).cycle_type();
    sig[a].orbit_size = orbit_size[find(a)];
    for (Element b = 0; b < n; ++b) {
      if (std::equal(q.row(a).begin(), q.row(a).end(), q.row(b).begin()))
        ++sig[a].kernel_class_size;
      if (q(b, a) == a) ++sig[a].column_fixers;
    }
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Quandle& lhs, const Quandle& rhs)
      : lhs_(lhs),
        rhs_(rhs),
        n_(lhs.size()),
        lsig_(signatures(lhs)),
        rsig_(signatures(rhs)),
        fwd_(n_, kUnset),
        bwd_(n_, kUnset) {}

  bool signatures_compatible() const {
    auto a = lsig_;
    auto b = rsig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search() {
    Element next = kUnset;
    for (Element x = 0; x < n_; ++x)
      if (fwd_[x] == kUnset) {
        next = x;
        break;
      }
    if (next == kUnset) return true;
    for (Element y = 0; y < n_; ++y) {
      if (bwd_[y] != kUnset || lsig_[next] != rsig_[y]) continue;
      std::size_t mark = trail_.size();
      if (assign(next, y) && search()) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<Element> mapping() const { return fwd_; }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool bind(Element x, Element y, std::vector<Element>& work) {
    if (fwd_[x] != kUnset) return fwd_[x] == y;
    if (bwd_[y] != kUnset || lsig_[x] != rsig_[y]) return false;
    fwd_[x] = y;
    bwd_[y] = x;
    trail_.push_back(x);
    work.push_back(x);
    return true;
  }

  // Binds x -> y and closes the partial map under products.
  bool assign(Element x, Element y) {
    std::vector<Element> work;
    if (!bind(x, y, work)) return false;
    while (!work.empty()) {
      Element a = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        Element b = trail_[i];
        if (!bind(lhs_(a, b), rhs_(fwd_[a], fwd_[b]), work)) return false;
        if (!bind(lhs_(b, a), rhs_(fwd_[b], fwd_[a]), work)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Element x = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[x]] = kUnset;
      fwd_[x] = kUnset;
    }
  }

  const Quandle& lhs_;
  const Quandle& rhs_;
  std::size_t n_;
  std::vector<Signature> lsig_, rsig_;
  std::vector<Element> fwd_, bwd_;
  std::vector<Element> trail_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const Quandle& lhs,
                                                  const Quandle& rhs) {
  if (lhs.size() != rhs.size()) return std::nullopt;
  IsoSearch search(lhs, rhs);
  if (!search.signatures_compatible()) return std::nullopt;
  if (!search.search()) return std::nullopt;
  return search.mapping();
}

}  // namespace homaff
