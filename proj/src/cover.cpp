#include "homaff/cover.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "homaff/displacement.hpp"

namespace homaff {

bool is_homim_of_affine(const Quandle& q) {
  const auto d = displacement_set(q, 0);
  const std::unordered_set<Permutation, PermutationHash> members(d.begin(),
                                                                 d.end());
  for (const auto& alpha : d)
    for (const auto& beta : d) {
      const Permutation ab = alpha * beta;
      if (ab != beta * alpha || !members.contains(ab)) return false;
    }
  return true;
}

DisplacementTable::DisplacementTable(const Quandle& q)
    : group_(displacement_group(q)) {
  const std::size_t m = group_.order();
  mul_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mul_[i * m + j] = *group_.index_of(alpha(i) * alpha(j));
  for (std::size_t i = 0; i < m && abelian_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (mul_[i * m + j] != mul_[j * m + i]) {
        abelian_ = false;
        break;
      }
  const Permutation le_inv = q.left_translation(e()).inverse();
  members_.resize(m);
  block_of_.resize(q.size());
  for (Element x = 0; x < q.size(); ++x) {
    block_of_[x] = *group_.index_of(q.left_translation(x) * le_inv);
    members_[block_of_[x]].push_back(x);
  }
}

std::size_t DisplacementTable::index_of(const Permutation& p) const {
  auto i = group_.index_of(p);
  if (!i)
    throw CoverError(CoverErrorKind::InternalAssertionFailure,
                     "permutation is not in Dis(Q)");
  return *i;
}

bool DisplacementTable::tiny() const noexcept {
  return std::none_of(members_.begin(), members_.end(),
                      [](const auto& b) { return b.empty(); });
}

namespace {

void require_homim(const Quandle& q) {
  if (!is_homim_of_affine(q))
    throw CoverError(CoverErrorKind::NotHomImage,
                     "Dis(Q) is not abelian and tiny; Q is not a homomorphic "
                     "image of an affine quandle");
}

Multitransversal layout(std::vector<std::vector<Element>> per_block) {
  Multitransversal t;
  t.blocks = per_block.size();
  for (const auto& b : per_block) t.kappa = std::max(t.kappa, b.size());
  for (const auto& b : per_block)
    for (std::size_t j = 0; j < t.kappa; ++j) t.entries.push_back(b[j % b.size()]);
  return t;
}

}  // namespace

Multitransversal simple_multitransversal(const Quandle& q) {
  require_homim(q);
  DisplacementTable dis(q);
  std::vector<std::vector<Element>> per_block;
  for (std::size_t i = 0; i < dis.size(); ++i) per_block.push_back(dis.members(i));
  return layout(std::move(per_block));
}

Multitransversal optimized_multitransversal(const Quandle& q) {
  require_homim(q);
  DisplacementTable dis(q);
  const Partition orbs = orbits(q);
  const std::size_t m = dis.size();

  std::vector<std::size_t> load(m, 0);
  std::vector<std::vector<Element>> chosen(m);
  auto take = [&](Element x) {
    ++load[dis.block_of(x)];
    chosen[dis.block_of(x)].push_back(x);
  };

  // Most constrained orbits (fewest reachable blocks) go first.
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (#blocks, orbit)
  const std::size_t e_orbit = orbs.block_of(dis.e());
  for (std::size_t o = 0; o < orbs.num_blocks(); ++o) {
    if (o == e_orbit) continue;
    std::unordered_set<std::size_t> reach;
    for (Element x : orbs.block(o)) reach.insert(dis.block_of(x));
    order.emplace_back(reach.size(), o);
  }
  std::sort(order.begin(), order.end());

  take(dis.e());
  for (auto [nblocks, o] : order) {
    Element best = orbs.block(o).front();
    for (Element x : orbs.block(o))
      if (load[dis.block_of(x)] < load[dis.block_of(best)]) best = x;
    take(best);
  }

  const std::size_t kappa = *std::max_element(load.begin(), load.end());
  for (std::size_t i = 0; i < m; ++i) {
    auto& c = chosen[i];
    for (Element x : dis.members(i)) {
      if (c.size() >= kappa) break;
      if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
    }
    std::sort(c.begin(), c.end());
  }
  return layout(std::move(chosen));
}

void validate_multitransversal(const Quandle& q, const DisplacementTable& dis,
                               const Multitransversal& t) {
  auto fail = [](const std::string& what, std::vector<Element> w = {}) {
    return CoverError(CoverErrorKind::InvalidMultitransversal, what, std::move(w));
  };
  if (t.kappa == 0 || t.blocks != dis.size() ||
      t.entries.size() != t.blocks * t.kappa)
    throw fail("multitransversal shape does not match Dis(Q)");
  if (t.entries.front() != dis.e()) throw fail("entry 0 must be e");
  std::vector<bool> orbit_hit(q.size(), false);
  const Partition orbs = orbits(q);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const Element x = t.entries[k];
    if (x >= q.size() || dis.block_of(x) != t.block_index(k))
      throw fail("entry " + std::to_string(k) + " lies in the wrong block",
                 {static_cast<Element>(k)});
    orbit_hit[orbs.block_of(x)] = true;
  }
  for (std::size_t o = 0; o < orbs.num_blocks(); ++o)
    if (!orbit_hit[o])
      throw fail("orbit " + std::to_string(o) + " is not met",
                 {static_cast<Element>(o)});
}

namespace {

// Shared index arithmetic for (T, (+)) and Dis(Q) x (T, (+)).
struct OplusData {
  std::size_t m = 0;
  std::size_t kappa = 0;
  std::vector<std::size_t> dmul;
  std::vector<std::size_t> dinv;

  Element oplus(Element a, Element b) const {
    const std::size_t i = a / kappa, j = a % kappa;
    const std::size_t ip = b / kappa, jp = b % kappa;
    return static_cast<Element>(dmul[i * m + ip] * kappa + (j + jp) % kappa);
  }
  Element ominus(Element a) const {
    const std::size_t i = a / kappa, j = a % kappa;
    return static_cast<Element>(dinv[i] * kappa + (kappa - j) % kappa);
  }
};

class OplusGroup final : public AbelianGroup::Impl {
 public:
  explicit OplusGroup(std::shared_ptr<const OplusData> d) : d_(std::move(d)) {}
  std::size_t order() const override { return d_->m * d_->kappa; }
  Element add(Element a, Element b) const override { return d_->oplus(a, b); }
  Element neg(Element a) const override { return d_->ominus(a); }
  std::string label(Element a) const override { return "T" + std::to_string(a); }

 private:
  std::shared_ptr<const OplusData> d_;
};

class CoverGroup final : public AbelianGroup::Impl {
 public:
  explicit CoverGroup(std::shared_ptr<const OplusData> d)
      : d_(std::move(d)), tsize_(d_->m * d_->kappa) {}
  std::size_t order() const override { return d_->m * tsize_; }
  Element add(Element u, Element v) const override {
    const std::size_t a = u / tsize_, b = v / tsize_;
    return static_cast<Element>(d_->dmul[a * d_->m + b] * tsize_ +
                                d_->oplus(u % tsize_, v % tsize_));
  }
  Element neg(Element u) const override {
    return static_cast<Element>(d_->dinv[u / tsize_] * tsize_ +
                                d_->ominus(u % tsize_));
  }
  std::string label(Element u) const override {
    return "(a" + std::to_string(u / tsize_) + ",T" + std::to_string(u % tsize_) +
           ")";
  }

 private:
  std::shared_ptr<const OplusData> d_;
  std::size_t tsize_;
};

std::shared_ptr<const OplusData> oplus_data(const DisplacementTable& dis,
                                            const Multitransversal& t) {
  auto d = std::make_shared<OplusData>();
  d->m = dis.size();
  d->kappa = t.kappa;
  d->dmul.resize(d->m * d->m);
  d->dinv.resize(d->m);
  for (std::size_t i = 0; i < d->m; ++i)
    for (std::size_t j = 0; j < d->m; ++j) {
      d->dmul[i * d->m + j] = dis.mul(i, j);
      if (dis.mul(i, j) == 0) d->dinv[i] = j;
    }
  return d;
}

CoverError internal(const std::string& what) {
  return CoverError(CoverErrorKind::InternalAssertionFailure, what);
}

}  // namespace

AbelianGroup build_oplus(const Quandle& q, const Multitransversal& t) {
  DisplacementTable dis(q);
  if (!dis.abelian() || !dis.tiny())
    throw CoverError(CoverErrorKind::OplusUndefined,
                     "(+) is undefined: Dis(Q) is not abelian and tiny");
  validate_multitransversal(q, dis, t);
  AbelianGroup group(std::make_shared<OplusGroup>(oplus_data(dis, t)));
  if (auto failure = group.check_axioms())
    throw internal("(T, (+)) is not an abelian group: " + *failure);
  return group;
}

CoverResult build_cover(const Quandle& q, const Multitransversal& t) {
  require_homim(q);
  DisplacementTable dis(q);
  validate_multitransversal(q, dis, t);
  if (!dis.abelian() || !dis.tiny())
    throw internal("Dis(Q) closure disagrees with the homomorphic-image test");

  auto data = oplus_data(dis, t);
  AbelianGroup group(std::make_shared<CoverGroup>(data));
  const std::size_t m = dis.size();
  const std::size_t tsize = t.size();

  // f's Dis-component depends on alpha and on the Cayley class of x(a),
  // which is the block of a.
  const Permutation le = q.left_translation(dis.e());
  std::vector<std::size_t> f_alpha(m * m);
  for (std::size_t block = 0; block < m; ++block) {
    const Permutation lx_inv =
        q.left_translation(t.entries[block * t.kappa]).inverse();
    for (std::size_t d = 0; d < m; ++d)
      f_alpha[d * m + block] = dis.index_of(le * dis.alpha(d) * lx_inv);
  }

  const std::size_t order = m * tsize;
  std::vector<Element> fmap(order);
  std::vector<Element> psi(order);
  for (std::size_t d = 0; d < m; ++d)
    for (std::size_t k = 0; k < tsize; ++k) {
      const std::size_t u = d * tsize + k;
      fmap[u] = static_cast<Element>(f_alpha[d * m + t.block_index(k)] * tsize + k);
      psi[u] = dis.alpha(d)(t.entries[k]);
    }

  std::optional<GroupAutomorphism> f;
  try {
    f = GroupAutomorphism::validate(group, std::move(fmap));
  } catch (const GroupError& err) {
    throw internal(std::string("f is not an automorphism: ") + err.what());
  }
  CoverResult result{
      .transversal = t,
      .dis_order = m,
      .group = group,
      .f = *f,
      .psi = std::move(psi),
      .cover = make_affine(group, *f),
  };
  if (auto report = verify_cover(result, q); !report.passed)
    throw internal("cover verification failed: " + report.failure);
  return result;
}

bool CoverResult::psi_bijective() const {
  std::vector<Element> sorted = psi;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

CoverReport verify_cover(const CoverResult& r, const Quandle& q) {
  auto fail = [](std::string what, std::vector<Element> w = {}) {
    return CoverReport{false, std::move(what), std::move(w)};
  };
  const AbelianGroup& A = r.group;
  const Element n = static_cast<Element>(A.order());
  if (r.psi.size() != n || r.f.size() != n || r.cover.quandle.size() != n)
    return fail("sizes of A, f, psi and the cover disagree");
  if (auto failure = A.check_axioms()) return fail("A: " + *failure);

  std::vector<bool> seen(n, false);
  for (Element u = 0; u < n; ++u) {
    if (r.f(u) >= n || seen[r.f(u)]) return fail("f is not bijective", {u});
    seen[r.f(u)] = true;
  }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (r.f(A.add(u, v)) != A.add(r.f(u), r.f(v)))
        return fail("f is not additive", {u, v});

  const Quandle& aff = r.cover.quandle;
  for (Element u = 0; u < n; ++u) {
    const Element one_minus_f = A.sub(u, r.f(u));
    for (Element v = 0; v < n; ++v)
      if (aff(u, v) != A.add(one_minus_f, r.f(v)))
        return fail("cover table is not Aff(A, f)", {u, v});
  }

  for (Element u = 0; u < n; ++u)
    if (r.psi[u] >= q.size()) return fail("psi leaves Q", {u});
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (r.psi[aff(u, v)] != q(r.psi[u], r.psi[v]))
        return fail("psi is not a homomorphism", {u, v});

  std::vector<bool> hit(q.size(), false);
  for (Element u = 0; u < n; ++u) hit[r.psi[u]] = true;
  for (Element x = 0; x < q.size(); ++x)
    if (!hit[x]) return fail("psi is not surjective", {x});
  return {};
}

}  // namespace homaff
