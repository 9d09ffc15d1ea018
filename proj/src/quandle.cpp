#include "homaff/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace homaff {

namespace {

std::string witness_text(std::initializer_list<Element> w) {
  std::string s = "(";
  bool first = true;
  for (Element x : w) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

Quandle Quandle::from_table(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) {
      throw QuandleError(QuandleErrorKind::Malformed,
                         "row " + std::to_string(a) + " has " +
                             std::to_string(rows[a].size()) +
                             " entries, expected " + std::to_string(n),
                         {static_cast<Element>(a)});
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) {
        throw QuandleError(QuandleErrorKind::Malformed,
                           "entry " + witness_text({Element(a), Element(b)}) +
                               " out of range",
                           {static_cast<Element>(a), static_cast<Element>(b)});
      }
      flat.push_back(rows[a][b]);
    }
  }
  Quandle q(n, std::move(flat));

  for (Element a = 0; a < n; ++a) {
    if (q(a, a) != a) {
      throw QuandleError(QuandleErrorKind::NotIdempotent,
                         "not idempotent: " + std::to_string(a) + "*" +
                             std::to_string(a) + " = " + std::to_string(q(a, a)),
                         {a});
    }
  }
  std::vector<bool> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (Element b = 0; b < n; ++b) {
      if (seen[q(a, b)]) {
        throw QuandleError(QuandleErrorKind::RowNotBijective,
                           "left translation L_" + std::to_string(a) +
                               " is not a bijection",
                           {a});
      }
      seen[q(a, b)] = true;
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (q(a, q(b, c)) != q(q(a, b), q(a, c))) {
          throw QuandleError(QuandleErrorKind::NotLeftDistributive,
                             "a*(b*c) != (a*b)*(a*c) at (a,b,c) = " +
                                 witness_text({a, b, c}),
                             {a, b, c});
        }
  return q;
}

Quandle Quandle::from_trusted_table(std::size_t n, std::vector<Element> flat) {
  if (flat.size() != n * n ||
      std::any_of(flat.begin(), flat.end(), [n](Element x) { return x >= n; })) {
    throw QuandleError(QuandleErrorKind::Malformed,
                       "table is not an n x n array over 0..n-1");
  }
  return Quandle(n, std::move(flat));
}

Element Quandle::left_divide(Element a, Element c) const {
  auto r = row(a);
  auto it = std::find(r.begin(), r.end(), c);
  return static_cast<Element>(it - r.begin());
}

Permutation Quandle::left_translation(Element a) const {
  auto r = row(a);
  return Permutation(std::vector<Element>(r.begin(), r.end()));
}

Partition Partition::from_blocks(std::size_t n,
                                 std::vector<std::vector<Element>> blocks) {
  Partition p;
  p.block_of_.assign(n, n);
  for (auto& block : blocks) {
    if (block.empty()) {
      throw QuandleError(QuandleErrorKind::InvalidPartition,
                         "partition has an empty block");
    }
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Element x : blocks[i]) {
      if (x >= n || p.block_of_[x] != n) {
        throw QuandleError(QuandleErrorKind::InvalidPartition,
                           "element " + std::to_string(x) +
                               (x >= n ? " out of range" : " occurs twice"),
                           {x});
      }
      p.block_of_[x] = i;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (p.block_of_[x] == n) {
      throw QuandleError(QuandleErrorKind::InvalidPartition,
                         "element " + std::to_string(x) + " not covered",
                         {static_cast<Element>(x)});
    }
  }
  p.blocks_ = std::move(blocks);
  return p;
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::vector<Element>> by_label;
  for (std::size_t x = 0; x < labels.size(); ++x)
    by_label[labels[x]].push_back(static_cast<Element>(x));
  std::vector<std::vector<Element>> blocks;
  for (auto& [label, block] : by_label) blocks.push_back(std::move(block));
  return from_blocks(labels.size(), std::move(blocks));
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks_) sizes.push_back(b.size());
  return sizes;
}

Quandle quotient(const Quandle& q, const Partition& congruence) {
  const std::size_t n = q.size();
  if (congruence.size() != n) {
    throw QuandleError(QuandleErrorKind::InvalidPartition,
                       "partition is over " + std::to_string(congruence.size()) +
                           " elements, quandle has " + std::to_string(n));
  }
  // a*b must land in the block of rep(a)*rep(b) for every a, b.
  for (Element a = 0; a < n; ++a) {
    Element ra = congruence.block(congruence.block_of(a)).front();
    for (Element b = 0; b < n; ++b) {
      Element rb = congruence.block(congruence.block_of(b)).front();
      if (congruence.block_of(q(a, b)) != congruence.block_of(q(ra, rb))) {
        throw QuandleError(QuandleErrorKind::NotACongruence,
                           "not a congruence: " + std::to_string(ra) + "~" +
                               std::to_string(a) + ", " + std::to_string(rb) +
                               "~" + std::to_string(b) + " but products differ",
                           {ra, a, rb, b});
      }
    }
  }
  const std::size_t m = congruence.num_blocks();
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      flat[i * m + j] = static_cast<Element>(congruence.block_of(
          q(congruence.block(i).front(), congruence.block(j).front())));
  return Quandle::from_trusted_table(m, std::move(flat));
}

Quandle induced_subquandle(const Quandle& q, std::span<const Element> subset) {
  std::vector<Element> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Element> position(q.size(), static_cast<Element>(q.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) position[sorted[i]] = i;
  const std::size_t m = sorted.size();
  std::vector<Element> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element p = q(sorted[i], sorted[j]);
      if (position[p] == q.size()) {
        throw QuandleError(QuandleErrorKind::Malformed,
                           "subset is not closed: " + std::to_string(sorted[i]) +
                               "*" + std::to_string(sorted[j]) + " = " +
                               std::to_string(p),
                           {sorted[i], sorted[j]});
      }
      flat[i * m + j] = position[p];
    }
  return Quandle::from_trusted_table(m, std::move(flat));
}

Quandle relabeled(const Quandle& q, std::span<const Element> relabel) {
  const std::size_t n = q.size();
  std::vector<Element> flat(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      flat[relabel[a] * n + relabel[b]] = relabel[q(a, b)];
  return Quandle::from_trusted_table(n, std::move(flat));
}

}  // namespace homaff
