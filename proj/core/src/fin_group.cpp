#include "kring/fin_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kring {

FinGroup::FinGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
                   std::vector<std::string> names)
    : order_(order), table_(std::move(table)), identity_(identity), names_(std::move(names)) {
  if (order_ == 0) throw std::invalid_argument("FinGroup: empty group");
  if (table_.size() != order_ * order_) throw std::invalid_argument("FinGroup: table size mismatch");
  if (identity_ >= order_) throw std::invalid_argument("FinGroup: identity out of range");
  for (auto v : table_)
    if (v >= order_) throw std::invalid_argument("FinGroup: table entry out of range");
  for (std::size_t a = 0; a < order_; ++a)
    if (multiply(identity_, a) != a || multiply(a, identity_) != a)
      throw std::invalid_argument("FinGroup: identity law fails");
  inverse_.assign(order_, order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
  for (std::size_t a = 0; a < order_; ++a)
    if (inverse_[a] == order_) throw std::invalid_argument("FinGroup: element without inverse");
  if (names_.empty())
    for (std::size_t a = 0; a < order_; ++a) names_.push_back("g" + std::to_string(a));
  if (names_.size() != order_) throw std::invalid_argument("FinGroup: name count mismatch");
}

FinGroup FinGroup::cyclic(std::size_t n) {
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back(a == 0 ? "e" : "g" + (a > 1 ? std::to_string(a) : ""));
  return FinGroup(n, std::move(t), 0, std::move(names));
}

FinGroup FinGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::size_t> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[a * m + b] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FinGroup(m, std::move(t), 0);
}

bool FinGroup::is_associative() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      std::size_t ab = multiply(a, b);
      for (std::size_t c = 0; c < order_; ++c)
        if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
    }
  return true;
}

bool FinGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::vector<std::size_t> generated_subgroup(const FinGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : gens) {
      std::size_t x = g.multiply(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

Abelianization abelianize(const FinGroup& g) {
  const std::size_t n = g.order();
  // Commutator subgroup by closure.
  std::vector<std::size_t> commutators;
  {
    std::vector<char> seen(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t c = g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
  }
  std::vector<std::size_t> derived = generated_subgroup(g, commutators);

  // Cosets of the (normal) derived subgroup.
  std::vector<std::size_t> coset(n, n);
  std::vector<std::size_t> rep;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] != n) continue;
    std::size_t id = rep.size();
    rep.push_back(a);
    for (auto d : derived) coset[g.multiply(a, d)] = id;
  }
  const std::size_t q = rep.size();
  auto qmul = [&](std::size_t x, std::size_t y) { return coset[g.multiply(rep[x], rep[y])]; };

  // Build a generating tower of the abelian quotient: each new generator is
  // the least coset outside the current subgroup. Relations: m_k e_k equals the
  // expression of m_k g_k inside the previous subgroup.
  std::vector<std::vector<Integer>> coords(q);
  std::vector<char> in(q, 0);
  std::vector<std::size_t> members{coset[g.identity()]};
  coords[members[0]] = {};
  in[members[0]] = 1;
  std::vector<std::size_t> gens;
  std::vector<std::vector<Integer>> relations;

  auto widen = [&](std::size_t k) {
    for (auto& c : coords)
      if (c.size() < k) c.resize(k);
  };

  for (std::size_t cand = 0; cand < q; ++cand) {
    if (in[cand]) continue;
    const std::size_t k = gens.size();
    gens.push_back(cand);
    widen(k + 1);
    // Smallest m with m * cand inside the current subgroup.
    std::size_t power = cand;
    std::int64_t m = 1;
    while (!in[power]) {
      power = qmul(power, cand);
      ++m;
    }
    std::vector<Integer> rel = coords[power];
    rel.resize(k + 1);
    for (auto& x : rel) x = -x;
    rel[k] += m;
    relations.push_back(rel);
    // Extend the subgroup by multiples j * cand, 1 <= j < m.
    const std::vector<std::size_t> old = members;
    std::size_t step = cand;
    for (std::int64_t j = 1; j < m; ++j) {
      for (auto h : old) {
        std::size_t x = qmul(h, step);
        coords[x] = coords[h];
        coords[x].resize(k + 1);
        coords[x][k] += j;
        in[x] = 1;
        members.push_back(x);
      }
      step = qmul(step, cand);
    }
  }

  const std::size_t k = gens.size();
  IntMatrix rel(0, k);
  for (auto& r : relations) {
    r.resize(k);
    rel.append_row(r);
  }
  Abelianization out;
  out.group = AbPresentation(k, rel);
  out.commutator_order = derived.size();
  for (auto c : gens) out.generators.push_back(rep[c]);
  out.coordinates.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto c = coords[coset[a]];
    c.resize(k);
    out.coordinates[a] = std::move(c);
  }
  return out;
}

}  // namespace kring
