#include "kring/additive.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

namespace kring {

std::string to_string(const ObjSum& s, const FiniteRingoid& base) {
  if (s.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "+" : "") << base.object_name(s[i]);
  return os.str();
}

ObjSum concat(const ObjSum& a, const ObjSum& b) {
  ObjSum s = a;
  s.insert(s.end(), b.begin(), b.end());
  return s;
}

AdditiveView::AdditiveView(std::shared_ptr<const FiniteRingoid> base) : base_(std::move(base)) {
  if (!base_) throw StructuralError("AdditiveView: null base ringoid");
}

FinAbGroup AdditiveView::hom(const ObjSum& a, const ObjSum& b) const {
  std::vector<std::int64_t> moduli;
  for (auto bi : b)
    for (auto aj : a) {
      const auto& m = base_->hom(aj, bi).moduli();
      moduli.insert(moduli.end(), m.begin(), m.end());
    }
  return FinAbGroup(std::move(moduli));
}

Integer AdditiveView::hom_size(const ObjSum& a, const ObjSum& b) const {
  Integer n = 1;
  for (auto bi : b)
    for (auto aj : a)
      for (auto d : base_->hom(aj, bi).moduli()) n *= d;
  return n;
}

MatMorphism AdditiveView::from_elem(const ObjSum& a, const ObjSum& b, const Elem& x) const {
  MatMorphism m{a, b, {}};
  m.entries.reserve(a.size() * b.size());
  std::size_t pos = 0;
  for (auto bi : b)
    for (auto aj : a) {
      const std::size_t k = base_->hom(aj, bi).generator_count();
      m.entries.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(pos),
                             x.begin() + static_cast<std::ptrdiff_t>(pos + k));
      pos += k;
    }
  return m;
}

Elem AdditiveView::to_elem(const MatMorphism& m) const {
  Elem x;
  for (const auto& e : m.entries) x.insert(x.end(), e.begin(), e.end());
  return x;
}

MatMorphism AdditiveView::zero(const ObjSum& a, const ObjSum& b) const {
  MatMorphism m{a, b, {}};
  for (auto bi : b)
    for (auto aj : a) m.entries.push_back(base_->hom(aj, bi).zero());
  return m;
}

MatMorphism AdditiveView::identity(const ObjSum& a) const {
  if (!base_->unital())
    throw StructuralError("identity morphisms need a unital base ringoid");
  MatMorphism m = zero(a, a);
  for (std::size_t i = 0; i < a.size(); ++i) m.at(i, i) = base_->identity(a[i]);
  return m;
}

MatMorphism AdditiveView::add(const MatMorphism& x, const MatMorphism& y) const {
  if (x.source != y.source || x.target != y.target)
    throw StructuralError("add: matrices have different shapes");
  MatMorphism m = x;
  for (std::size_t i = 0; i < x.target.size(); ++i)
    for (std::size_t j = 0; j < x.source.size(); ++j)
      m.at(i, j) = base_->hom(x.source[j], x.target[i]).add(x.at(i, j), y.at(i, j));
  return m;
}

MatMorphism AdditiveView::negate(const MatMorphism& x) const {
  MatMorphism m = x;
  for (std::size_t i = 0; i < x.target.size(); ++i)
    for (std::size_t j = 0; j < x.source.size(); ++j)
      m.at(i, j) = base_->hom(x.source[j], x.target[i]).negate(x.at(i, j));
  return m;
}

MatMorphism AdditiveView::compose(const MatMorphism& y, const MatMorphism& x) const {
  if (x.target != y.source) throw StructuralError("compose: matrices are not composable");
  MatMorphism m = zero(x.source, y.target);
  for (std::size_t i = 0; i < y.target.size(); ++i)
    for (std::size_t k = 0; k < x.source.size(); ++k) {
      const FinAbGroup& h = base_->hom(x.source[k], y.target[i]);
      Elem& acc = m.at(i, k);
      for (std::size_t j = 0; j < x.target.size(); ++j) {
        Elem p = base_->compose(x.source[k], x.target[j], y.target[i], y.at(i, j), x.at(j, k));
        acc = h.add(acc, p);
      }
    }
  return m;
}

bool AdditiveView::is_valid(const MatMorphism& m) const {
  if (m.entries.size() != m.source.size() * m.target.size()) return false;
  for (auto o : m.source)
    if (o >= base_->object_count()) return false;
  for (auto o : m.target)
    if (o >= base_->object_count()) return false;
  for (std::size_t i = 0; i < m.target.size(); ++i)
    for (std::size_t j = 0; j < m.source.size(); ++j)
      if (!base_->hom(m.source[j], m.target[i]).is_reduced(m.at(i, j))) return false;
  return true;
}

Biproduct AdditiveView::biproduct(const ObjSum& a, const ObjSum& b) const {
  Biproduct bp;
  bp.sum = concat(a, b);
  const std::size_t m = a.size();
  bp.ia = zero(a, bp.sum);
  bp.ib = zero(b, bp.sum);
  bp.pa = zero(bp.sum, a);
  bp.pb = zero(bp.sum, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bp.ia.at(i, i) = base_->identity(a[i]);
    bp.pa.at(i, i) = base_->identity(a[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    bp.ib.at(m + i, i) = base_->identity(b[i]);
    bp.pb.at(i, m + i) = base_->identity(b[i]);
  }
  return bp;
}

bool AdditiveView::check_biproduct(const Biproduct& bp) const {
  const ObjSum& a = bp.ia.source;
  const ObjSum& b = bp.ib.source;
  return compose(bp.pa, bp.ia) == identity(a) && compose(bp.pb, bp.ib) == identity(b) &&
         add(compose(bp.ia, bp.pa), compose(bp.ib, bp.pb)) == identity(bp.sum) &&
         compose(bp.pb, bp.ia) == zero(a, b) && compose(bp.pa, bp.ib) == zero(b, a);
}

MatMorphism AdditiveView::permutation(const ObjSum& a, const ObjSum& b,
                                      const std::vector<std::size_t>& perm) const {
  MatMorphism m = zero(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.at(perm[i]) != a[i]) throw StructuralError("permutation does not match the sums");
    m.at(perm[i], i) = base_->identity(a[i]);
  }
  return m;
}

std::optional<MatMorphism> AdditiveView::right_inverse(const MatMorphism& u) const {
  const ObjSum& a = u.source;
  const ObjSum& b = u.target;
  MatMorphism v = zero(b, a);
  const MatMorphism one = identity(b);
  for (std::size_t k = 0; k < b.size(); ++k) {
    // Column k of v: a morphism (b_k) -> a.
    const ObjSum bk{b[k]};
    const FinAbGroup col = hom(bk, a);
    const MatMorphism target_col = [&] {
      MatMorphism t = zero(bk, b);
      for (std::size_t l = 0; l < b.size(); ++l) t.at(l, 0) = one.at(l, k);
      return t;
    }();
    const std::uint64_t n = col.order();
    bool found = false;
    for (std::uint64_t idx = 0; idx < n && !found; ++idx) {
      MatMorphism c = from_elem(bk, a, col.element_at(idx));
      if (compose(u, c) == target_col) {
        for (std::size_t i = 0; i < a.size(); ++i) v.at(i, k) = c.at(i, 0);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return v;
}

std::optional<MatMorphism> AdditiveView::inverse(const MatMorphism& u) const {
  auto v = right_inverse(u);
  if (!v) return std::nullopt;
  // A right inverse of an isomorphism is its inverse, so checking this one
  // suffices.
  if (compose(*v, u) != identity(u.source)) return std::nullopt;
  return v;
}

std::vector<Integer> AdditiveView::signature(const ObjSum& s) const {
  std::vector<Integer> sig;
  for (std::size_t c = 0; c < base_->object_count(); ++c) {
    sig.push_back(hom_size({c}, s));
    sig.push_back(hom_size(s, {c}));
  }
  return sig;
}

IsoSearch AdditiveView::find_isomorphism(const ObjSum& a, const ObjSum& b,
                                         const Limits& limits) const {
  if (!base_->unital())
    throw StructuralError("isomorphism search needs a unital base ringoid");
  IsoSearch out;
  if (signature(a) != signature(b)) return out;

  const Integer size = hom_size(a, b);
  if (size > limits.ceiling) {
    ObjSum sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      out.status = IsoStatus::kUndecided;
      return out;
    }
    // Match equal entries in order; the result is a certified witness.
    std::vector<std::size_t> perm(a.size());
    std::vector<char> used(b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j] && b[j] == a[i]) {
          used[j] = 1;
          perm[i] = j;
          break;
        }
    MatMorphism u = permutation(a, b, perm);
    auto v = inverse(u);
    if (!v || compose(u, *v) != identity(b)) {
      out.status = IsoStatus::kUndecided;
      return out;
    }
    out.status = IsoStatus::kFound;
    out.forward = std::move(u);
    out.inverse = std::move(v);
    out.by_permutation = true;
    return out;
  }

  const FinAbGroup group = hom(a, b);
  const std::uint64_t n = static_cast<std::uint64_t>(size);
  const MatMorphism one_b = identity(b);
  constexpr std::uint64_t kChunk = 1024;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= n || start >= best.load()) return;
      const std::uint64_t stop = std::min(n, start + kChunk);
      for (std::uint64_t idx = start; idx < stop; ++idx) {
        if (idx >= best.load()) return;
        MatMorphism u = from_elem(a, b, group.element_at(idx));
        auto v = inverse(u);
        if (v && compose(u, *v) == one_b) {
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    }
  };

  const unsigned threads = std::max(1u, limits.threads);
  if (threads == 1 || n <= kChunk) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const std::uint64_t found = best.load();
  if (found == std::numeric_limits<std::uint64_t>::max()) return out;
  out.status = IsoStatus::kFound;
  out.forward = from_elem(a, b, group.element_at(found));
  out.inverse = inverse(*out.forward);
  return out;
}

ObjSum CompletedFunctor::map_object(const ObjSum& s) const {
  ObjSum t;
  for (auto o : s) t.push_back(f_.map_object(o));
  return t;
}

MatMorphism CompletedFunctor::apply(const MatMorphism& m) const {
  MatMorphism out{map_object(m.source), map_object(m.target), {}};
  for (std::size_t i = 0; i < m.target.size(); ++i)
    for (std::size_t j = 0; j < m.source.size(); ++j)
      out.entries.push_back(f_.apply(m.source[j], m.target[i], m.at(i, j)));
  return out;
}

CompletedFunctor map_completion(const RingoidHom& f) { return CompletedFunctor(f); }

std::vector<ObjSum> sums_up_to(std::size_t objects, std::size_t bound) {
  std::vector<ObjSum> out{ObjSum{}};
  if (objects == 0) return out;
  for (std::size_t len = 1; len <= bound; ++len) {
    ObjSum s(len, 0);
    for (;;) {
      out.push_back(s);
      std::size_t pos = len;
      while (pos > 0 && s[pos - 1] + 1 == objects) s[--pos] = 0;
      if (pos == 0) break;
      ++s[pos - 1];
    }
  }
  return out;
}

IsoClassTable iso_class_table(const AdditiveView& view, std::size_t bound, const Limits& limits) {
  IsoClassTable table;
  table.bound = bound;
  std::vector<std::vector<Integer>> signatures;
  for (const ObjSum& s : sums_up_to(view.base().object_count(), bound)) {
    ObjSum sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != s) {
      // Permutations are isomorphisms; the sorted form was classified first.
      table.class_of[s] = table.class_of.at(sorted);
      continue;
    }
    auto sig = view.signature(s);
    std::optional<std::size_t> cls;
    for (std::size_t c = 0; c < table.representatives.size() && !cls; ++c) {
      if (signatures[c] != sig) continue;
      IsoSearch r = view.find_isomorphism(table.representatives[c], s, limits);
      if (r.status == IsoStatus::kFound)
        cls = c;
      else if (r.status == IsoStatus::kUndecided)
        table.undecided.emplace_back(table.representatives[c], s);
    }
    if (!cls) {
      cls = table.representatives.size();
      table.representatives.push_back(s);
      signatures.push_back(std::move(sig));
    }
    table.class_of[s] = *cls;
  }
  const std::size_t k = table.representatives.size();
  table.oplus.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      ObjSum s = concat(table.representatives[i], table.representatives[j]);
      if (s.size() <= bound) table.oplus[i][j] = table.class_of.at(s);
    }
  return table;
}

}  // namespace kring
