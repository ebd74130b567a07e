#include "kring/fin_ab_group.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace kring {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod(const Integer& a, std::int64_t m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto d : moduli_)
    if (d < 1 || d > kMaxModulus)
      throw std::invalid_argument("FinAbGroup: modulus out of range: " + std::to_string(d));
}

std::uint64_t FinAbGroup::order() const {
  std::uint64_t n = 1;
  for (auto d : moduli_) {
    auto ud = static_cast<std::uint64_t>(d);
    if (n > std::numeric_limits<std::uint64_t>::max() / ud)
      return std::numeric_limits<std::uint64_t>::max();
    n *= ud;
  }
  return n;
}

Elem FinAbGroup::generator(std::size_t i) const {
  Elem e = zero();
  e.at(i) = moduli_[i] == 1 ? 0 : 1;
  return e;
}

bool FinAbGroup::is_reduced(const Elem& x) const {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  return true;
}

bool FinAbGroup::is_zero(const Elem& x) const {
  for (auto v : x)
    if (v != 0) return false;
  return true;
}

Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
  Elem c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t s = a[i] + b[i];
    c[i] = s >= moduli_[i] ? s - moduli_[i] : s;
  }
  return c;
}

Elem FinAbGroup::subtract(const Elem& a, const Elem& b) const { return add(a, negate(b)); }

Elem FinAbGroup::negate(const Elem& a) const {
  Elem c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] == 0 ? 0 : moduli_[i] - a[i];
  return c;
}

Elem FinAbGroup::scale(const Elem& a, std::int64_t k) const {
  Elem c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(mod(k, moduli_[i]) * a[i], moduli_[i]);
  return c;
}

void FinAbGroup::accumulate(Elem& a, const Elem& b, std::int64_t k) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) continue;
    a[i] = mod(a[i] + mod(k, moduli_[i]) * b[i], moduli_[i]);
  }
}

Elem FinAbGroup::reduce(std::span<const Integer> coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("reduce: length mismatch");
  Elem c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(coords[i], moduli_[i]);
  return c;
}

Elem FinAbGroup::reduce(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("reduce: length mismatch");
  Elem c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(coords[i], moduli_[i]);
  return c;
}

std::uint64_t FinAbGroup::index_of(const Elem& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(x[i]);
  return idx;
}

Elem FinAbGroup::element_at(std::uint64_t index) const {
  Elem x(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    auto d = static_cast<std::uint64_t>(moduli_[i]);
    x[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return x;
}

std::vector<Elem> FinAbGroup::elements() const {
  std::vector<Elem> out;
  const std::uint64_t n = order();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

IntMatrix FinAbGroup::relation_matrix() const {
  const std::size_t k = moduli_.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = moduli_[i];
  return m;
}

AbPresentation FinAbGroup::presentation() const {
  return AbPresentation(moduli_.size(), relation_matrix());
}

std::vector<Integer> to_integers(const Elem& x) { return {x.begin(), x.end()}; }

FiniteQuotient::FiniteQuotient(std::size_t k, const IntMatrix& relations) : k_(k) {
  IntMatrix basis = relations.rows() == 0 ? IntMatrix(0, k) : row_basis(relations);
  SmithColumnForm f = smith_column_form(basis);
  if (f.diagonal.size() != k)
    throw std::invalid_argument("FiniteQuotient: quotient is infinite");
  v_ = std::move(f.v);
  IntMatrix v_inv = unimodular_inverse(v_);
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < k; ++i) {
    if (f.diagonal[i] == 1) continue;
    if (f.diagonal[i] > kMaxModulus)
      throw std::invalid_argument("FiniteQuotient: modulus too large");
    kept_.push_back(i);
    moduli.push_back(static_cast<std::int64_t>(f.diagonal[i]));
    lifts_.push_back(v_inv.row_vector(i));
  }
  group_ = FinAbGroup(std::move(moduli));
}

Elem FiniteQuotient::project(std::span<const Integer> x) const {
  std::vector<Integer> w = x * v_;
  Elem out(kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) out[t] = mod(w[kept_[t]], group_.modulus(t));
  return out;
}

Elem FiniteQuotient::project(std::span<const std::int64_t> x) const {
  std::vector<Integer> xi(x.begin(), x.end());
  return project(std::span<const Integer>(xi));
}

namespace {

IntMatrix generator_matrix(const FinAbGroup& parent, const std::vector<Elem>& gens) {
  IntMatrix g(0, parent.generator_count());
  for (const auto& e : gens) {
    if (!parent.is_reduced(e)) throw std::invalid_argument("SubgroupEmbedding: unreduced generator");
    g.append_row(to_integers(e));
  }
  return g;
}

IntMatrix stacked(const IntMatrix& gens, const FinAbGroup& parent) {
  IntMatrix m = gens;
  m.append_rows(parent.relation_matrix());
  return m;
}

IntMatrix relations_among(const IntMatrix& gens, const FinAbGroup& parent) {
  // {c in Z^s : c G in diag lattice}: project the left kernel of [G; -diag].
  const std::size_t s = gens.rows();
  IntMatrix m = gens;
  IntMatrix neg = parent.relation_matrix();
  for (std::size_t r = 0; r < neg.rows(); ++r) neg.negate_row(r);
  m.append_rows(neg);
  IntMatrix rel(0, s);
  if (s == 0) return rel;
  IntMatrix lk = left_kernel(m);
  for (std::size_t r = 0; r < lk.rows(); ++r)
    rel.append_row(std::vector<Integer>(lk.row(r).begin(), lk.row(r).begin() + s));
  return rel;
}

}  // namespace

SubgroupEmbedding::SubgroupEmbedding(const FinAbGroup& parent, const std::vector<Elem>& generators)
    : parent_(parent),
      gens_(generator_matrix(parent, generators)),
      quotient_(gens_.rows(), relations_among(gens_, parent)),
      solver_(stacked(gens_, parent)) {
  for (std::size_t t = 0; t < quotient_.group().generator_count(); ++t)
    images_.push_back(parent_.reduce(std::span<const Integer>(quotient_.lift(t) * gens_)));
}

Elem SubgroupEmbedding::include(const Elem& x) const {
  Elem y = parent_.zero();
  for (std::size_t t = 0; t < x.size(); ++t) parent_.accumulate(y, images_[t], x[t]);
  return y;
}

std::optional<Elem> SubgroupEmbedding::restrict(const Elem& y) const {
  auto sol = solver_.solve(to_integers(y));
  if (!sol) return std::nullopt;
  std::vector<Integer> c(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(gens_.rows()));
  return quotient_.project(std::span<const Integer>(c));
}

}  // namespace kring
