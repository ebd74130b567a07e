#include "kring/ab_presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace kring {

AbPresentation::AbPresentation(std::size_t generators)
    : AbPresentation(generators, IntMatrix(0, generators)) {}

AbPresentation::AbPresentation(std::size_t generators, const IntMatrix& relations)
    : lattice_(generators, relations.rows() == 0 ? IntMatrix(0, generators) : relations) {
  const auto& diag = lattice_.diagonal();
  rank_ = generators - diag.size();
  for (const auto& d : diag)
    if (d != 1) torsion_.push_back(d);
}

Integer AbPresentation::order() const {
  if (rank_ != 0) return 0;
  Integer n = 1;
  for (const auto& t : torsion_) n *= t;
  return n;
}

bool AbPresentation::equal_elements(std::span<const Integer> a,
                                    std::span<const Integer> b) const {
  if (a.size() != b.size()) throw std::invalid_argument("equal_elements: length mismatch");
  std::vector<Integer> d(a.begin(), a.end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  return is_zero(d);
}

std::string AbPresentation::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << 'Z';
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbPresentation cokernel(const IntMatrix& m) { return AbPresentation(m.cols(), m); }

AbPresentation cokernel(std::size_t generators, const IntMatrix& m) {
  return AbPresentation(generators, m.rows() == 0 ? IntMatrix(0, generators) : m);
}

namespace {

void check_shape(const AbHom& f) {
  if (f.matrix.rows() != f.source.generator_count() ||
      f.matrix.cols() != f.target.generator_count())
    throw std::invalid_argument("AbHom: matrix shape does not match presentations");
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom, bool negate_bottom) {
  IntMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    std::vector<Integer> row = bottom.row_vector(r);
    if (negate_bottom)
      for (auto& x : row) x = -x;
    out.append_row(row);
  }
  return out;
}

}  // namespace

bool is_well_defined(const AbHom& f) {
  check_shape(f);
  const IntMatrix& rel = f.source.relations();
  for (std::size_t r = 0; r < rel.rows(); ++r)
    if (!f.target.is_zero(rel.row(r) * f.matrix)) return false;
  return true;
}

bool is_zero_map(const AbHom& f) {
  check_shape(f);
  for (std::size_t r = 0; r < f.matrix.rows(); ++r)
    if (!f.target.is_zero(f.matrix.row(r))) return false;
  return true;
}

bool is_surjective(const AbHom& f) {
  check_shape(f);
  const std::size_t n = f.target.generator_count();
  Lattice reach(n, stack(f.matrix, f.target.relations(), false));
  std::vector<Integer> e(n);
  for (std::size_t j = 0; j < n; ++j) {
    e.assign(n, 0);
    e[j] = 1;
    if (!reach.contains(e)) return false;
  }
  return true;
}

Kernel kernel(const AbHom& f) {
  check_shape(f);
  const std::size_t gs = f.source.generator_count();
  // Preimage lattice {x : x F in L_target}: project the left kernel of [F; -R].
  IntMatrix pre(0, gs);
  if (gs > 0) {
    IntMatrix lk = left_kernel(stack(f.matrix, f.target.relations(), true));
    for (std::size_t r = 0; r < lk.rows(); ++r) {
      std::vector<Integer> x(lk.row(r).begin(), lk.row(r).begin() + gs);
      pre.append_row(x);
    }
    pre = row_basis(pre);
  }
  // Present pre / L_source on the basis rows of pre.
  const std::size_t s = pre.rows();
  IntMatrix rel(0, s);
  if (s > 0) {
    IntMatrix lk = left_kernel(stack(pre, f.source.relations(), true));
    for (std::size_t r = 0; r < lk.rows(); ++r) {
      std::vector<Integer> c(lk.row(r).begin(), lk.row(r).begin() + s);
      rel.append_row(c);
    }
  }
  return Kernel{AbPresentation(s, rel), pre};
}

bool is_injective(const AbHom& f) { return kernel(f).group.is_trivial(); }

bool is_isomorphism(const AbHom& f) {
  return is_well_defined(f) && is_surjective(f) && is_injective(f);
}

AbHom compose(const AbHom& g, const AbHom& f) {
  check_shape(f);
  check_shape(g);
  if (f.target.generator_count() != g.source.generator_count())
    throw std::invalid_argument("compose: incompatible AbHoms");
  return AbHom{f.source, g.target, f.matrix * g.matrix};
}

IntMatrix image_generators(const AbHom& f) {
  check_shape(f);
  return f.matrix;
}

bool subgroup_contains(const AbPresentation& ambient, const IntMatrix& big,
                       const IntMatrix& small) {
  const std::size_t n = ambient.generator_count();
  IntMatrix span = big.rows() == 0 ? IntMatrix(0, n) : big;
  Lattice l(n, stack(span, ambient.relations(), false));
  for (std::size_t r = 0; r < small.rows(); ++r)
    if (!l.contains(small.row(r))) return false;
  return true;
}

bool maps_agree(const AbHom& f, const AbHom& g) {
  check_shape(f);
  check_shape(g);
  if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols())
    throw std::invalid_argument("maps_agree: shape mismatch");
  for (std::size_t r = 0; r < f.matrix.rows(); ++r)
    if (!f.target.equal_elements(f.matrix.row(r), g.matrix.row(r))) return false;
  return true;
}

AbPresentation direct_sum(const std::vector<AbPresentation>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.generator_count();
  IntMatrix rel(0, total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    const IntMatrix& r = p.relations();
    for (std::size_t i = 0; i < r.rows(); ++i) {
      std::vector<Integer> row(total);
      for (std::size_t j = 0; j < r.cols(); ++j) row[offset + j] = r(i, j);
      rel.append_row(row);
    }
    offset += p.generator_count();
  }
  return AbPresentation(total, rel);
}

}  // namespace kring
