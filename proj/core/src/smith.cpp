#include "kring/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace kring {
namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Core elimination shared by the full and column-only variants.
// When u is null the row transform is not tracked.
std::size_t smith_in_place(IntMatrix& a, IntMatrix* u, IntMatrix& v) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t limit = std::min(rows, cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    if (u) u->add_row_multiple(dst, src, f);
  };
  auto swap_r = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  };

  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Integer x = abs_value(a(i, j));
        if (!best || x < best_abs) {
          best = {i, j};
          best_abs = x;
        }
      }
    if (!best) break;
    swap_r(t, best->first);
    swap_c(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is now strictly smaller than the pivot; move it in.
        std::size_t bi = t, bj = t;
        Integer babs = abs_value(a(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs_value(a(i, t)) < babs) {
            babs = abs_value(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs_value(a(t, j)) < babs) {
            babs = abs_value(a(t, j));
            bi = t;
            bj = j;
          }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      row_op(t, *offender, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
  return t;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s;
  s.d = m;
  s.u = IntMatrix::identity(m.rows());
  s.v = IntMatrix::identity(m.cols());
  s.rank = smith_in_place(s.d, &s.u, s.v);
#ifdef KRING_CHECK_INVARIANTS
  if (s.u * m * s.v != s.d) throw std::logic_error("smith_normal_form: U*M*V != D");
#endif
  return s;
}

SmithColumnForm smith_column_form(const IntMatrix& m) {
  IntMatrix a = m;
  SmithColumnForm out;
  out.v = IntMatrix::identity(m.cols());
  std::size_t rank = smith_in_place(a, nullptr, out.v);
  for (std::size_t i = 0; i < rank; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

IntMatrix row_basis(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t p = 0;
  for (std::size_t c = 0; c < cols && p < rows; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      Integer best_abs;
      for (std::size_t i = p; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer x = abs_value(a(i, c));
        if (!best || x < best_abs) {
          best = i;
          best_abs = x;
        }
      }
      if (!best) break;
      a.swap_rows(p, *best);
      bool clean = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, p, -floor_div(a(i, c), a(p, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(p, c) == 0) continue;
    if (a(p, c) < 0) a.negate_row(p);
    for (std::size_t k = 0; k < p; ++k)
      if (a(k, c) != 0) a.add_row_multiple(k, p, -floor_div(a(k, c), a(p, c)));
    ++p;
  }
  IntMatrix out(0, cols);
  for (std::size_t i = 0; i < p; ++i) out.append_row(a.row(i));
  return out;
}

IntMatrix left_kernel(const IntMatrix& m) {
  // z * m == 0  <=>  (z * U^-1) * D == 0, so the kernel is spanned by the rows
  // of U beyond the rank.
  SmithDecomposition s = smith_normal_form(m);
  IntMatrix out(0, m.rows());
  for (std::size_t i = s.rank; i < m.rows(); ++i) out.append_row(s.u.row(i));
  return out;
}

Lattice::Lattice(std::size_t dimension, const IntMatrix& spanning_rows)
    : dimension_(dimension) {
  if (spanning_rows.rows() != 0 && spanning_rows.cols() != dimension)
    throw std::invalid_argument("Lattice: dimension mismatch");
  basis_ = spanning_rows.rows() == 0 ? IntMatrix(0, dimension) : row_basis(spanning_rows);
  SmithColumnForm f = smith_column_form(basis_);
  v_ = std::move(f.v);
  diagonal_ = std::move(f.diagonal);
}

std::vector<Integer> Lattice::smith_coordinates(std::span<const Integer> v) const {
  return v * v_;
}

bool Lattice::contains(std::span<const Integer> v) const {
  if (v.size() != dimension_) throw std::invalid_argument("Lattice: vector length mismatch");
  std::vector<Integer> w = smith_coordinates(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < diagonal_.size()) {
      if (w[i] % diagonal_[i] != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace kring

namespace kring {

IntMatrix unimodular_inverse(const IntMatrix& v) {
  const std::size_t n = v.rows();
  if (v.cols() != n) throw std::invalid_argument("unimodular_inverse: not square");
  IntMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = v(i, j);
    aug(i, n + i) = 1;
  }
  IntMatrix h = row_basis(aug);
  if (h.rows() != n) throw std::invalid_argument("unimodular_inverse: singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (h(i, j) != (i == j ? 1 : 0))
        throw std::invalid_argument("unimodular_inverse: not unimodular");
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = h(i, n + j);
  }
  return inv;
}

LeftSolver::LeftSolver(const IntMatrix& m) : smith_(smith_normal_form(m)) {}

std::optional<std::vector<Integer>> LeftSolver::solve(std::span<const Integer> v) const {
  // x M = v  <=>  y D = v V with y = x U^-1, then x = y U.
  if (v.size() != smith_.v.rows()) throw std::invalid_argument("LeftSolver: length mismatch");
  std::vector<Integer> w = v * smith_.v;
  std::vector<Integer> y(smith_.u.rows());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < smith_.rank) {
      const Integer& d = smith_.d(i, i);
      if (w[i] % d != 0) return std::nullopt;
      y[i] = w[i] / d;
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return std::vector<Integer>(y * smith_.u);
}

}  // namespace kring
