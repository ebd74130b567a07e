#pragma once

// Small independent reference computations used as test oracles. Nothing here
// calls into the library's linear algebra.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "kring/int_matrix.hpp"

namespace oracle {

using kring::Integer;
using kring::IntMatrix;

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Bareiss fraction-free elimination.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary matrices: unimodular by construction.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng() % 2) u(0, 0) = -1;
    return u;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> f(-3, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    u.add_row_multiple(i, j, f(rng));
  }
  return u;
}

// Square matrices over Z/p as flat row-major int vectors.
using ModMatrix = std::vector<int>;

inline ModMatrix mod_multiply(const ModMatrix& x, const ModMatrix& y, int n, int p) {
  ModMatrix z(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += x[i * n + k] * y[k * n + j];
      z[i * n + j] = s % p;
    }
  return z;
}

inline int mod_determinant(const ModMatrix& x, int n, int p) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = x[i * n + j];
  Integer d = determinant(m) % p;
  if (d < 0) d += p;
  return static_cast<int>(d);
}

// Every matrix over Z/p with a unit determinant (p prime).
inline std::vector<ModMatrix> general_linear(int n, int p) {
  std::vector<ModMatrix> out;
  std::size_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    ModMatrix m(n * n);
    std::size_t c = code;
    for (int i = n * n - 1; i >= 0; --i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (mod_determinant(m, n, p) != 0) out.push_back(m);
  }
  return out;
}

// The subgroup generated by all commutators, by closure.
inline std::set<ModMatrix> commutator_subgroup(const std::vector<ModMatrix>& g, int n, int p) {
  auto inverse = [&](const ModMatrix& x) {
    for (const auto& y : g) {
      auto z = mod_multiply(x, y, n, p);
      bool id = true;
      for (int i = 0; i < n && id; ++i)
        for (int j = 0; j < n && id; ++j) id = z[i * n + j] == (i == j ? 1 : 0);
      if (id) return y;
    }
    return ModMatrix{};
  };
  std::vector<ModMatrix> inv;
  for (const auto& x : g) inv.push_back(inverse(x));
  std::set<ModMatrix> comms;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      comms.insert(mod_multiply(mod_multiply(g[a], g[b], n, p),
                                mod_multiply(inv[a], inv[b], n, p), n, p));
  std::set<ModMatrix> closure = comms;
  std::vector<ModMatrix> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<ModMatrix> next;
    for (const auto& x : frontier)
      for (const auto& c : comms) {
        auto y = mod_multiply(x, c, n, p);
        if (closure.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return closure;
}

inline std::size_t commutator_subgroup_order(const std::vector<ModMatrix>& g, int n, int p) {
  return commutator_subgroup(g, n, p).size();
}

}  // namespace oracle
