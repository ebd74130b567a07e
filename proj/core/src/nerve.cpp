#include "kring/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kring {

namespace {

std::string render(const NerveTuple& x, const FiniteRingoid& base) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x[i], base);
  return s + ")";
}

std::size_t total_length(const NerveTuple& x) {
  std::size_t t = 0;
  for (const auto& s : x) t += s.size();
  return t;
}

std::size_t letter(std::int64_t l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }

// Cyclic reduction after free reduction.
Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word substitute(const Word& w, std::size_t g, const Word& replacement) {
  Word out;
  const Word inverse = invert(replacement);
  for (auto l : w) {
    if (letter(l) != g) {
      out.push_back(l);
      continue;
    }
    const Word& r = l > 0 ? replacement : inverse;
    out.insert(out.end(), r.begin(), r.end());
  }
  return free_reduce(out);
}

}  // namespace

NerveLevel nerve_level(const AdditiveView& view, std::size_t n, std::size_t bound,
                       std::uint64_t cap) {
  NerveLevel out;
  out.level = n;
  out.bound = bound;
  const std::size_t k = view.base().object_count();
  std::vector<std::vector<ObjSum>> by_budget(bound + 1);
  for (std::size_t b = 0; b <= bound; ++b) by_budget[b] = sums_up_to(k, b);
  NerveTuple current;
  std::function<void(std::size_t)> extend = [&](std::size_t budget) {
    if (out.partial) return;
    if (current.size() == n) {
      if (out.objects.size() == cap) {
        out.partial = true;
        return;
      }
      out.objects.push_back(current);
      return;
    }
    for (const ObjSum& s : by_budget[budget]) {
      current.push_back(s);
      extend(budget - s.size());
      current.pop_back();
      if (out.partial) return;
    }
  };
  extend(bound);
  return out;
}

NerveTuple face(const NerveTuple& x, std::size_t i) {
  const std::size_t n = x.size();
  if (n == 0 || i > n) throw std::out_of_range("face index out of range");
  NerveTuple out;
  if (i == 0) return NerveTuple(x.begin() + 1, x.end());
  if (i == n) return NerveTuple(x.begin(), x.end() - 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i - 1) {
      out.push_back(concat(x[k], x[k + 1]));
      ++k;
    } else {
      out.push_back(x[k]);
    }
  }
  return out;
}

NerveTuple degeneracy(const NerveTuple& x, std::size_t i) {
  if (i > x.size()) throw std::out_of_range("degeneracy index out of range");
  NerveTuple out = x;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), ObjSum{});
  return out;
}

MatMorphism block_sum(const AdditiveView& view, const MatMorphism& f, const MatMorphism& g) {
  MatMorphism out = view.zero(concat(f.source, g.source), concat(f.target, g.target));
  for (std::size_t i = 0; i < f.target.size(); ++i)
    for (std::size_t j = 0; j < f.source.size(); ++j) out.at(i, j) = f.at(i, j);
  for (std::size_t i = 0; i < g.target.size(); ++i)
    for (std::size_t j = 0; j < g.source.size(); ++j)
      out.at(f.target.size() + i, f.source.size() + j) = g.at(i, j);
  return out;
}

NerveMorphism face(const AdditiveView& view, const NerveMorphism& x, std::size_t i) {
  const std::size_t n = x.size();
  if (n == 0 || i > n) throw std::out_of_range("face index out of range");
  if (i == 0) return NerveMorphism(x.begin() + 1, x.end());
  if (i == n) return NerveMorphism(x.begin(), x.end() - 1);
  NerveMorphism out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i - 1) {
      out.push_back(block_sum(view, x[k], x[k + 1]));
      ++k;
    } else {
      out.push_back(x[k]);
    }
  }
  return out;
}

NerveMorphism degeneracy(const NerveMorphism& x, std::size_t i) {
  if (i > x.size()) throw std::out_of_range("degeneracy index out of range");
  NerveMorphism out = x;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), MatMorphism{});
  return out;
}

SimplicialReport check_simplicial_identities(const AdditiveView& view, std::size_t n_max,
                                             std::size_t bound, std::uint64_t seed) {
  SimplicialReport rep;
  std::mt19937_64 rng(seed);
  auto d = [](const auto& x, std::size_t i) { return face(x, i); };
  auto dm = [&](const NerveMorphism& x, std::size_t i) { return face(view, x, i); };
  auto s = [](const auto& x, std::size_t i) { return degeneracy(x, i); };

  for (std::size_t n = 0; n <= n_max; ++n) {
    NerveLevel level = nerve_level(view, n, bound);
    rep.partial = rep.partial || level.partial;
    for (const NerveTuple& x : level.objects) {
      NerveMorphism f;
      for (const ObjSum& a : x) {
        FinAbGroup h = view.hom(a, a);
        f.push_back(view.from_elem(a, a, h.element_at(rng() % h.order())));
      }
      auto expect = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) rep.failures.push_back(what + " fails at " + render(x, view.base()));
      };
      auto id = [&](const std::string& name, auto lhs, auto rhs) {
        expect(lhs(x) == rhs(x), name);
        expect(lhs(f) == rhs(f), name + " on morphisms");
      };
      const std::string sfx = " at level " + std::to_string(n);
      for (std::size_t j = 0; j <= n && n >= 2; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          std::string name = "d" + std::to_string(i) + " d" + std::to_string(j) + sfx;
          expect(d(d(x, j), i) == d(d(x, i), j - 1), name);
          expect(dm(dm(f, j), i) == dm(dm(f, i), j - 1), name + " on morphisms");
        }
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
          std::string name = "s" + std::to_string(i) + " s" + std::to_string(j) + sfx;
          id(name, [&](const auto& y) { return s(s(y, j), i); },
             [&](const auto& y) { return s(s(y, i), j + 1); });
        }
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          std::string name = "d" + std::to_string(i) + " s" + std::to_string(j) + sfx;
          if (i == j || i == j + 1) {
            expect(d(s(x, j), i) == x, name);
            expect(dm(s(f, j), i) == f, name + " on morphisms");
          } else if (i < j) {
            expect(d(s(x, j), i) == s(d(x, i), j - 1), name);
            expect(dm(s(f, j), i) == s(dm(f, i), j - 1), name + " on morphisms");
          } else {
            expect(d(s(x, j), i) == s(d(x, i - 1), j), name);
            expect(dm(s(f, j), i) == s(dm(f, i - 1), j), name + " on morphisms");
          }
        }
      // Faces land in the adjacent level within the bound.
      for (std::size_t i = 0; i <= n && n >= 1; ++i) {
        NerveTuple y = d(x, i);
        expect(y.size() + 1 == n && total_length(y) <= bound, "d" + std::to_string(i) + " level" + sfx);
      }
    }
  }
  return rep;
}

Word free_reduce(const Word& w) {
  Word out;
  for (auto l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

AbPresentation GroupPresentation::abelianization() const {
  IntMatrix rows(0, generators.size());
  for (const Word& w : relators) {
    std::vector<Integer> v(generators.size(), 0);
    for (auto l : w) v.at(letter(l)) += l > 0 ? 1 : -1;
    rows.append_row(v);
  }
  return AbPresentation(generators.size(), rows);
}

std::string GroupPresentation::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    os << (r ? ", " : " ");
    for (auto l : relators[r]) os << generators[letter(l)] << (l < 0 ? "^-1" : "");
  }
  os << ">";
  return os.str();
}

Simplification simplify(const GroupPresentation& p) {
  const std::size_t g = p.generators.size();
  std::vector<bool> alive(g, true);
  std::vector<Word> images(g);
  for (std::size_t i = 0; i < g; ++i) images[i] = {static_cast<std::int64_t>(i + 1)};
  std::vector<Word> rels;
  for (const Word& w : p.relators) rels.push_back(w);

  for (;;) {
    std::vector<Word> clean;
    std::set<Word> seen;
    for (const Word& w : rels) {
      Word c = cyclic_reduce(w);
      if (!c.empty() && seen.insert(c).second) clean.push_back(std::move(c));
    }
    rels = std::move(clean);

    // Shortest relator with a generator occurring once; the largest such
    // generator goes.
    std::optional<std::pair<std::size_t, std::size_t>> pick;  // relator, position
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (pick && rels[r].size() >= rels[pick->first].size()) continue;
      std::map<std::size_t, std::size_t> count;
      for (auto l : rels[r]) ++count[letter(l)];
      std::optional<std::size_t> best;
      for (const auto& [gen, c] : count)
        if (c == 1) best = gen;
      if (!best) continue;
      for (std::size_t k = 0; k < rels[r].size(); ++k)
        if (letter(rels[r][k]) == *best) pick = std::pair{r, k};
    }
    if (!pick) break;
    const Word& w = rels[pick->first];
    Word rotated(w.begin() + static_cast<std::ptrdiff_t>(pick->second), w.end());
    rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pick->second));
    const std::size_t gen = letter(rotated[0]);
    Word rest(rotated.begin() + 1, rotated.end());
    // gen^e rest = 1.
    Word value = rotated[0] > 0 ? invert(rest) : rest;
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pick->first));
    for (Word& r : rels) r = substitute(r, gen, value);
    for (Word& im : images) im = substitute(im, gen, value);
    alive[gen] = false;
  }

  Simplification out;
  std::vector<std::int64_t> renumber(g, 0);
  for (std::size_t i = 0; i < g; ++i)
    if (alive[i]) {
      out.kept.push_back(i);
      out.result.generators.push_back(p.generators[i]);
      renumber[i] = static_cast<std::int64_t>(out.kept.size());
    }
  auto translate = [&](const Word& w) {
    Word t;
    for (auto l : w) t.push_back(l > 0 ? renumber[letter(l)] : -renumber[letter(l)]);
    return t;
  };
  for (const Word& r : rels) out.result.relators.push_back(translate(r));
  for (const Word& im : images) out.images.push_back(translate(im));
  return out;
}

NerveKZero k0_via_nerve(RingoidPtr r, std::size_t bound, const Limits& limits) {
  if (!r->unital()) throw StructuralError("k0_via_nerve: ringoid has no identities");
  AdditiveView view(r);
  NerveKZero out;
  out.sums = sums_up_to(r->object_count(), bound);
  std::map<ObjSum, std::int64_t> gen;
  for (std::size_t i = 0; i < out.sums.size(); ++i) {
    gen[out.sums[i]] = static_cast<std::int64_t>(i + 1);
    out.presentation.generators.push_back("[" + to_string(out.sums[i], *r) + "]");
  }
  // 2-cells from N_2: (a)(b) = (a + b).
  for (const ObjSum& a : out.sums)
    for (const ObjSum& b : out.sums) {
      if (a.size() + b.size() > bound) continue;
      out.presentation.relators.push_back({gen.at(a), gen.at(b), -gen.at(concat(a, b))});
    }
  // 2-cells from isomorphisms in wN_1, each sum joined to its class
  // representative.
  IsoClassTable table = iso_class_table(view, bound, limits);
  out.decided = table.decided();
  for (const ObjSum& s : out.sums) {
    const ObjSum& rep = table.representatives[table.class_of.at(s)];
    if (rep != s) out.presentation.relators.push_back({gen.at(s), -gen.at(rep)});
  }
  out.simplified = simplify(out.presentation);
  out.group = out.simplified.result.abelianization();
  return out;
}

OracleReport oracle_compare(RingoidPtr r, std::size_t bound, const Limits& limits) {
  OracleReport out;
  out.bounded = k0_bounded(r, bound, limits);
  out.nerve = k0_via_nerve(r, bound, limits);
  const std::size_t n = r->object_count();
  IntMatrix rows(0, n);
  for (std::size_t k : out.nerve.simplified.kept) rows.append_row(object_vector(out.nerve.sums[k], n));
  out.comparison = AbHom{out.nerve.group, out.bounded.group, rows};
  out.match = out.nerve.group == out.bounded.group && is_well_defined(out.comparison) &&
              is_isomorphism(out.comparison);
  return out;
}

}  // namespace kring
