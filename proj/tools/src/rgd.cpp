#include "kring_cli/rgd.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace kring::rgd {

ParseError::ParseError(const std::string& kind, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind + ": " +
                         what),
      line_(line),
      column_(column),
      message_(what) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  std::size_t end_column;
};

// Whitespace-separated words; a trailing ':' becomes its own token.
std::vector<Line> lex(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}, raw.size() + 1};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      std::string word = raw.substr(i, j - i);
      if (word.size() > 1 && word.back() == ':') {
        line.tokens.push_back({word.substr(0, word.size() - 1), i + 1});
        line.tokens.push_back({":", j});
      } else {
        line.tokens.push_back({word, i + 1});
      }
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

// Cursor over one line's tokens.
class Reader {
 public:
  explicit Reader(const Line& line) : line_(line) {}
  std::size_t line() const { return line_.number; }
  bool done() const { return pos_ == line_.tokens.size(); }
  std::size_t column() const {
    return done() ? line_.end_column : line_.tokens[pos_].column;
  }
  const Token& next(const std::string& what) {
    if (done()) throw SyntaxError(line(), column(), "expected " + what);
    return line_.tokens[pos_++];
  }
  void expect(const std::string& word) {
    const std::size_t col = column();
    if (done() || line_.tokens[pos_].text != word)
      throw SyntaxError(line(), col, "expected '" + word + "'");
    ++pos_;
  }
  std::int64_t integer(const std::string& what) {
    const Token& t = next(what);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw SyntaxError(line(), t.column, "expected " + what + ", found '" + t.text + "'");
    return v;
  }
  std::vector<std::pair<std::int64_t, std::size_t>> rest_integers(const std::string& what) {
    std::vector<std::pair<std::int64_t, std::size_t>> out;
    while (!done()) {
      const std::size_t col = column();
      out.emplace_back(integer(what), col);
    }
    return out;
  }
  void finish() {
    if (!done()) throw SyntaxError(line(), column(), "unexpected '" + line_.tokens[pos_].text + "'");
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

using Coords = std::vector<std::pair<std::int64_t, std::size_t>>;

struct At {
  std::size_t line, column;
};

Elem to_elem(const Coords& c, const FinAbGroup& g, At at, const std::string& what) {
  if (c.size() != g.generator_count())
    throw SemanticError(at.line, at.column,
                        what + ": expected " + std::to_string(g.generator_count()) +
                            " coordinates, found " + std::to_string(c.size()));
  Elem e;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].first < 0 || c[i].first >= g.modulus(i))
      throw SemanticError(at.line, c[i].second,
                          what + ": coordinate " + std::to_string(c[i].first) +
                              " out of range for Z/" + std::to_string(g.modulus(i)));
    e.push_back(c[i].first);
  }
  return e;
}

std::size_t lookup(const std::vector<std::string>& names, const Token& t, std::size_t line,
                   const std::string& kind) {
  auto it = std::find(names.begin(), names.end(), t.text);
  if (it == names.end()) throw SemanticError(line, t.column, "unknown " + kind + " '" + t.text + "'");
  return static_cast<std::size_t>(it - names.begin());
}

void add_name(std::vector<std::string>& names, const Token& t, std::size_t line,
              const std::string& kind) {
  if (std::find(names.begin(), names.end(), t.text) != names.end())
    throw SemanticError(line, t.column, "duplicate " + kind + " '" + t.text + "'");
  names.push_back(t.text);
}

std::size_t index_in(std::int64_t v, std::size_t count, std::size_t line, std::size_t column,
                     const std::string& what) {
  if (v < 0 || static_cast<std::size_t>(v) >= count)
    throw SemanticError(line, column, what + " " + std::to_string(v) + " out of range (" +
                                          std::to_string(count) + " generators)");
  return static_cast<std::size_t>(v);
}

struct RingoidSection {
  At header;
  std::string name;
  std::vector<std::string> objects;
  struct HomLine { std::size_t a, b; std::vector<std::int64_t> moduli; At at; };
  struct ConstLine { std::size_t a, b, c; std::int64_t p, q; At pa, qa; Coords coords; At at; };
  struct IdLine { std::size_t a; Coords coords; At at; };
  struct ActLine { std::size_t a, b; std::int64_t r, g; At ra, ga; Coords coords; At at; };
  std::vector<HomLine> homs;
  std::vector<ConstLine> constants;
  std::vector<IdLine> identities;
  std::optional<std::pair<std::string, At>> scalar;
  std::vector<ActLine> actions;
};

struct GroupoidSection {
  At header;
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> morphism_names;
  std::vector<GroupoidMorphism> morphisms;
  struct Compose { std::size_t f, g, h; At at; };
  struct Inverse { std::size_t f, g; At at; };
  std::vector<Compose> composes;
  std::vector<Inverse> inverses;
};

struct GSetSection {
  At header;
  std::string name;
  std::string group;
  const FinGroupoid* groupoid = nullptr;
  std::vector<std::string> points;
  struct Act { std::size_t x, g, y; At at; };
  std::vector<Act> acts;
};

struct HomSection {
  At header;
  std::string name;
  RingoidPtr source, target;
  std::vector<std::optional<std::size_t>> object_map;
  struct Image { std::size_t a, b; std::int64_t g; At ga; Coords coords; At at; };
  std::vector<Image> images;
};

struct IdealSection {
  At header;
  std::string name;
  RingoidPtr parent;
  struct Gen { std::size_t a, b; Coords coords; At at; };
  std::vector<Gen> gens;
};

class Parser {
 public:
  Document run(const std::string& text) {
    for (const Line& line : lex(text)) handle(line);
    close();
    return std::move(doc_);
  }

 private:
  enum class Kind { kNone, kRingoid, kGroupoid, kGSet, kHom, kIdeal };

  void handle(const Line& line) {
    Reader r(line);
    const Token& kw = r.next("keyword");
    const std::string& k = kw.text;
    if (k == "ringoid" || k == "groupoid" || k == "gset" || k == "homomorphism" || k == "ideal") {
      close();
      open(k, r);
      return;
    }
    switch (kind_) {
      case Kind::kRingoid: ringoid_line(k, kw, r); break;
      case Kind::kGroupoid: groupoid_line(k, kw, r); break;
      case Kind::kGSet: gset_line(k, kw, r); break;
      case Kind::kHom: hom_line(k, kw, r); break;
      case Kind::kIdeal: ideal_line(k, kw, r); break;
      case Kind::kNone:
        throw SyntaxError(r.line(), kw.column, "'" + k + "' outside of a section");
    }
  }

  void check_fresh(const Token& t, std::size_t line) {
    if (names_.count(t.text))
      throw SemanticError(line, t.column, "duplicate section name '" + t.text + "'");
    names_.insert(t.text);
  }

  void open(const std::string& k, Reader& r) {
    At header{r.line(), 1};
    if (k == "ringoid") {
      const Token& name = r.next("ringoid name");
      r.finish();
      check_fresh(name, r.line());
      ring_ = RingoidSection{};
      ring_.header = header;
      ring_.name = name.text;
      kind_ = Kind::kRingoid;
    } else if (k == "groupoid") {
      const Token& name = r.next("groupoid name");
      r.finish();
      check_fresh(name, r.line());
      grp_ = GroupoidSection{};
      grp_.header = header;
      grp_.name = name.text;
      kind_ = Kind::kGroupoid;
    } else if (k == "gset") {
      const Token& name = r.next("gset name");
      r.expect("over");
      const Token& group = r.next("group name");
      r.finish();
      check_fresh(name, r.line());
      gset_ = GSetSection{};
      gset_.header = header;
      gset_.name = name.text;
      gset_.group = group.text;
      gset_.groupoid = doc_.groupoid(group.text);
      if (!gset_.groupoid)
        throw SemanticError(r.line(), group.column, "unknown groupoid '" + group.text + "'");
      if (gset_.groupoid->object_count() != 1)
        throw SemanticError(r.line(), group.column, "'" + group.text + "' is not a group (one object)");
      kind_ = Kind::kGSet;
    } else if (k == "homomorphism") {
      const Token& name = r.next("homomorphism name");
      const Token& src = r.next("source ringoid");
      const Token& tgt = r.next("target ringoid");
      r.finish();
      check_fresh(name, r.line());
      hom_ = HomSection{};
      hom_.header = header;
      hom_.name = name.text;
      hom_.source = ringoid_ref(src, r.line());
      hom_.target = ringoid_ref(tgt, r.line());
      hom_.object_map.assign(hom_.source->object_count(), std::nullopt);
      kind_ = Kind::kHom;
    } else {
      const Token& name = r.next("ideal name");
      r.expect("in");
      const Token& parent = r.next("ringoid name");
      r.finish();
      check_fresh(name, r.line());
      ideal_ = IdealSection{};
      ideal_.header = header;
      ideal_.name = name.text;
      ideal_.parent = ringoid_ref(parent, r.line());
      kind_ = Kind::kIdeal;
    }
  }

  RingoidPtr ringoid_ref(const Token& t, std::size_t line) {
    RingoidPtr p = doc_.ringoid(t.text);
    if (!p) throw SemanticError(line, t.column, "unknown ringoid '" + t.text + "'");
    return p;
  }

  // --- ringoid ---------------------------------------------------------

  std::size_t object(const Token& t, std::size_t line) {
    return lookup(ring_.objects, t, line, "object");
  }

  void ringoid_line(const std::string& k, const Token& kw, Reader& r) {
    const std::size_t ln = r.line();
    if (k == "object") {
      const Token& id = r.next("object id");
      r.finish();
      add_name(ring_.objects, id, ln, "object");
    } else if (k == "hom") {
      const std::size_t a = object(r.next("object"), ln);
      const std::size_t b = object(r.next("object"), ln);
      r.expect("cyclic");
      RingoidSection::HomLine h{a, b, {}, {ln, kw.column}};
      for (auto [d, col] : r.rest_integers("modulus")) {
        if (d < 1) throw SemanticError(ln, col, "modulus must be >= 1");
        if (d > kMaxModulus) throw SemanticError(ln, col, "modulus too large");
        h.moduli.push_back(d);
      }
      for (const auto& old : ring_.homs)
        if (old.a == a && old.b == b) throw SemanticError(ln, kw.column, "Hom declared twice");
      ring_.homs.push_back(std::move(h));
    } else if (k == "compose") {
      const std::size_t a = object(r.next("object"), ln);
      const std::size_t b = object(r.next("object"), ln);
      const std::size_t c = object(r.next("object"), ln);
      r.expect(":");
      At pa{ln, r.column()};
      const std::int64_t p = r.integer("generator index");
      At qa{ln, r.column()};
      const std::int64_t q = r.integer("generator index");
      r.expect("->");
      At at{ln, r.column()};
      ring_.constants.push_back({a, b, c, p, q, pa, qa, r.rest_integers("coordinate"), at});
    } else if (k == "identity") {
      const std::size_t a = object(r.next("object"), ln);
      r.expect(":");
      At at{ln, r.column()};
      ring_.identities.push_back({a, r.rest_integers("coordinate"), at});
    } else if (k == "scalar") {
      const Token& name = r.next("scalar ring name");
      r.finish();
      if (ring_.scalar) throw SemanticError(ln, kw.column, "scalar ring declared twice");
      ring_.scalar = {name.text, {ln, name.column}};
    } else if (k == "action") {
      const std::size_t a = object(r.next("object"), ln);
      std::size_t b = a;
      const Token& t = r.next("':' or object");
      if (t.text != ":") {
        b = object(t, ln);
        r.expect(":");
      }
      At ra{ln, r.column()};
      const std::int64_t s = r.integer("scalar generator");
      At ga{ln, r.column()};
      const std::int64_t g = r.integer("generator index");
      r.expect("->");
      At at{ln, r.column()};
      ring_.actions.push_back({a, b, s, g, ra, ga, r.rest_integers("coordinate"), at});
    } else {
      throw SyntaxError(ln, kw.column, "unknown ringoid keyword '" + k + "'");
    }
  }

  void close_ringoid() {
    RingoidSection& s = ring_;
    FiniteRingoid out(s.name, s.objects);
    for (const auto& h : s.homs) out.set_hom(h.a, h.b, FinAbGroup(h.moduli));
    for (const auto& c : s.constants) {
      const std::size_t p = index_in(c.p, out.hom(c.a, c.b).generator_count(), c.pa.line, c.pa.column,
                                     "generator");
      const std::size_t q = index_in(c.q, out.hom(c.b, c.c).generator_count(), c.qa.line, c.qa.column,
                                     "generator");
      out.set_constant(c.a, c.b, c.c, p, q, to_elem(c.coords, out.hom(c.a, c.c), c.at, "compose"));
    }
    if (!s.identities.empty()) {
      std::vector<std::optional<Elem>> ids(s.objects.size());
      for (const auto& i : s.identities) {
        if (ids[i.a]) throw SemanticError(i.at.line, i.at.column, "identity declared twice");
        ids[i.a] = to_elem(i.coords, out.hom(i.a, i.a), i.at, "identity");
      }
      std::vector<Elem> all;
      for (std::size_t a = 0; a < ids.size(); ++a) {
        if (!ids[a])
          throw SemanticError(s.header.line, s.header.column,
                              "identity missing for object '" + s.objects[a] + "'");
        all.push_back(*ids[a]);
      }
      out.set_identities(std::move(all));
    }
    if (s.scalar) {
      RingoidPtr ring = doc_.ringoid(s.scalar->first);
      if (!ring)
        throw SemanticError(s.scalar->second.line, s.scalar->second.column,
                            "unknown ringoid '" + s.scalar->first + "'");
      if (ring->object_count() != 1 || !ring->unital())
        throw SemanticError(s.scalar->second.line, s.scalar->second.column,
                            "scalar ring '" + s.scalar->first + "' must have one object and an identity");
      out.set_scalar_ring(ring);
      const FinAbGroup& rg = ring->hom(0, 0);
      for (const auto& a : s.actions) {
        const std::size_t rr = index_in(a.r, rg.generator_count(), a.ra.line, a.ra.column, "scalar generator");
        const std::size_t g = index_in(a.g, out.hom(a.a, a.b).generator_count(), a.ga.line, a.ga.column,
                                       "generator");
        out.set_action(a.a, a.b, rr, g, to_elem(a.coords, out.hom(a.a, a.b), a.at, "action"));
      }
    } else if (!s.actions.empty()) {
      throw SemanticError(s.actions.front().at.line, 1, "action without a scalar ring");
    }
    doc_.ringoids.push_back(std::make_shared<const FiniteRingoid>(std::move(out)));
  }

  // --- groupoid --------------------------------------------------------

  std::size_t morphism(const Token& t, std::size_t line) {
    return lookup(grp_.morphism_names, t, line, "morphism");
  }

  void groupoid_line(const std::string& k, const Token& kw, Reader& r) {
    const std::size_t ln = r.line();
    if (k == "object") {
      const Token& id = r.next("object id");
      r.finish();
      add_name(grp_.objects, id, ln, "object");
    } else if (k == "morphism") {
      const std::size_t a = lookup(grp_.objects, r.next("object"), ln, "object");
      const std::size_t b = lookup(grp_.objects, r.next("object"), ln, "object");
      const Token& id = r.next("morphism id");
      r.finish();
      add_name(grp_.morphism_names, id, ln, "morphism");
      grp_.morphisms.push_back({a, b, id.text});
    } else if (k == "compose") {
      const std::size_t f = morphism(r.next("morphism"), ln);
      const std::size_t g = morphism(r.next("morphism"), ln);
      r.expect("->");
      const std::size_t h = morphism(r.next("morphism"), ln);
      r.finish();
      grp_.composes.push_back({f, g, h, {ln, kw.column}});
    } else if (k == "inverse") {
      const std::size_t f = morphism(r.next("morphism"), ln);
      const std::size_t g = morphism(r.next("morphism"), ln);
      r.finish();
      grp_.inverses.push_back({f, g, {ln, kw.column}});
    } else {
      throw SyntaxError(ln, kw.column, "unknown groupoid keyword '" + k + "'");
    }
  }

  void close_groupoid() {
    FinGroupoid g(grp_.name, grp_.objects, grp_.morphisms);
    for (const auto& c : grp_.composes) {
      try {
        g.set_then(c.f, c.g, c.h);
      } catch (const std::invalid_argument& e) {
        throw SemanticError(c.at.line, c.at.column, e.what());
      }
    }
    for (const auto& i : grp_.inverses) {
      try {
        g.set_inverse(i.f, i.g);
      } catch (const std::invalid_argument& e) {
        throw SemanticError(i.at.line, i.at.column, e.what());
      }
    }
    g.infer_units();
    doc_.groupoids.push_back(std::move(g));
  }

  // --- gset ------------------------------------------------------------

  void gset_line(const std::string& k, const Token& kw, Reader& r) {
    const std::size_t ln = r.line();
    if (k == "point") {
      const Token& id = r.next("point id");
      r.finish();
      add_name(gset_.points, id, ln, "point");
    } else if (k == "act") {
      std::vector<std::string> mors;
      for (std::size_t f = 0; f < gset_.groupoid->morphism_count(); ++f)
        mors.push_back(gset_.groupoid->morphism(f).name);
      const std::size_t x = lookup(gset_.points, r.next("point"), ln, "point");
      const std::size_t g = lookup(mors, r.next("group element"), ln, "group element");
      r.expect("->");
      const std::size_t y = lookup(gset_.points, r.next("point"), ln, "point");
      r.finish();
      gset_.acts.push_back({x, g, y, {ln, kw.column}});
    } else {
      throw SyntaxError(ln, kw.column, "unknown gset keyword '" + k + "'");
    }
  }

  void close_gset() {
    FinGroup group;
    try {
      group = group_of(*gset_.groupoid);
    } catch (const std::exception& e) {
      throw SemanticError(gset_.header.line, gset_.header.column,
                          "'" + gset_.group + "' is not a group: " + e.what());
    }
    auto x = std::make_shared<GSet>(gset_.name, std::move(group), gset_.points);
    for (const auto& a : gset_.acts) x->set_act(a.x, a.g, a.y);
    doc_.gsets.push_back({gset_.group, std::move(x)});
  }

  // --- homomorphism ----------------------------------------------------

  void hom_line(const std::string& k, const Token& kw, Reader& r) {
    const std::size_t ln = r.line();
    if (k == "map") {
      const std::size_t a = lookup(hom_.source->objects(), r.next("source object"), ln, "object");
      r.expect("->");
      const std::size_t b = lookup(hom_.target->objects(), r.next("target object"), ln, "object");
      r.finish();
      if (hom_.object_map[a]) throw SemanticError(ln, kw.column, "object mapped twice");
      hom_.object_map[a] = b;
    } else if (k == "image") {
      const std::size_t a = lookup(hom_.source->objects(), r.next("object"), ln, "object");
      const std::size_t b = lookup(hom_.source->objects(), r.next("object"), ln, "object");
      r.expect(":");
      At ga{ln, r.column()};
      const std::int64_t g = r.integer("generator index");
      r.expect("->");
      At at{ln, r.column()};
      hom_.images.push_back({a, b, g, ga, r.rest_integers("coordinate"), at});
    } else {
      throw SyntaxError(ln, kw.column, "unknown homomorphism keyword '" + k + "'");
    }
  }

  void close_hom() {
    std::vector<std::size_t> objs;
    for (std::size_t a = 0; a < hom_.object_map.size(); ++a) {
      if (!hom_.object_map[a])
        throw SemanticError(hom_.header.line, hom_.header.column,
                            "no image for object '" + hom_.source->object_name(a) + "'");
      objs.push_back(*hom_.object_map[a]);
    }
    RingoidHom f(hom_.source, hom_.target, objs);
    for (const auto& im : hom_.images) {
      const std::size_t g = index_in(im.g, hom_.source->hom(im.a, im.b).generator_count(), im.ga.line,
                                     im.ga.column, "generator");
      f.set_image(im.a, im.b, g,
                  to_elem(im.coords, hom_.target->hom(objs[im.a], objs[im.b]), im.at, "image"));
    }
    doc_.homs.push_back({hom_.name, hom_.source->name(), hom_.target->name(), std::move(f)});
  }

  // --- ideal -----------------------------------------------------------

  void ideal_line(const std::string& k, const Token& kw, Reader& r) {
    const std::size_t ln = r.line();
    if (k != "generator") throw SyntaxError(ln, kw.column, "unknown ideal keyword '" + k + "'");
    const std::size_t a = lookup(ideal_.parent->objects(), r.next("object"), ln, "object");
    const std::size_t b = lookup(ideal_.parent->objects(), r.next("object"), ln, "object");
    r.expect(":");
    At at{ln, r.column()};
    ideal_.gens.push_back({a, b, r.rest_integers("coordinate"), at});
  }

  void close_ideal() {
    Ideal j = zero_ideal(ideal_.parent);
    const std::size_t n = ideal_.parent->object_count();
    for (const auto& g : ideal_.gens)
      j.generators[g.a * n + g.b].push_back(
          to_elem(g.coords, ideal_.parent->hom(g.a, g.b), g.at, "generator"));
    doc_.ideals.push_back({ideal_.name, ideal_.parent->name(), std::move(j)});
  }

  void close() {
    switch (kind_) {
      case Kind::kRingoid: close_ringoid(); break;
      case Kind::kGroupoid: close_groupoid(); break;
      case Kind::kGSet: close_gset(); break;
      case Kind::kHom: close_hom(); break;
      case Kind::kIdeal: close_ideal(); break;
      case Kind::kNone: break;
    }
    kind_ = Kind::kNone;
  }

  Document doc_;
  Kind kind_ = Kind::kNone;
  std::set<std::string> names_;
  RingoidSection ring_;
  GroupoidSection grp_;
  GSetSection gset_;
  HomSection hom_;
  IdealSection ideal_;
};

std::string join(const Elem& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i]);
  return s;
}

std::string token(std::string s) {
  for (char& c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '_';
  if (s.empty()) s = "_";
  return s;
}

bool is_zero(const Elem& e) {
  return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

std::string ringoid_section(const FiniteRingoid& r, const std::string& name,
                            const std::string& scalar_name) {
  std::ostringstream os;
  const std::size_t n = r.object_count();
  auto obj = [&](std::size_t a) { return token(r.object_name(a)); };
  os << "ringoid " << token(name) << "\n";
  for (std::size_t a = 0; a < n; ++a) os << "object " << obj(a) << "\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& m = r.hom(a, b).moduli();
      if (m.empty()) continue;
      os << "hom " << obj(a) << " " << obj(b) << " cyclic";
      for (auto d : m) os << " " << d;
      os << "\n";
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < r.hom(a, b).generator_count(); ++p)
          for (std::size_t q = 0; q < r.hom(b, c).generator_count(); ++q) {
            Elem v = r.constant(a, b, c, p, q);
            if (is_zero(v)) continue;
            os << "compose " << obj(a) << " " << obj(b) << " " << obj(c) << ": " << p << " " << q
               << " -> " << join(v) << "\n";
          }
  if (r.unital())
    for (std::size_t a = 0; a < n; ++a) {
      os << "identity " << obj(a) << ":";
      if (!r.identity(a).empty()) os << " " << join(r.identity(a));
      os << "\n";
    }
  if (r.scalar_ring()) {
    os << "scalar " << token(scalar_name) << "\n";
    const std::size_t k = r.scalar_ring()->hom(0, 0).generator_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t g = 0; g < r.hom(a, b).generator_count(); ++g) {
            Elem v = r.action_constant(a, b, s, g);
            if (is_zero(v)) continue;
            os << "action " << obj(a) << " " << obj(b) << ": " << s << " " << g << " -> " << join(v)
               << "\n";
          }
  }
  return os.str();
}

}  // namespace

RingoidPtr Document::ringoid(const std::string& name) const {
  for (const auto& r : ringoids)
    if (r->name() == name) return r;
  return nullptr;
}

const FinGroupoid* Document::groupoid(const std::string& name) const {
  for (const auto& g : groupoids)
    if (g.name() == name) return &g;
  return nullptr;
}

const GSet* Document::gset(const std::string& name) const {
  for (const auto& g : gsets)
    if (g.gset->name() == name) return g.gset.get();
  return nullptr;
}

const NamedHom* Document::hom(const std::string& name) const {
  for (const auto& h : homs)
    if (h.name == name) return &h;
  return nullptr;
}

const NamedIdeal* Document::ideal(const std::string& name) const {
  for (const auto& j : ideals)
    if (j.name == name) return &j;
  return nullptr;
}

Document parse(const std::string& text) { return Parser().run(text); }

FinGroup group_of(const FinGroupoid& g) {
  if (g.object_count() != 1) throw StructuralError("group_of: groupoid has more than one object");
  const std::size_t n = g.morphism_count();
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto h = g.then(b, a);
      if (!h) throw StructuralError("composite of " + g.morphism(b).name + " and " + g.morphism(a).name +
                                    " is missing");
      table[a * n + b] = *h;
    }
  auto e = g.identity(0);
  if (!e) throw StructuralError("no identity morphism");
  std::vector<std::string> names;
  for (std::size_t f = 0; f < n; ++f) names.push_back(g.morphism(f).name);
  return FinGroup(n, std::move(table), *e, std::move(names));
}

std::string print_groupoid(const FinGroupoid& g) {
  std::ostringstream os;
  os << "groupoid " << token(g.name()) << "\n";
  for (const auto& o : g.objects()) os << "object " << token(o) << "\n";
  for (std::size_t f = 0; f < g.morphism_count(); ++f) {
    const auto& m = g.morphism(f);
    os << "morphism " << token(g.object_name(m.source)) << " " << token(g.object_name(m.target)) << " "
       << token(m.name) << "\n";
  }
  for (std::size_t f = 0; f < g.morphism_count(); ++f)
    for (std::size_t h = 0; h < g.morphism_count(); ++h)
      if (auto c = g.then(f, h))
        os << "compose " << token(g.morphism(f).name) << " " << token(g.morphism(h).name) << " -> "
           << token(g.morphism(*c).name) << "\n";
  for (std::size_t f = 0; f < g.morphism_count(); ++f)
    if (auto i = g.inverse(f); i && *i >= f)
      os << "inverse " << token(g.morphism(f).name) << " " << token(g.morphism(*i).name) << "\n";
  return os.str();
}

std::string print_ringoid(const FiniteRingoid& r) {
  std::string name = r.name().empty() ? "R" : r.name();
  if (!r.scalar_ring()) return ringoid_section(r, name, "");
  std::string sname = r.scalar_ring()->name().empty() ? "S" : r.scalar_ring()->name();
  if (token(sname) == token(name)) sname += ".scalars";
  FiniteRingoid s = *r.scalar_ring();
  s.set_name(sname);
  return print_ringoid(s) + "\n" + ringoid_section(r, name, sname);
}

std::string print(const Document& doc) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "\n";
    first = false;
  };
  for (const auto& r : doc.ringoids) {
    sep();
    os << ringoid_section(*r, r->name(), r->scalar_ring() ? r->scalar_ring()->name() : "");
  }
  for (const auto& g : doc.groupoids) {
    sep();
    os << print_groupoid(g);
  }
  for (const auto& ng : doc.gsets) {
    sep();
    const GSet& x = *ng.gset;
    os << "gset " << token(x.name()) << " over " << token(ng.group) << "\n";
    for (const auto& p : x.points()) os << "point " << token(p) << "\n";
    for (std::size_t p = 0; p < x.point_count(); ++p)
      for (std::size_t g = 0; g < x.group().order(); ++g) {
        std::size_t y;
        try {
          y = x.act(p, g);
        } catch (const std::invalid_argument&) {
          continue;
        }
        os << "act " << token(x.point_name(p)) << " " << token(x.group().name(g)) << " -> "
           << token(x.point_name(y)) << "\n";
      }
  }
  for (const auto& h : doc.homs) {
    sep();
    const RingoidHom& f = h.hom;
    os << "homomorphism " << token(h.name) << " " << token(h.source) << " " << token(h.target) << "\n";
    const std::size_t n = f.source().object_count();
    for (std::size_t a = 0; a < n; ++a)
      os << "map " << token(f.source().object_name(a)) << " -> "
         << token(f.target().object_name(f.map_object(a))) << "\n";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t g = 0; g < f.source().hom(a, b).generator_count(); ++g) {
          const Elem& v = f.image(a, b, g);
          if (is_zero(v)) continue;
          os << "image " << token(f.source().object_name(a)) << " " << token(f.source().object_name(b))
             << ": " << g << " -> " << join(v) << "\n";
        }
  }
  for (const auto& j : doc.ideals) {
    sep();
    os << "ideal " << token(j.name) << " in " << token(j.ringoid) << "\n";
    const FiniteRingoid& m = *j.ideal.parent;
    const std::size_t n = m.object_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (const Elem& e : j.ideal.gens(a, b)) {
          os << "generator " << token(m.object_name(a)) << " " << token(m.object_name(b)) << ":";
          if (!e.empty()) os << " " << join(e);
          os << "\n";
        }
  }
  return os.str();
}

}  // namespace kring::rgd
