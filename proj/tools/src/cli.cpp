#include "kring_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kring/assembly.hpp"
#include "kring/catalog.hpp"
#include "kring/ktheory.hpp"
#include "kring/nerve.hpp"
#include "kring_cli/rgd.hpp"

namespace kring::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string format = "human";
  std::string ringoid, with, ideal, groupoid, ring, gset;
  std::size_t bound = 3;
  std::size_t gl_max = 2;
  std::size_t level = 3;
  std::uint64_t ceiling = std::uint64_t{1} << 20;
  unsigned threads = 1;

  Limits limits() const {
    unsigned t = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    return Limits{ceiling, t};
  }
};

/// A command that cannot produce a result; the message goes to the error stream.
struct Failure {
  int code;
  std::string message;
};

struct Result {
  int code = kOk;
  std::string human;
  json machine = json::object();
};

json number(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json vector_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(number(x));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row_vector(r)));
  return out;
}

json group_json(const AbPresentation& g) {
  return {{"string", g.to_string()}, {"rank", g.rank()}, {"torsion", vector_json(g.torsion())}};
}

std::string matrix_text(const IntMatrix& m, const std::string& indent) {
  std::ostringstream os;
  if (m.rows() == 0 || m.cols() == 0) {
    os << indent << "(" << m.rows() << " x " << m.cols() << ", zero map)\n";
    return os.str();
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

std::string join_names(const std::vector<std::size_t>& idx, const std::function<std::string(std::size_t)>& name) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + name(idx[i]);
  return s;
}

std::string describe(const Violation& v, const FiniteRingoid& r) {
  std::string s(axiom_name(v.axiom));
  if (!v.objects.empty())
    s += " at objects (" +
         join_names(v.objects, [&](std::size_t a) { return a < r.object_count() ? r.object_name(a) : std::to_string(a); }) +
         ")";
  if (!v.generators.empty())
    s += " generators (" + join_names(v.generators, [](std::size_t g) { return std::to_string(g); }) + ")";
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

json violations_json(const ValidationReport& rep, const FiniteRingoid& r) {
  json out = json::array();
  for (const auto& v : rep.violations)
    out.push_back({{"axiom", std::string(axiom_name(v.axiom))},
                   {"objects", v.objects},
                   {"generators", v.generators},
                   {"detail", v.detail},
                   {"text", describe(v, r)}});
  return out;
}

std::string sum_text(const ObjSum& s, const FiniteRingoid& r) { return to_string(s, r); }

// --- selection ------------------------------------------------------------

RingoidPtr pick_ringoid(const rgd::Document& doc, const std::string& name) {
  if (name.empty()) {
    if (doc.ringoids.empty()) throw Failure{kFailure, "no ringoid in the input"};
    return doc.ringoids.back();
  }
  RingoidPtr r = doc.ringoid(name);
  if (!r) throw Failure{kFailure, "unknown ringoid '" + name + "'"};
  return r;
}

RingoidPtr valid_ringoid(const rgd::Document& doc, const std::string& name) {
  RingoidPtr r = pick_ringoid(doc, name);
  ValidationReport rep = validate(*r);
  if (!rep.clean())
    throw Failure{kFailure, "ringoid '" + r->name() + "' fails " + describe(rep.violations.front(), *r)};
  return r;
}

RingoidPtr coefficient_ring(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = valid_ringoid(doc, o.ring.empty() ? o.ringoid : o.ring);
  if (!is_commutative_ring(*r))
    throw Failure{kFailure, "'" + r->name() + "' is not a commutative ring with one object"};
  return r;
}

const FinGroupoid& pick_groupoid(const rgd::Document& doc, const std::string& name) {
  const FinGroupoid* g = nullptr;
  if (name.empty()) {
    if (doc.groupoids.empty()) throw Failure{kFailure, "no groupoid in the input"};
    g = &doc.groupoids.back();
  } else {
    g = doc.groupoid(name);
    if (!g) throw Failure{kFailure, "unknown groupoid '" + name + "'"};
  }
  if (auto bad = g->check()) throw Failure{kFailure, "groupoid '" + g->name() + "': " + *bad};
  return *g;
}

const GSet& pick_gset(const rgd::Document& doc, const std::string& name) {
  const GSet* x = nullptr;
  if (name.empty()) {
    if (doc.gsets.empty()) throw Failure{kFailure, "no gset in the input"};
    x = doc.gsets.back().gset.get();
  } else {
    x = doc.gset(name);
    if (!x) throw Failure{kFailure, "unknown gset '" + name + "'"};
  }
  if (auto bad = x->check()) throw Failure{kFailure, "gset '" + x->name() + "': " + *bad};
  return *x;
}

std::string undecided_note(const IsoClassTable& t) {
  return std::to_string(t.undecided.size()) + " isomorphism test" + (t.undecided.size() == 1 ? "" : "s") +
         " exceeded the ceiling";
}

// --- commands --------------------------------------------------------------

Result cmd_validate(const rgd::Document& doc, const Options&) {
  Result res;
  std::ostringstream os;
  json sections = json::array();
  bool ok = true;
  auto add = [&](const std::string& kind, const std::string& name, const std::vector<std::string>& problems,
                 json detail) {
    ok = ok && problems.empty();
    os << kind << " " << name << ": " << (problems.empty() ? "ok" : "FAIL") << "\n";
    for (const auto& p : problems) os << "  " << p << "\n";
    sections.push_back({{"kind", kind}, {"name", name}, {"ok", problems.empty()}, {"violations", std::move(detail)}});
  };
  for (const auto& r : doc.ringoids) {
    ValidationReport rep = validate(*r);
    std::vector<std::string> problems;
    for (const auto& v : rep.violations) problems.push_back(describe(v, *r));
    add("ringoid", r->name(), problems, violations_json(rep, *r));
  }
  for (const auto& g : doc.groupoids) {
    auto bad = g.check();
    std::vector<std::string> problems;
    if (bad) problems.push_back(*bad);
    add("groupoid", g.name(), problems, json(problems));
  }
  for (const auto& x : doc.gsets) {
    auto bad = x.gset->check();
    std::vector<std::string> problems;
    if (bad) problems.push_back(*bad);
    add("gset", x.gset->name(), problems, json(problems));
  }
  for (const auto& h : doc.homs) {
    ValidationReport rep = validate_hom(h.hom);
    std::vector<std::string> problems;
    for (const auto& v : rep.violations) problems.push_back(describe(v, h.hom.source()));
    add("homomorphism", h.name, problems, violations_json(rep, h.hom.source()));
  }
  for (const auto& j : doc.ideals) {
    ValidationReport rep = validate_ideal(j.ideal);
    std::vector<std::string> problems;
    for (const auto& v : rep.violations) problems.push_back(describe(v, *j.ideal.parent));
    add("ideal", j.name, problems, violations_json(rep, *j.ideal.parent));
  }
  res.human = os.str();
  res.machine = {{"sections", sections}, {"ok", ok}};
  res.code = ok ? kOk : kFailure;
  return res;
}

Result cmd_complete(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = valid_ringoid(doc, o.ringoid);
  AdditiveView view(r);
  Result res;
  std::ostringstream os;
  const auto sums = sums_up_to(r->object_count(), o.bound);
  IsoClassTable table = iso_class_table(view, o.bound, o.limits());
  os << "additive completion of " << r->name() << " up to length " << o.bound << "\n";
  os << "sums: " << sums.size() << "\n";
  os << "isomorphism classes: " << table.size() << "\n";
  json classes = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<std::string> members;
    for (const auto& [s, c] : table.class_of)
      if (c == i && s.size() <= o.bound && std::is_sorted(s.begin(), s.end())) members.push_back(sum_text(s, *r));
    os << "  " << sum_text(table.representatives[i], *r) << ": " << members.size() << " sorted member"
       << (members.size() == 1 ? "" : "s") << "\n";
    classes.push_back({{"representative", sum_text(table.representatives[i], *r)}, {"sorted_members", members}});
  }
  std::size_t checked = 0, failed = 0;
  json failures = json::array();
  if (view.unital()) {
    for (const auto& a : sums)
      for (const auto& b : sums) {
        if (a.size() + b.size() > o.bound) continue;
        ++checked;
        if (!view.check_biproduct(view.biproduct(a, b))) {
          ++failed;
          failures.push_back({sum_text(a, *r), sum_text(b, *r)});
        }
      }
    os << "biproducts checked: " << checked << ", failures: " << failed << "\n";
  } else {
    os << "biproducts: skipped (no identities)\n";
  }
  if (!table.decided()) os << "undecided: " << undecided_note(table) << "\n";
  res.human = os.str();
  res.machine = {{"ringoid", r->name()},
                 {"bound", o.bound},
                 {"sums", sums.size()},
                 {"classes", classes},
                 {"biproducts_checked", checked},
                 {"biproduct_failures", failures},
                 {"unital", view.unital()},
                 {"decided", table.decided()}};
  res.code = failed ? kFailure : table.decided() ? kOk : kUndecided;
  return res;
}

// Least l in [2, bound] from which every bound up to `bound` adds no new relations.
std::optional<std::size_t> stabilized_at(RingoidPtr r, const KZeroResult& top, const Options& o) {
  if (o.bound < 2 || !top.stabilized) return std::nullopt;
  std::size_t first = o.bound;
  for (std::size_t l = o.bound - 1; l >= 2; --l) {
    if (!k0_bounded(r, l, o.limits()).stabilized) break;
    first = l;
  }
  return first;
}

Result cmd_k0(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = valid_ringoid(doc, o.ringoid);
  if (!r->unital()) throw Failure{kFailure, "k0 needs identities; use 'unitize' for a moduloid"};
  KZeroResult k = k0_bounded(r, o.bound, o.limits());
  Result res;
  std::ostringstream os;
  os << "K0 = " << k.group.to_string();
  std::optional<std::size_t> at;
  if (!k.decided()) {
    os << " (undecided at L=" << o.bound << ": " << undecided_note(k.table) << ")";
    res.code = kUndecided;
  } else if ((at = stabilized_at(r, k, o))) {
    os << " (stabilized at L=" << *at << ")";
  } else {
    os << " (not stabilized at L=" << o.bound << ")";
  }
  os << "\n";
  json gens = json::array();
  for (const auto& g : k.generators) gens.push_back(sum_text(g, *r));
  json reps = json::array();
  for (const auto& s : k.table.representatives) reps.push_back(sum_text(s, *r));
  res.human = os.str();
  res.machine = {{"ringoid", r->name()},
                 {"bound", o.bound},
                 {"group", group_json(k.group)},
                 {"generators", gens},
                 {"relations", matrix_json(k.relations)},
                 {"classes", reps},
                 {"stabilized", k.stabilized},
                 {"stabilized_at", at ? json(*at) : json(nullptr)},
                 {"decided", k.decided()}};
  return res;
}

Result cmd_k1(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = valid_ringoid(doc, o.ringoid);
  if (!r->unital()) throw Failure{kFailure, "k1 needs identities"};
  if (r->object_count() != 1) throw Failure{kFailure, "k1 needs a one-object ring"};
  KOneResult k = k1_bounded(r, o.gl_max, o.limits());
  Result res;
  std::ostringstream os;
  json levels = json::array();
  for (std::size_t n = 0; n < k.abelianizations.size(); ++n) {
    os << "GL_" << n + 1 << "(" << r->name() << "): order " << k.orders[n] << ", abelianization "
       << k.abelianizations[n].to_string() << "\n";
    levels.push_back({{"n", n + 1}, {"order", k.orders[n]}, {"abelianization", group_json(k.abelianizations[n])}});
  }
  json maps = json::array();
  for (std::size_t n = 0; n < k.stabilization.size(); ++n) {
    os << "stabilization GL_" << n + 1 << " -> GL_" << n + 2 << ":\n" << matrix_text(k.stabilization[n].matrix, "  ");
    maps.push_back(matrix_json(k.stabilization[n].matrix));
  }
  if (!k.embeddings_valid) {
    os << "stabilization embedding check failed\n";
    res.code = kFailure;
  }
  if (k.reached < o.gl_max) {
    os << "K1 undecided: GL_" << k.reached + 1 << " exceeds the ceiling\n";
    if (res.code == kOk) res.code = kUndecided;
  } else if (!k.abelianizations.empty()) {
    os << "K1 = " << k.abelianizations.back().to_string() << " ("
       << (k.stabilized ? "stabilized" : "not stabilized") << " at n=" << o.gl_max << ")\n";
  }
  res.human = os.str();
  res.machine = {{"ringoid", r->name()},
                 {"gl_max", o.gl_max},
                 {"levels", levels},
                 {"stabilization", maps},
                 {"embeddings_valid", k.embeddings_valid},
                 {"stabilized", k.stabilized},
                 {"reached", k.reached}};
  return res;
}

Result ringoid_result(const FiniteRingoid& out, const std::string& what) {
  Result res;
  ValidationReport rep = validate(out);
  res.human = rgd::print_ringoid(out);
  res.machine = {{"construction", what}, {"rgd", res.human}, {"valid", rep.clean()}};
  if (!rep.clean()) res.code = kFailure;
  return res;
}

Result cmd_unitize(const rgd::Document& doc, const Options& o) {
  RingoidPtr m = valid_ringoid(doc, o.ringoid);
  if (!m->scalar_ring()) throw Failure{kFailure, "unitize needs a scalar ring on '" + m->name() + "'"};
  return ringoid_result(unitize(*m), "unitize");
}

Result cmd_quotient(const rgd::Document& doc, const Options& o) {
  const rgd::NamedIdeal* j = nullptr;
  if (o.ideal.empty()) {
    if (doc.ideals.empty()) throw Failure{kFailure, "no ideal in the input"};
    j = &doc.ideals.back();
  } else {
    j = doc.ideal(o.ideal);
    if (!j) throw Failure{kFailure, "unknown ideal '" + o.ideal + "'"};
  }
  valid_ringoid(doc, j->ringoid);
  ValidationReport rep = validate_ideal(j->ideal);
  if (!rep.clean())
    throw Failure{kFailure, "ideal '" + j->name + "' fails " + describe(rep.violations.front(), *j->ideal.parent)};
  return ringoid_result(*quotient(j->ideal).ringoid, "quotient");
}

Result cmd_tensor(const rgd::Document& doc, const Options& o) {
  RingoidPtr m = valid_ringoid(doc, o.ringoid);
  if (o.with.empty()) throw Failure{kFailure, "tensor needs --with NAME"};
  RingoidPtr n = valid_ringoid(doc, o.with);
  return ringoid_result(tensor(*m, *n), "tensor");
}

Result cmd_groupring(const rgd::Document& doc, const Options& o) {
  const FinGroupoid& g = pick_groupoid(doc, o.groupoid);
  RingoidPtr r = coefficient_ring(doc, o);
  return ringoid_result(group_ringoid(g, r), "groupring");
}

Result cmd_transport(const rgd::Document& doc, const Options& o) {
  const GSet& x = pick_gset(doc, o.gset);
  FinGroupoid t = transport_groupoid(x);
  Result res;
  res.human = rgd::print_groupoid(t);
  auto bad = t.check();
  res.machine = {{"construction", "transport"}, {"rgd", res.human}, {"valid", !bad}};
  if (bad) res.code = kFailure;
  return res;
}

Result cmd_assembly(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = coefficient_ring(doc, o);
  AssemblyZeroMap a;
  std::string over;
  if (!o.gset.empty()) {
    const GSet& x = pick_gset(doc, o.gset);
    a = equivariant_assembly_zero(x, r, o.bound, o.limits());
    over = "gset " + x.name();
  } else {
    const FinGroupoid& g = pick_groupoid(doc, o.groupoid);
    a = assembly_zero(g, r, o.bound, o.limits());
    over = "groupoid " + g.name();
  }
  Result res;
  std::ostringstream os;
  os << "assembly over " << over << " with coefficients " << r->name() << " at L=" << o.bound << "\n";
  os << "orbits: " << a.components.size() << "\n";
  os << "source: " << a.source.to_string() << "\n";
  os << "target: " << a.target.group.to_string() << "\n";
  os << "matrix:\n" << matrix_text(a.map.matrix, "  ");
  std::string verdict;
  if (!a.well_defined || !a.inclusions_valid) {
    verdict = "not well-defined";
    res.code = kFailure;
  } else if (!a.decided()) {
    verdict = "undecided";
    res.code = kUndecided;
  } else {
    verdict = a.isomorphism ? "isomorphism" : "not an isomorphism";
  }
  os << "verdict: " << verdict << "\n";
  json summands = json::array();
  for (const auto& s : a.summands) summands.push_back(group_json(s.group));
  res.human = os.str();
  res.machine = {{"over", over},
                 {"ring", r->name()},
                 {"bound", o.bound},
                 {"orbits", a.components.size()},
                 {"summands", summands},
                 {"source", group_json(a.source)},
                 {"target", group_json(a.target.group)},
                 {"matrix", matrix_json(a.map.matrix)},
                 {"well_defined", a.well_defined},
                 {"inclusions_valid", a.inclusions_valid},
                 {"isomorphism", a.isomorphism},
                 {"decided", a.decided()},
                 {"verdict", verdict}};
  return res;
}

Result cmd_nerve_check(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = valid_ringoid(doc, o.ringoid);
  AdditiveView view(r);
  SimplicialReport rep = check_simplicial_identities(view, o.level, o.bound);
  Result res;
  std::ostringstream os;
  os << "simplicial identities on " << r->name() << " up to level " << o.level << " at L=" << o.bound << ": "
     << rep.checks << " checks, " << rep.failures.size() << " failures" << (rep.partial ? " (partial)" : "")
     << "\n";
  for (const auto& f : rep.failures) os << "  " << f << "\n";
  res.human = os.str();
  res.machine = {{"ringoid", r->name()},
                 {"level", o.level},
                 {"bound", o.bound},
                 {"checks", rep.checks},
                 {"failures", rep.failures},
                 {"partial", rep.partial}};
  res.code = !rep.ok() ? kFailure : rep.partial ? kUndecided : kOk;
  return res;
}

Result cmd_oracle_compare(const rgd::Document& doc, const Options& o) {
  RingoidPtr r = valid_ringoid(doc, o.ringoid);
  if (!r->unital()) throw Failure{kFailure, "oracle-compare needs identities"};
  OracleReport rep = oracle_compare(r, o.bound, o.limits());
  Result res;
  std::ostringstream os;
  if (!rep.decided()) {
    os << "UNDECIDED: K0 = " << rep.bounded.group.to_string() << ", nerve = " << rep.nerve.group.to_string()
       << "\n";
    res.code = kUndecided;
  } else if (rep.match) {
    os << "MATCH: " << rep.bounded.group.to_string() << "\n";
  } else {
    os << "MISMATCH: K0 = " << rep.bounded.group.to_string() << ", nerve = " << rep.nerve.group.to_string()
       << "\n";
    res.code = kFailure;
  }
  res.human = os.str();
  res.machine = {{"ringoid", r->name()},
                 {"bound", o.bound},
                 {"bounded", group_json(rep.bounded.group)},
                 {"nerve", group_json(rep.nerve.group)},
                 {"nerve_presentation", rep.nerve.simplified.result.to_string()},
                 {"comparison", matrix_json(rep.comparison.matrix)},
                 {"match", rep.match},
                 {"decided", rep.decided()}};
  return res;
}

using Command = std::function<Result(const rgd::Document&, const Options&)>;

const std::vector<std::pair<std::string, std::pair<std::string, Command>>>& commands() {
  static const std::vector<std::pair<std::string, std::pair<std::string, Command>>> table = {
      {"validate", {"check every section against its axioms", cmd_validate}},
      {"complete", {"additive completion: isomorphism classes and biproducts", cmd_complete}},
      {"k0", {"bounded K0 by group completion", cmd_k0}},
      {"k1", {"bounded K1 from GL_n abelianizations", cmd_k1}},
      {"unitize", {"unitization of a moduloid, printed as RGD", cmd_unitize}},
      {"quotient", {"quotient by an ideal, printed as RGD", cmd_quotient}},
      {"tensor", {"tensor product with --with, printed as RGD", cmd_tensor}},
      {"groupring", {"group ringoid of a groupoid, printed as RGD", cmd_groupring}},
      {"transport", {"transport groupoid of a G-set, printed as RGD", cmd_transport}},
      {"assembly", {"degree-zero assembly map", cmd_assembly}},
      {"nerve-check", {"simplicial identities of the nerve", cmd_nerve_check}},
      {"oracle-compare", {"bounded K0 against the nerve computation", cmd_oracle_compare}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite ringoids, their constructions and bounded K-theory", "kring"};
  app.require_subcommand(1);
  app.add_option("--input", o.input, "RGD file");
  app.add_option("--bound", o.bound, "length bound L")->capture_default_str();
  app.add_option("--gl-max", o.gl_max, "largest n for GL_n")->capture_default_str();
  app.add_option("--ceiling", o.ceiling, "isomorphism search candidates")->capture_default_str();
  app.add_option("--format", o.format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads (0: all cores)")->capture_default_str();
  app.add_option("--ringoid", o.ringoid, "ringoid to use (default: the last one)");
  app.add_option("--with", o.with, "second ringoid for tensor");
  app.add_option("--ideal", o.ideal, "ideal for quotient");
  app.add_option("--groupoid", o.groupoid, "groupoid for groupring and assembly");
  app.add_option("--ring", o.ring, "coefficient ring for groupring and assembly");
  app.add_option("--gset", o.gset, "G-set for transport and assembly");
  app.add_option("--level", o.level, "largest nerve level for nerve-check")->capture_default_str();

  std::string chosen;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->fallthrough();
    sub->callback([&chosen, n = name] { chosen = n; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  if (o.input.empty()) {
    err << "error: --input is required\n";
    return kFailure;
  }
  std::ifstream file(o.input, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << o.input << "\n";
    return kFailure;
  }
  std::stringstream text;
  text << file.rdbuf();

  rgd::Document doc;
  try {
    doc = rgd::parse(text.str());
  } catch (const rgd::ParseError& e) {
    err << o.input << ":" << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << o.input << ": " << e.what() << "\n";
    return kFailure;
  }

  Result res;
  try {
    auto it = std::find_if(commands().begin(), commands().end(), [&](const auto& c) { return c.first == chosen; });
    res = it->second.second(doc, o);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::length_error& e) {
    err << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  if (o.format == "machine") {
    json doc_out = res.machine;
    doc_out["command"] = chosen;
    doc_out["exit_code"] = res.code;
    out << doc_out.dump(2) << "\n";
  } else {
    out << res.human;
  }
  return res.code;
}

}  // namespace kring::cli
