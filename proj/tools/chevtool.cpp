// chevtool: batch front end over the chev library.
//
// Exit status: 0 when every requested check passed, 1 when a check failed,
// 2 on a usage error (bad flags or malformed input).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chev/arrangement.hpp"
#include "chev/cycles.hpp"
#include "chev/error.hpp"
#include "chev/relations.hpp"
#include "chev/symbols.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace chev;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model = "sp";
  int n = 2;
  std::string regime = "grid";
  std::string grid;
  std::string format = "json";
  std::size_t budget = kDefaultBudget;
  std::string roots = "builtin:restricted";
  std::string plane;
};

GroupModel make_model(const RunConfig& c) {
  if (c.n < 2) throw UsageError("--n must be at least 2");
  return GroupModel(parse_family(c.model), c.n);
}

Grid make_grid(const RunConfig& c, const GroupModel& model, Regime regime) {
  if (c.grid.empty()) return Grid::default_for(model);
  Grid g;
  std::stringstream in(c.grid);
  std::string item;
  while (std::getline(in, item, ',')) {
    Scalar s = parse_scalar(item);
    if (s.is_zero()) throw UsageError("grid values must be nonzero");
    bool seen = false;
    for (const auto& v : g.values) seen = seen || v == s;
    if (!seen) g.values.push_back(s);
  }
  if (regime == Regime::Grid && g.values.size() < 9) {
    throw UsageError("grid needs at least 9 distinct nonzero values");
  }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// builtin:restricted, builtin:sl-standard, list:<root>;<root>, or a file
/// with one root per line.
std::vector<Root> load_roots(const RunConfig& c, const GroupModel& model) {
  const std::string& src = c.roots;
  if (src == "builtin:restricted") {
    std::vector<Root> out;
    for (const auto& r : RootSystem(model).roots()) {
      Root u = r.untagged();
      bool seen = false;
      for (const auto& o : out) seen = seen || o == u;
      if (!seen) out.push_back(u);
    }
    return out;
  }
  if (src == "builtin:sl-standard") return RootSystem(GroupModel(Family::SLStd, model.n)).roots();
  if (src.rfind("builtin:", 0) == 0) throw UsageError("unknown builtin root set '" + src + "'");
  std::vector<Root> out;
  std::string body;
  char sep = '\n';
  if (src.rfind("list:", 0) == 0) {
    body = src.substr(5);
    sep = ';';
  } else {
    body = read_file(src);
  }
  std::stringstream in(body);
  std::string line;
  while (std::getline(in, line, sep)) {
    auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(parse_root(line.substr(a, line.find_last_not_of(" \t\r") - a + 1)));
  }
  if (out.empty()) throw UsageError("no roots in '" + src + "'");
  for (const auto& r : out) {
    if (r.rank() != out[0].rank()) throw UsageError("roots have different lengths");
  }
  return out;
}

Plane load_plane(const RunConfig& c, std::size_t dim) {
  if (c.plane.empty()) return Plane::full(dim);
  return parse_plane(c.plane, dim);
}

Param load_param(std::string text) {
  auto a = text.find_first_not_of(" \t");
  if (a != std::string::npos && text[a] != '(') text = "(" + text + ")";
  return parse_param(text);
}

json vec_json(const CartanVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json int_vec_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json roots_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

json hyperplane_json(const Hyperplane& h) {
  return json{{"equation", h.equation()}, {"normal", int_vec_json(h.normal)}, {"roots", roots_json(h.labels)}};
}

json plane_json(const Plane& p) {
  json basis = json::array();
  for (const auto& b : p.basis()) basis.push_back(vec_json(b));
  return json{{"ambient_dim", p.ambient_dim()}, {"dim", p.dim()}, {"basis", basis}};
}

json letters_json(const std::vector<Letter>& ls) {
  json out = json::array();
  for (const auto& l : ls) out.push_back(l.to_string());
  return out;
}

json model_json(const GroupModel& m) { return json{{"family", to_string(m.family)}, {"n", m.n}}; }

void emit(const RunConfig& c, const json& doc, const std::vector<std::string>& text) {
  if (c.format == "text") {
    for (const auto& line : text) std::cout << line << '\n';
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

// ------------------------------------------------------------------ verify

int cmd_verify(const RunConfig& c, const std::string& suite, bool failures_only) {
  GroupModel model = make_model(c);
  Regime regime = parse_regime(c.regime);
  Grid grid = make_grid(c, model, regime);
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = {"relations", "weyl", "monomial"};
  } else {
    suites = {suite};
  }
  std::vector<RelationInstance> rels;
  for (const auto& s : suites) {
    std::vector<RelationInstance> part;
    if (s == "relations") {
      part = presentation_relations(model);
    } else if (s == "weyl") {
      part = weyl_relations(model);
    } else if (s == "monomial") {
      part = monomial_relations(model);
    }
    for (auto& r : part) rels.push_back(std::move(r));
  }
  auto reports = verify_all(rels, regime, grid);

  std::size_t failed = 0;
  json items = json::array();
  std::vector<std::string> text;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    if (failures_only && r.pass) continue;
    json item{{"relation", to_string(r.id)}, {"label", r.label}, {"roots", roots_json(r.roots)},
              {"params", r.params}, {"pass", r.pass}, {"points", r.points}};
    std::string line = std::string(r.pass ? "PASS " : "FAIL ") + to_string(r.id) + " " + r.label;
    if (!r.note.empty()) item["note"] = r.note;
    if (r.witness) {
      const auto& w = *r.witness;
      item["witness"] = json{{"assignment", w.assignment}, {"row", w.row}, {"col", w.col},
                             {"lhs", w.lhs}, {"rhs", w.rhs}, {"error", w.error}};
      line += "  at " + w.assignment;
      if (!w.error.empty()) line += ": " + w.error;
    }
    items.push_back(item);
    text.push_back(line);
  }
  text.push_back(std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) +
                 " relation instances passed");
  json doc{{"command", "verify"}, {"model", model_json(model)}, {"regime", to_string(regime)},
           {"suites", suites},    {"instances", reports.size()}, {"failures", failed},
           {"pass", failed == 0}, {"reports", items}};
  emit(c, doc, text);
  return failed == 0 ? kPass : kFail;
}

// ----------------------------------------------------------- arrangement

int cmd_generic(const RunConfig& c) {
  GroupModel model = make_model(c);
  auto roots = load_roots(c, model);
  auto hps = lyapunov_hyperplanes(roots, roots[0].rank());
  Plane plane = load_plane(c, roots[0].rank());
  if (plane.dim() != 2) throw UsageError("genericity needs a 2-dimensional plane, got " + std::to_string(plane.dim()));
  auto v = is_generic(plane, hps);

  json hj = json::array();
  for (const auto& h : hps) hj.push_back(hyperplane_json(h));
  json doc{{"command", "generic"}, {"plane", plane_json(plane)}, {"hyperplanes", hj}, {"generic", v.generic}};
  std::vector<std::string> text{v.generic ? "generic" : "non-generic"};
  if (v.witness == GenericityVerdict::Witness::SharedLine) {
    doc["witness"] = json{{"kind", "shared-line"},
                          {"first", hyperplane_json(hps[*v.first])},
                          {"second", hyperplane_json(hps[*v.second])},
                          {"line", int_vec_json(v.line)}};
    text.push_back("  " + hps[*v.first].equation() + " and " + hps[*v.second].equation() + " meet the plane in " +
                   to_string(CartanVector(v.line.begin(), v.line.end())));
  } else if (v.witness == GenericityVerdict::Witness::Containment) {
    doc["witness"] = json{{"kind", "containment"}, {"first", hyperplane_json(hps[*v.first])}};
    text.push_back("  plane lies in " + hps[*v.first].equation());
  } else {
    doc["witness"] = nullptr;
  }
  emit(c, doc, text);
  return v.generic ? kPass : kFail;
}

int cmd_stable(const RunConfig& c, const std::string& check) {
  GroupModel model = make_model(c);
  auto roots = load_roots(c, model);
  std::size_t dim = roots[0].rank();
  Plane region = load_plane(c, dim);
  json doc{{"command", "stable"}, {"roots", roots_json(roots)}, {"region", plane_json(region)}};
  std::vector<std::string> text;
  bool ok = false;
  if (!check.empty()) {
    CartanVector x = parse_vector(check);
    if (x.size() != dim) throw UsageError("--check point has the wrong length");
    json values = json::array();
    for (const auto& r : roots) values.push_back(root_eval(r, x).get_str());
    bool inside = region.contains(x);
    ok = inside && is_stable_point(x, roots);
    doc["check"] = json{{"point", vec_json(x)}, {"in_region", inside}, {"values", values}, {"valid", ok}};
    text.push_back(std::string(ok ? "valid " : "invalid ") + to_string(x));
  } else {
    auto res = find_stable_element(region, roots);
    ok = res.feasible;
    doc["feasible"] = res.feasible;
    if (res.feasible) {
      json values = json::array();
      for (const auto& r : roots) values.push_back(root_eval(r, res.point).get_str());
      doc["point"] = vec_json(res.point);
      doc["values"] = values;
      text.push_back("stable point " + to_string(res.point));
    } else {
      doc["certificate"] = json{{"multipliers", vec_json(res.multipliers)},
                                {"combination", vec_json(res.combination)}};
      text.push_back("infeasible; multipliers " + to_string(res.multipliers));
    }
  }
  emit(c, doc, text);
  return ok ? kPass : kFail;
}

int cmd_chambers(const RunConfig& c) {
  GroupModel model = make_model(c);
  auto roots = load_roots(c, model);
  auto hps = lyapunov_hyperplanes(roots, roots[0].rank());
  Plane region = load_plane(c, roots[0].rank());
  auto chambers = weyl_chambers(hps, region);
  json hj = json::array();
  for (const auto& h : hps) hj.push_back(hyperplane_json(h));
  json cj = json::array();
  std::vector<std::string> text{std::to_string(chambers.size()) + " chambers"};
  for (const auto& ch : chambers) {
    cj.push_back(json{{"signs", ch.signs}, {"sample", vec_json(ch.sample)}});
    std::string s;
    for (int x : ch.signs) s += x > 0 ? '+' : '-';
    text.push_back("  " + s + " " + to_string(ch.sample));
  }
  json doc{{"command", "chambers"}, {"region", plane_json(region)}, {"hyperplanes", hj},
           {"count", chambers.size()}, {"chambers", cj}};
  emit(c, doc, text);
  return kPass;
}

// ---------------------------------------------------------------- cycles

Word load_word(const std::string& src, const GroupModel& model) {
  if (src == "builtin:h-mult") {
    for (auto& nw : relation_words(model)) {
      if (nw.relation == RelationId::HMult) return std::move(nw.word);
    }
    throw UsageError("no h-multiplicativity word for this model");
  }
  if (src.rfind("builtin:", 0) == 0) throw UsageError("unknown builtin word '" + src + "'");
  return parse_word(read_file(src), model);
}

int cmd_reduce(const RunConfig& c, const std::string& word_src) {
  GroupModel model = make_model(c);
  Word w = load_word(word_src, model);
  Plane region = load_plane(c, model.rank());
  auto trace = reduce_cycle(w, region, c.budget);
  auto bad = replay(trace);

  json moves = json::array();
  std::vector<std::string> text;
  for (const auto& m : trace.moves) {
    json mj{{"kind", to_string(m.kind)}};
    mj["relation"] = m.relation ? json(to_string(*m.relation)) : json(nullptr);
    mj["position"] = m.position;
    mj["removed"] = m.removed;
    mj["inserted"] = letters_json(m.inserted);
    mj["stable"] = m.stability.stable;
    mj["witness"] = vec_json(m.stability.witness);
    moves.push_back(mj);
    text.push_back(std::string(to_string(m.kind)) + (m.relation ? std::string(" ") + to_string(*m.relation) : "") +
                   " at " + std::to_string(m.position) + " -" + std::to_string(m.removed) + " +" +
                   std::to_string(m.inserted.size()));
  }
  bool ok = trace.complete && !bad && trace.final_word.letters.empty();
  json doc{{"command", "reduce"},
           {"model", model_json(model)},
           {"initial", letters_json(trace.initial.letters)},
           {"moves", moves},
           {"final", letters_json(trace.final_word.letters)},
           {"complete", trace.complete},
           {"replay_ok", !bad.has_value()}};
  if (!trace.reason.empty()) doc["reason"] = trace.reason;
  if (bad) doc["replay_failed_at"] = *bad;
  text.push_back(std::to_string(trace.moves.size()) + " moves, " + (ok ? "reduced to the empty word" : "incomplete") +
                 (bad ? ", replay failed" : ""));
  emit(c, doc, text);
  return ok ? kPass : kFail;
}

int cmd_decompose(const RunConfig& c, const std::string& r_text, const std::string& p_text,
                  const std::string& a_text, const std::string& b_text) {
  GroupModel model = make_model(c);
  Root r = parse_root(r_text);
  Root p = parse_root(p_text);
  json doc{{"command", "decompose"}, {"model", model_json(model)}, {"r", r.to_string()}, {"p", p.to_string()}};
  std::vector<std::string> text;
  json laws = json::array();
  bool ok = true;
  for (const auto& sf : structure_functions(model, r, p)) {
    laws.push_back(json{{"i", sf.i}, {"j", sf.j}, {"root", sf.target.to_string()}, {"law", sf.law.to_string()},
                        {"bidegree_ok", sf.bidegree_ok}});
    ok = ok && sf.bidegree_ok;
    text.push_back("law " + sf.to_string());
  }
  doc["laws"] = laws;
  if (!a_text.empty() || !b_text.empty()) {
    if (a_text.empty() || b_text.empty()) throw UsageError("--a and --b go together");
    Param a = load_param(a_text);
    Param b = load_param(b_text);
    auto d = decompose_commutator(model, r, p, a, b);
    json factors = json::array();
    for (const auto& f : d.factors) {
      factors.push_back(json{{"i", f.i}, {"j", f.j}, {"root", f.root.to_string()}, {"param", f.param.to_string()}});
      text.push_back("x " + f.root.to_string() + " " + f.param.to_string());
    }
    bool same = d.reassembled == d.commutator;
    ok = ok && same;
    doc["a"] = a.to_string();
    doc["b"] = b.to_string();
    doc["factors"] = factors;
    doc["reassembled_ok"] = same;
  }
  doc["pass"] = ok;
  emit(c, doc, text);
  return ok ? kPass : kFail;
}

int cmd_bracket(const RunConfig& c, const std::string& target_text, const std::vector<std::string>& companions) {
  GroupModel model = make_model(c);
  Letter target = parse_letter(target_text);
  Plane region = load_plane(c, model.rank());
  std::vector<Root> comp;
  for (const auto& s : companions) comp.push_back(parse_root(s));
  json doc{{"command", "bracket"}, {"target", target.to_string()}, {"companions", roots_json(comp)}};
  try {
    auto d = bracket_decompose(model, target, region, comp);
    Word check{model, {d.left, d.right, d.left.inverse(), d.right.inverse(), target.inverse()}};
    bool exact = word_eval(check).is_identity();
    doc["found"] = true;
    doc["expression"] = d.expression();
    doc["left"] = d.left.to_string();
    doc["right"] = d.right.to_string();
    doc["left_witness"] = vec_json(d.left_witness);
    doc["right_witness"] = vec_json(d.right_witness);
    doc["tried"] = d.tried;
    doc["exact"] = exact;
    emit(c, doc, {target.to_string() + " = " + d.expression()});
    return exact ? kPass : kFail;
  } catch (const NoDecomposition& e) {
    doc["found"] = false;
    doc["reason"] = e.what();
    emit(c, doc, {std::string("no decomposition: ") + e.what()});
    return kFail;
  }
}

// --------------------------------------------------------------- symbols

int cmd_symbol(const RunConfig& c, const std::string& universe, const std::string& expr,
               const std::string& axioms) {
  Universe u = parse_universe(universe);
  std::set<AxiomKind> kinds;
  if (axioms.empty() || axioms == "all") {
    kinds = all_axiom_kinds();
  } else {
    std::stringstream in(axioms);
    std::string item;
    while (std::getline(in, item, ',')) kinds.insert(parse_axiom_kind(item));
  }
  SymbolExpr e = parse_symbol_expr(expr);
  AxiomLattice lat = build_axiom_lattice(u, kinds);
  auto res = is_consequence(e, lat);

  json kj = json::array();
  for (auto k : kinds) kj.push_back(to_string(k));
  json doc{{"command", "symbol"}, {"universe_size", u.size()}, {"axioms", kj}, {"axiom_instances", lat.axioms().size()},
           {"rank", lat.rank()}, {"expr", e.to_string()}, {"holds", res.holds}};
  std::vector<std::string> text{e.to_string() + (res.holds ? " = 1 follows" : " = 1 does not follow")};
  bool ok = res.holds;
  if (res.certificate) {
    json uses = json::array();
    for (const auto& [k, coeff] : res.certificate->uses) {
      uses.push_back(json{{"axiom", lat.axioms()[k].to_string()}, {"power", coeff.get_str()}});
      text.push_back("  " + lat.axioms()[k].to_string() + " ^ " + coeff.get_str());
    }
    bool replays = replay(e, lat, *res.certificate).is_empty();
    ok = ok && replays;
    doc["certificate"] = uses;
    doc["replay_empty"] = replays;
  } else {
    doc["obstruction"] = res.obstruction.to_string();
    text.push_back("  obstruction " + res.obstruction.to_string());
  }
  emit(c, doc, text);
  return ok ? kPass : kFail;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--model", c.model, "group family")->check(CLI::IsMember({"sp", "sl-r", "sl-c", "sl-std"}));
  sub->add_option("--n", c.n, "block size, matrices are 2n x 2n");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Chevalley relations, Lyapunov arrangements and relation words"};
  app.require_subcommand(1);
  RunConfig c;
  std::string suite = "all";
  bool failures_only = false;
  std::string check, word_src, r_text, p_text, a_text, b_text, target_text, universe, expr, axioms;
  std::vector<std::string> companions;

  auto* verify = app.add_subcommand("verify", "check relation suites as exact matrix identities");
  add_common(verify, c);
  verify->add_option("--suite", suite)->check(CLI::IsMember({"relations", "weyl", "monomial", "all"}));
  verify->add_option("--regime", c.regime)->check(CLI::IsMember({"grid", "symbolic"}));
  verify->add_option("--grid", c.grid, "comma separated sample values");
  verify->add_flag("--failures-only", failures_only);

  auto* generic = app.add_subcommand("generic", "genericity of a 2-plane against the Lyapunov hyperplanes");
  add_common(generic, c);
  generic->add_option("--roots", c.roots);
  generic->add_option("--plane", c.plane);

  auto* stable = app.add_subcommand("stable", "a point where every root is negative");
  add_common(stable, c);
  stable->add_option("--roots", c.roots);
  stable->add_option("--plane", c.plane);
  stable->add_option("--check", check, "validate this point instead of searching");

  auto* chambers = app.add_subcommand("chambers", "Weyl chambers of the arrangement inside a region");
  add_common(chambers, c);
  chambers->add_option("--roots", c.roots);
  chambers->add_option("--plane", c.plane);

  auto* reduce = app.add_subcommand("reduce", "rewrite an identity word to the empty word");
  add_common(reduce, c);
  reduce->add_option("word", word_src, "word file or builtin:h-mult")->required();
  reduce->add_option("--plane", c.plane);
  reduce->add_option("--budget", c.budget);

  auto* decompose = app.add_subcommand("decompose", "factor a commutator of root-group elements");
  add_common(decompose, c);
  decompose->add_option("--r", r_text)->required();
  decompose->add_option("--p", p_text)->required();
  decompose->add_option("--a", a_text);
  decompose->add_option("--b", b_text);

  auto* bracket = app.add_subcommand("bracket", "write x_r(c) as a bracket of stable root-group elements");
  add_common(bracket, c);
  bracket->add_option("target", target_text, "letter such as \"x 1,0,0,-1 (3/2)\"")->required();
  bracket->add_option("--companion", companions, "root that must stay jointly stable");
  bracket->add_option("--plane", c.plane);

  auto* symbol = app.add_subcommand("symbol", "decide a symbol identity from the axioms");
  add_common(symbol, c);
  symbol->add_option("--universe", universe)->required();
  symbol->add_option("--expr", expr)->required();
  symbol->add_option("--axioms", axioms, "comma separated axiom kinds, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(c, suite, failures_only);
    if (*generic) return cmd_generic(c);
    if (*stable) return cmd_stable(c, check);
    if (*chambers) return cmd_chambers(c);
    if (*reduce) return cmd_reduce(c, word_src);
    if (*decompose) return cmd_decompose(c, r_text, p_text, a_text, b_text);
    if (*bracket) return cmd_bracket(c, target_text, companions);
    if (*symbol) return cmd_symbol(c, universe, expr, axioms);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const chev::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
