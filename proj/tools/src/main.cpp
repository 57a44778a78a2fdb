#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fusioncat/h8.hpp"
#include "fusioncat/oracle.hpp"
#include "fusioncat/projreps.hpp"
#include "fusioncat_io/io.hpp"

using fcio::json;
using fcio::Table;

namespace {

struct Options {
  std::string group_file, builtin_group, omega = "trivial", K = "e", alpha = "trivial";
  std::string format = "text", out;
  std::string L, psi, N, gamma, summands;
  bool all = false, verify_all = false;
};

struct Output {
  json doc;
  std::vector<Table> tables;
};

std::string str(long v) { return std::to_string(v); }
std::string str(const mpq_class& q) { return q.get_str(); }
std::string yes(bool b) { return b ? "yes" : "no"; }

fc::GroupPtr group(const Options& o) { return fcio::load_group(o.group_file, o.builtin_group); }
fc::Cochain omega(const Options& o, const fc::GroupPtr& g) { return fcio::load_cochain(o.omega, g, 3); }

fc::GTCategory category(const Options& o) {
  auto g = group(o);
  fc::Subgroup k = fc::parse_subgroup(g, o.K);
  return fc::make_gt_category(omega(o, g), k, fcio::load_cochain_on(o.alpha, k, 2));
}

// index of the H^2 class of psi among the data enumerated for its subgroup
int class_index(const fc::Cochain& om, const fc::Cochain& psi) {
  for (const auto& d : fc::enumerate_data(om))
    if (d.L == psi.domain() && fc::is_kx_trivial(psi - d.psi)) return d.h2_index;
  return -1;
}

Output group_info(const Options& o) {
  auto g = group(o);
  Output r;
  auto subs = fc::subgroups(g);
  auto classes = fc::conjugacy_classes_of_subgroups(g);
  json names = g->names();
  r.doc = {{"label", g->label()}, {"order", g->order()}, {"abelian", g->is_abelian()}, {"elements", names},
           {"subgroups", subs.size()}, {"subgroup_classes", json::array()}};
  r.tables.push_back({"group " + (g->label().empty() ? std::string("(from table)") : g->label()),
                      {"order", "abelian", "subgroups", "classes of subgroups"},
                      {{str(g->order()), yes(g->is_abelian()), str(static_cast<long>(subs.size())),
                        str(static_cast<long>(classes.size()))}}});
  Table t{"conjugacy classes of subgroups", {"representative", "order", "class size", "schur trivial"}, {}};
  for (const auto& c : classes) {
    const bool st = fc::is_schur_trivial(c.representative);
    t.rows.push_back({c.representative.to_string(), str(c.representative.size()),
                      str(static_cast<long>(c.members.size())), yes(st)});
    r.doc["subgroup_classes"].push_back({{"representative", fcio::subgroup_to_json(c.representative)},
                                         {"size", c.members.size()},
                                         {"schur_trivial", st}});
  }
  r.tables.push_back(t);
  return r;
}

Output modcats(const Options& o) {
  auto g = group(o);
  auto om = omega(o, g);
  auto data = o.all ? fc::enumerate_data(om) : fc::classify(om);
  Output r;
  r.doc = {{"omega", o.omega}, {"count", data.size()}, {"data", json::array()}};
  Table t{"module categories M(L,psi)", {"#", "datum", "L", "|L|", "H2 class"}, {}};
  for (size_t i = 0; i < data.size(); ++i) {
    const auto& d = data[i];
    t.rows.push_back({str(static_cast<long>(i)), d.label(), d.L.to_string(), str(d.L.size()), str(d.h2_index)});
    r.doc["data"].push_back({{"label", d.label()},
                             {"L", fcio::subgroup_to_json(d.L)},
                             {"h2_index", d.h2_index},
                             {"psi", fcio::cochain_to_json(d.psi)}});
  }
  r.tables.push_back(t);
  return r;
}

Output ranks(const Options& o) {
  auto g = group(o);
  auto t = fc::rank_table(omega(o, g), o.all);
  Output r;
  r.doc = fcio::rank_table_to_json(t);
  Table tab{"simple bimodule counts", {""}, {}};
  for (const auto& d : t.data) tab.header.push_back(d.label());
  for (size_t i = 0; i < t.data.size(); ++i) {
    std::vector<std::string> row = {t.data[i].label()};
    for (int v : t.entries[i]) row.push_back(str(v));
    tab.rows.push_back(row);
  }
  r.tables.push_back(tab);
  return r;
}

std::string orbit_string(const std::vector<int>& orb) {
  std::string s = "{";
  for (size_t i = 0; i < orb.size(); ++i) s += (i ? "," : "") + std::to_string(orb[i]);
  return s + "}";
}

Output conjugacy(const Options& o) {
  auto g = group(o);
  auto om = omega(o, g);
  fc::Subgroup L = fc::parse_subgroup(g, o.L.empty() ? "e" : o.L);
  fc::Cochain psi;
  if (o.psi.empty()) {
    auto p = fc::solve_psi(om, L);
    if (!p) throw fc::CochainError(fc::CochainError::Kind::CompatibilityViolated, "omega is nontrivial on " + L.to_string());
    psi = *p;
  } else {
    psi = fcio::load_cochain_on(o.psi, L, 2);
  }
  auto amb = fc::make_ambient(om, {psi.modulus()});
  auto a = fc::twisted_group_algebra(amb, psi);
  auto one = fc::conjugacy_classes(a);
  auto two = fc::two_vertex_classes(a, a);
  auto grp = fc::invertible_group(a);
  Output r;
  r.doc = {{"L", fcio::subgroup_to_json(L)},
           {"psi", fcio::cochain_to_json(psi)},
           {"single", {{"simples", one.num_simples}, {"invertible", one.invertible}, {"orbits", one.orbits}}},
           {"two_vertex", {{"simples", two.num_simples}, {"orbits", two.orbits}}},
           {"invertible_group",
            {{"order", grp.members.size()}, {"abelian", grp.abelian}, {"cyclic", grp.cyclic},
             {"element_orders", grp.element_orders}}}};
  r.tables.push_back({"bimodule conjugacy classes over A(" + L.to_string() + ",psi)",
                      {"base", "simples", "invertible", "orbits"},
                      {{"S", str(one.num_simples), str(static_cast<long>(one.invertible.size())),
                        str(static_cast<long>(one.orbits.size()))},
                       {"S+S", str(two.num_simples), "", str(static_cast<long>(two.orbits.size()))}}});
  Table orb{"orbits (catalogue indices)", {"base", "orbit"}, {}};
  for (const auto& x : one.orbits) orb.rows.push_back({"S", orbit_string(x)});
  for (const auto& x : two.orbits) orb.rows.push_back({"S+S", orbit_string(x)});
  r.tables.push_back(orb);
  std::string orders;
  for (int v : grp.element_orders) orders += (orders.empty() ? "" : " ") + std::to_string(v);
  r.tables.push_back({"invertible bimodules", {"order", "abelian", "cyclic", "element orders"},
                      {{str(static_cast<long>(grp.members.size())), yes(grp.abelian), yes(grp.cyclic), orders}}});
  return r;
}

Output fiber(const Options& o) {
  auto c = category(o);
  Output r;
  r.doc = {{"K", fcio::subgroup_to_json(c.K)}, {"fibers", json::array()}};
  Table t{"fiber functors of C(G,omega,K,alpha)", {"N", "gamma class", "|K cap N|", "exact factorization"}, {}};
  for (const auto& f : fc::fiber_functors(c)) {
    const int idx = class_index(c.omega, f.gamma);
    const bool exact = fc::is_exact_factorization(c.K, f.N);
    t.rows.push_back({f.N.to_string(), str(idx), str(fc::intersection(c.K, f.N).size()), yes(exact)});
    r.doc["fibers"].push_back({{"N", fcio::subgroup_to_json(f.N)},
                               {"gamma", fcio::cochain_to_json(f.gamma)},
                               {"h2_index", idx},
                               {"exact", exact}});
  }
  r.tables.push_back(t);
  return r;
}

std::string fpdim_string(const fc::FPDim& f) {
  if (f.radicand == 1) return f.coefficient.get_str();
  std::string root = "sqrt(" + std::to_string(f.radicand) + ")";
  return f.coefficient == 1 ? root : f.coefficient.get_str() + "*" + root;
}

Output algebras(const Options& o) {
  auto c = category(o);
  Output r;
  r.doc = {{"algebras", json::array()}};
  Table t{"indecomposable semisimple algebras A_M", {"datum", "g", "rho", "dim rho", "FPdim", "FPdim^2"}, {}};
  const auto& G = c.group();
  for (const auto& a : fc::classify_algebras(c)) {
    auto f2 = fc::fpdim_squared(c, a);
    auto f = fc::fpdim(c, a);
    t.rows.push_back({a.modcat.label(), G->name(a.g), str(a.rho_index), str(a.rho_dim), fpdim_string(f), str(f2)});
    r.doc["algebras"].push_back({{"datum", a.modcat.label()},
                                 {"L", fcio::subgroup_to_json(a.modcat.L)},
                                 {"g", a.g},
                                 {"rho_index", a.rho_index},
                                 {"rho_dim", a.rho_dim},
                                 {"fpdim_squared", f2.get_str()}});
  }
  r.tables.push_back(t);
  return r;
}

fc::FiberDatum pick_fiber(const fc::GTCategory& c, const Options& o) {
  auto fibers = fc::fiber_functors(c);
  if (fibers.empty()) throw fc::GTError(fc::GTError::Kind::FiberMismatch, "the category has no fiber functor");
  if (o.N.empty()) return fibers.front();
  fc::Subgroup n = fc::parse_subgroup(c.group(), o.N);
  if (o.gamma.empty()) {
    for (const auto& f : fibers)
      if (f.N == n) return f;
    throw fc::GTError(fc::GTError::Kind::FiberMismatch, "no fiber functor with N = " + n.to_string());
  }
  fc::FiberDatum f{n, fcio::load_cochain_on(o.gamma, n, 2)};
  auto p = fc::solve_psi(c.omega, n);
  // a builtin class on N is read as that class translated by the particular solution
  if (p && fc::differential(f.gamma) != fc::restrict(c.omega, n)) f.gamma = (*p + f.gamma).reduced();
  fc::check_fiber(c, f);
  return f;
}

std::vector<Table> path_tables(const fc::PathCheck& pc, json& doc) {
  Table t{"path-algebra check", {"datum", "lhs", "rhs", "commutative", "(a)", "(b)", "(c)"}, {}};
  doc["summands"] = json::array();
  for (const auto& rep : pc.reports) {
    std::vector<std::string> row = {rep.algebra.modcat.label(), str(rep.lhs), str(rep.rhs), yes(rep.commutative)};
    json j = {{"datum", rep.algebra.modcat.label()},
              {"lhs", rep.lhs},
              {"rhs", rep.rhs.get_str()},
              {"commutative", rep.commutative}};
    if (rep.exact_fact_breakdown) {
      const auto& b = *rep.exact_fact_breakdown;
      row.insert(row.end(), {yes(b.a), yes(b.b), yes(b.c)});
      j["exact_factorization"] = {{"a", b.a}, {"b", b.b}, {"c", b.c}};
    }
    t.rows.push_back(row);
    doc["summands"].push_back(j);
  }
  doc["path_algebra"] = pc.path_algebra;
  return {t, Table{"", {"path algebra"}, {{yes(pc.path_algebra)}}}};
}

Output path_check(const Options& o) {
  auto c = category(o);
  auto f = pick_fiber(c, o);
  auto all = fc::classify_algebras(c);
  std::vector<fc::AlgebraDatum> chosen;
  if (o.summands.empty()) {
    chosen = all;
  } else {
    std::stringstream ss(o.summands);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      fc::Subgroup L = fc::parse_subgroup(c.group(), tok);
      bool found = false;
      for (const auto& a : all)
        if (a.modcat.L == L) {
          chosen.push_back(a);
          found = true;
          break;
        }
      if (!found) throw fc::GTError(fc::GTError::Kind::InvalidCategory, "no classified algebra with L = " + L.to_string());
    }
  }
  Output r;
  r.doc = {{"fiber", {{"N", fcio::subgroup_to_json(f.N)}, {"h2_index", class_index(c.omega, f.gamma)}}}};
  r.tables = path_tables(fc::path_algebra_check(c, chosen, f), r.doc);
  return r;
}

std::string mult_string(const std::array<int, 5>& m) {
  std::string s;
  for (int i = 0; i < 5; ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "+";
    if (m[i] > 1) s += std::to_string(m[i]);
    s += "W" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Output h8_report(const Options& o) {
  using namespace fc::h8;
  auto h = build_h8();
  Output r;
  auto fails = check_hopf_axioms(h);
  r.doc["hopf_axioms"] = {{"ok", fails.empty()}, {"failures", fails}};
  r.tables.push_back({"H8 Hopf axioms", {"result"}, {{fails.empty() ? "all hold" : "failed: " + fails.front()}}});
  auto w = irreps(h);
  Table ir{"irreducible modules", {"name", "dim"}, {}};
  for (const auto& m : w) ir.rows.push_back({m.name, str(m.dim)});
  r.tables.push_back(ir);

  Table ma{"module algebras", {"tag", "dim", "verified", "decomposition", "<x>-summands"}, {}};
  r.doc["module_algebras"] = json::array();
  for (const auto& t : tags()) {
    auto s = builtin_module_algebra(h, t);
    bool ok = verify_module_algebra(h, s);
    auto d = decompose_module(h, s.module);
    int xs = x_summands(h, s);
    ma.rows.push_back({"(" + t + ")", str(s.module.dim), yes(ok), mult_string(d), str(xs)});
    r.doc["module_algebras"].push_back(
        {{"tag", t}, {"dim", s.module.dim}, {"verified", ok}, {"decomposition", d}, {"x_summands", xs}});
  }
  r.tables.push_back(ma);

  if (o.verify_all) {
    auto c = fc::h8_category();
    auto m = match_classification(c, h);
    Table mt{"matching (convention: " + m.convention + ")", {"L", "algebra", "m_X(M)", "FPdim^2"}, {}};
    r.doc["match"] = {{"convention", m.convention}, {"pairs", json::array()}};
    for (const auto& e : m.entries) {
      auto f2 = fc::fpdim_squared(c, e.algebra);
      mt.rows.push_back({e.algebra.modcat.L.to_string(), "(" + e.tag + ")", mult_string(e.multiplicities), str(f2)});
      r.doc["match"]["pairs"].push_back({{"L", e.algebra.modcat.L.to_string()},
                                         {"tag", e.tag},
                                         {"multiplicities", e.multiplicities},
                                         {"fpdim_squared", f2.get_str()}});
    }
    r.tables.push_back(mt);
    auto beta = fc::builtin_cochain::beta_d8(c.group());
    fc::FiberDatum f{fc::parse_subgroup(c.group(), "x,y"), {}};
    for (const auto& fib : fc::fiber_functors(c))
      if (fib.N == f.N && fc::is_kx_trivial(fib.gamma - fc::restrict(beta, f.N))) f = fib;
    json pd;
    auto pts = path_tables(fc::path_algebra_check(c, fc::classify_algebras(c), f), pd);
    pts[0].title = "path verdicts, fiber (<x,y>, mu)";
    r.tables.insert(r.tables.end(), pts.begin(), pts.end());
    r.doc["paths"] = pd;
  }
  return r;
}

int emit(const Options& o, const Output& out) {
  std::string text;
  if (o.format == "json") {
    text = out.doc.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = fcio::render_csv(out.tables);
  } else {
    text = fcio::render_text(out.tables);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw fcio::InputError("cannot write '" + o.out + "'");
    f << text;
  }
  return 0;
}

int fail(const Options& o, int code, const std::string& kind, const std::string& msg) {
  if (o.format == "json")
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
  else
    std::cerr << "error (" << kind << "): " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusioncat: module categories, bimodules and algebras in pointed and group-theoretical fusion categories"};
  app.require_subcommand(1);
  Options o;
  using Fn = Output (*)(const Options&);
  std::vector<std::pair<CLI::App*, Fn>> commands;

  auto common = [&](CLI::App* s, bool with_group = true) {
    if (with_group) {
      s->add_option("--group", o.group_file, "group JSON file");
      s->add_option("--builtin-group", o.builtin_group, "builtin group: trivial, Zn, Z2xZ2, S3, D8");
      s->add_option("--omega", o.omega, "3-cocycle file or builtin name")->capture_default_str();
    }
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    s->add_option("--out", o.out, "write output to FILE");
  };
  auto gt = [&](CLI::App* s) {
    s->add_option("--K", o.K, "subgroup K, e.g. z or x,y")->capture_default_str();
    s->add_option("--alpha", o.alpha, "2-cochain on K")->capture_default_str();
  };

  auto* gi = app.add_subcommand("group-info", "order, subgroups and Schur multipliers");
  common(gi);
  commands.push_back({gi, group_info});
  auto* mc = app.add_subcommand("modcats", "classify module categories over Vec_G^omega");
  common(mc);
  mc->add_flag("--all", o.all, "list every enumerated datum, not just class representatives");
  commands.push_back({mc, modcats});
  auto* rk = app.add_subcommand("ranks", "simple bimodule counts between module categories");
  common(rk);
  rk->add_flag("--all", o.all, "use every enumerated datum");
  commands.push_back({rk, ranks});
  auto* cj = app.add_subcommand("conjugacy", "bimodule conjugacy classes over A(L,psi) via explicit bimodules");
  common(cj);
  cj->add_option("--L", o.L, "subgroup L")->capture_default_str();
  cj->add_option("--psi", o.psi, "2-cochain on L (default: solve d(psi) = omega)");
  commands.push_back({cj, conjugacy});
  auto* fb = app.add_subcommand("fiber", "fiber functors of C(G,omega,K,alpha)");
  common(fb);
  gt(fb);
  commands.push_back({fb, fiber});
  auto* al = app.add_subcommand("algebras", "indecomposable semisimple algebras in C(G,omega,K,alpha)");
  common(al);
  gt(al);
  commands.push_back({al, algebras});
  auto* pc = app.add_subcommand("path-check", "k-commutativity of the algebras A_M under a fiber functor");
  common(pc);
  gt(pc);
  pc->add_option("--N", o.N, "fiber subgroup N (default: first fiber functor)");
  pc->add_option("--gamma", o.gamma, "2-cochain on N");
  pc->add_option("--summands", o.summands, "semicolon-separated subgroups L, e.g. 'e;x;z'");
  commands.push_back({pc, path_check});
  auto* h8 = app.add_subcommand("h8", "Kac-Paljutkin case study");
  common(h8, false);
  h8->add_flag("--verify-all", o.verify_all, "also run the matching and path verdicts");
  commands.push_back({h8, h8_report});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) return emit(o, fn(o));
  } catch (const fcio::InputError& e) {
    return fail(o, 2, "InputError", e.what());
  } catch (const fc::GroupError& e) {
    return fail(o, e.kind == fc::GroupError::Kind::BadInput ? 2 : 1, "GroupError", e.what());
  } catch (const fc::CochainError& e) {
    using CK = fc::CochainError::Kind;
    const bool parse = e.kind == CK::UnknownName || e.kind == CK::BadParams;
    return fail(o, parse ? 2 : 1, "CochainError", e.what());
  } catch (const fc::GTError& e) {
    return fail(o, 1, "GTError", e.what());
  } catch (const fc::OracleError& e) {
    return fail(o, 1, "OracleError", e.what());
  } catch (const fc::h8::H8Error& e) {
    return fail(o, 1, "H8Error", e.what());
  }
  return 2;
}
