#include <algorithm>
#include <map>
#include <set>

#include "fusioncat/modcat.hpp"
#include "fusioncat/projreps.hpp"
#include "support.hpp"

using namespace fc;

namespace {

const ModCatDatum& find(const std::vector<ModCatDatum>& v, const Subgroup& l, int h2) {
  for (const auto& d : v)
    if (d.L == l && d.h2_index == h2) return d;
  throw std::runtime_error("datum not found");
}

std::vector<std::pair<std::string, Cochain>> categories() {
  auto k = builtin::klein(), s3 = builtin::s3(), d8 = builtin::d8();
  return {{"Z2xZ2", builtin_cochain::trivial(Subgroup::whole(k), 3)},
          {"S3", builtin_cochain::trivial(Subgroup::whole(s3), 3)},
          {"D8", builtin_cochain::trivial(Subgroup::whole(d8), 3)},
          {"D8 omega", builtin_cochain::omega_d8(d8)}};
}

// equivalence classes as sets of (L elements, h2 index)
using Key = std::pair<std::vector<int>, int>;
std::set<std::set<Key>> partition(const std::vector<ModCatDatum>& data) {
  std::set<std::set<Key>> out;
  std::vector<bool> used(data.size(), false);
  for (size_t i = 0; i < data.size(); ++i) {
    if (used[i]) continue;
    std::set<Key> cls;
    for (size_t j = i; j < data.size(); ++j)
      if (!used[j] && are_equivalent(data[i], data[j])) {
        used[j] = true;
        cls.insert({data[j].L.elements(), data[j].h2_index});
      }
    out.insert(cls);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_data") {
  auto k = builtin::klein();
  auto kd = enumerate_data(builtin_cochain::trivial(Subgroup::whole(k), 3));
  CHECK(kd.size() == 6);
  auto d8 = builtin::d8();
  CHECK(enumerate_data(builtin_cochain::trivial(Subgroup::whole(d8), 3)).size() == 13);
  for (const auto& [name, w] : categories()) {
    auto data = enumerate_data(w);
    bool has_e = false;
    for (const auto& d : data) {
      CHECK(differential(d.psi) == restrict(w, d.L));
      if (d.L.size() == 1) has_e = true;
    }
    CHECK(has_e);
  }
  CHECK_THROWS_AS(make_datum(Subgroup::whole(k), builtin_cochain::mu_klein(k), builtin_cochain::omega_d8(d8)), CochainError);
  Subgroup c4 = parse_subgroup(d8, "xz");
  CHECK_THROWS_AS(make_datum(c4, builtin_cochain::trivial(c4, 2), builtin_cochain::omega_d8(d8)), CochainError);
}

TEST_CASE("are_equivalent examples") {
  auto k = builtin::klein();
  auto kd = enumerate_data(builtin_cochain::trivial(Subgroup::whole(k), 3));
  auto cert = are_equivalent(kd[0], kd[0]);
  REQUIRE(cert);
  CHECK(cert->g == k->identity());
  CHECK(!are_equivalent(find(kd, Subgroup::whole(k), 0), find(kd, Subgroup::whole(k), 1)));

  auto d8 = builtin::d8();
  auto w = builtin_cochain::omega_d8(d8);
  auto wd = enumerate_data(w);
  Subgroup n = parse_subgroup(d8, "x,y");
  CHECK(are_equivalent(find(wd, n, 0), find(wd, n, 1)));
}

TEST_CASE("are_equivalent is an equivalence relation") {
  for (const auto& [name, w] : categories()) {
    INFO(name);
    auto data = enumerate_data(w);
    const size_t n = data.size();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        auto c = are_equivalent(data[i], data[j]);
        eq[i][j] = static_cast<bool>(c);
        if (c) CHECK(conjugate(data[j].L, c->g) == data[i].L);
      }
    for (size_t i = 0; i < n; ++i) {
      CHECK(eq[i][i]);
      for (size_t j = 0; j < n; ++j) {
        CHECK(eq[i][j] == eq[j][i]);
        for (size_t l = 0; l < n; ++l)
          if (eq[i][j] && eq[j][l]) CHECK(eq[i][l]);
      }
    }
  }
}

TEST_CASE("classify counts") {
  auto cats = categories();
  CHECK(classify(cats[0].second).size() == 6);
  CHECK(classify(cats[1].second).size() == 4);
  CHECK(classify(cats[2].second).size() == 11);
  auto d8 = builtin::d8();
  auto c = classify(cats[3].second);
  std::set<std::vector<int>> ls;
  for (const auto& d : c) ls.insert(d.L.elements());
  std::set<std::vector<int>> expect;
  for (const char* s : {"e", "x", "xy", "z", "x,y", "xy,z"}) expect.insert(parse_subgroup(d8, s).elements());
  CHECK(ls == expect);
  CHECK(c.size() == 6);
  for (int n = 1; n <= 12; ++n)
    for (int ell = 0; ell < n; ++ell) {
      int divisors = 0;
      for (int m = 1; m <= n; ++m)
        if (n % m == 0 && ell % (n / m) == 0) ++divisors;
      CHECK(static_cast<int>(classify(builtin_cochain::omega_cyclic(builtin::cyclic(n), ell)).size()) == divisors);
    }
}

TEST_CASE("classify does not depend on enumeration order") {
  auto rng = fct::seeded_rng("classify order");
  for (const auto& [name, w] : categories()) {
    INFO(name);
    auto data = enumerate_data(w);
    const auto ref = partition(data);
    CHECK(ref.size() == classify_data(data).size());
    for (int t = 0; t < 5; ++t) {
      std::shuffle(data.begin(), data.end(), rng);
      CHECK(partition(data) == ref);
      CHECK(classify_data(data).size() == ref.size());
    }
  }
}

TEST_CASE("omega-trivial count by orbit counting") {
  for (auto g : {builtin::trivial(), builtin::cyclic(4), builtin::cyclic(6), builtin::klein(), builtin::s3(), builtin::d8()})
    CHECK(static_cast<int>(classify(builtin_cochain::trivial(Subgroup::whole(g), 3)).size()) == omega_trivial_count(g));
}

TEST_CASE("simple bimodule labels") {
  auto s3 = builtin::s3();
  auto sd = enumerate_data(builtin_cochain::trivial(Subgroup::whole(s3), 3));
  CHECK(simple_bimodules(sd[0], sd[0]).size() == 6);
  auto k = builtin::klein();
  auto kd = enumerate_data(builtin_cochain::trivial(Subgroup::whole(k), 3));
  CHECK(bimodule_count(find(kd, parse_subgroup(k, "x"), 0), find(kd, parse_subgroup(k, "y"), 0)) == 1);
  auto d8 = builtin::d8();
  auto dd = enumerate_data(builtin_cochain::trivial(Subgroup::whole(d8), 3));
  // <xy,z> is normal, so x<z>x = <xyz> stays inside it: two double cosets,
  // each with a stabilizer of order 2
  auto labels = simple_bimodules(find(dd, parse_subgroup(d8, "xy,z"), 0), find(dd, parse_subgroup(d8, "z"), 0));
  CHECK(labels.size() == 4);
  for (const auto& l : labels) {
    CHECK(l.rho_index < count_mij(find(dd, parse_subgroup(d8, "xy,z"), 0).psi, find(dd, parse_subgroup(d8, "z"), 0).psi,
                                  dd[0].omega, l.g));
    CHECK(l.support.size() == 4);
  }
}

TEST_CASE("rank tables") {
  auto k = builtin::klein();
  auto t = rank_table(builtin_cochain::trivial(Subgroup::whole(k), 3));
  const std::vector<std::vector<int>> expect = {{4, 2, 2, 2, 1, 1}, {2, 4, 1, 1, 2, 2}, {2, 1, 4, 1, 2, 2},
                                                {2, 1, 1, 4, 2, 2}, {1, 2, 2, 2, 4, 1}, {1, 2, 2, 2, 1, 4}};
  CHECK(t.entries == expect);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) CHECK(t.entries[i][j] == t.entries[j][i]);

  auto triv = rank_table(builtin_cochain::trivial(Subgroup::whole(builtin::trivial()), 3));
  CHECK(triv.entries == std::vector<std::vector<int>>{{1}});

  // abelian groups: the closed double-coset formula
  for (auto g : {builtin::klein(), builtin::cyclic(4), builtin::cyclic(6), builtin::cyclic(8)}) {
    Cochain w = builtin_cochain::trivial(Subgroup::whole(g), 3);
    auto data = enumerate_data(w);
    auto rt = rank_table(data);
    for (size_t i = 0; i < data.size(); ++i)
      for (size_t j = 0; j < data.size(); ++j) {
        const auto& a = data[i];
        const auto& b = data[j];
        const int cap = intersection(a.L, b.L).size();
        const int cosets = g->order() * cap / (a.L.size() * b.L.size());
        const int reg = regular_classes(mixed_cocycle(a.psi, b.psi, w, g->identity())).count;
        CHECK(rt.entries[i][j] == cosets * reg);
      }
  }
}

TEST_CASE("labels") {
  auto k = builtin::klein();
  auto kd = enumerate_data(builtin_cochain::trivial(Subgroup::whole(k), 3));
  std::set<std::string> names;
  for (const auto& d : kd) names.insert(d.label());
  CHECK(names.size() == 6);
}
