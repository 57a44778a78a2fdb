#include <algorithm>
#include <set>

#include "fusioncat/modcat.hpp"
#include "fusioncat/oracle.hpp"
#include "support.hpp"

using namespace fc;

namespace {

struct Vec {
  GroupPtr g;
  Cochain omega;
  AmbientPtr amb;
  explicit Vec(GroupPtr grp) : Vec(grp, builtin_cochain::trivial(Subgroup::whole(grp), 3)) {}
  Vec(GroupPtr grp, Cochain w) : g(std::move(grp)), omega(std::move(w)), amb(make_ambient(omega)) {}
  AlgebraPtr alg(const std::string& l) const {
    return twisted_group_algebra(amb, builtin_cochain::trivial(parse_subgroup(g, l), 2));
  }
};

// same bimodule in a random graded basis
Bimodule rebase(const Bimodule& m, std::mt19937_64& rng) {
  const CycField& f = m.field();
  const int n = static_cast<int>(m.dims.size());
  std::vector<Mat> p(n), pinv(n);
  for (int d = 0; d < n; ++d) {
    while (true) {
      Mat r(f, m.dims[d], m.dims[d]);
      for (int i = 0; i < m.dims[d]; ++i)
        for (int j = 0; j < m.dims[d]; ++j) r(i, j) = Cyc(f, mpq_class(static_cast<long>(rng() % 7) - 3));
      if (auto inv = inverse(r)) {
        p[d] = r;
        pinv[d] = *inv;
        break;
      }
    }
  }
  Bimodule out = m;
  const auto& g = *m.A->ambient()->group();
  const auto& la = m.A->subgroup().elements();
  const auto& lb = m.B->subgroup().elements();
  for (size_t a = 0; a < la.size(); ++a)
    for (int d = 0; d < n; ++d)
      if (m.dims[d]) out.left[a][d] = p[g.mul(la[a], d)] * m.left[a][d] * pinv[d];
  for (size_t b = 0; b < lb.size(); ++b)
    for (int d = 0; d < n; ++d)
      if (m.dims[d]) out.right[b][d] = p[g.mul(d, lb[b])] * m.right[b][d] * pinv[d];
  return out;
}

}  // namespace

TEST_CASE("twisted group algebras are associative") {
  for (auto [g, w] : {std::pair{builtin::klein(), builtin_cochain::trivial(Subgroup::whole(builtin::klein()), 3)},
                      std::pair{builtin::s3(), builtin_cochain::trivial(Subgroup::whole(builtin::s3()), 3)},
                      std::pair{builtin::d8(), builtin_cochain::omega_d8(builtin::d8())}}) {
    auto amb = make_ambient(w);
    for (const auto& d : enumerate_data(w)) CHECK(check_associativity(*twisted_group_algebra(amb, d.psi)) == "");
  }
  auto amb = make_ambient(builtin_cochain::omega_d8(builtin::d8()));
  CHECK_THROWS_AS(twisted_group_algebra(amb, builtin_cochain::trivial(parse_subgroup(builtin::d8(), "xz"), 2)), OracleError);
}

TEST_CASE("unit and simple algebras") {
  Vec s3(builtin::s3());
  auto unit = s3.alg("e");
  CHECK(unit->dim() == 1);
  CHECK(regular_bimodule(unit).total_dim() == 1);

  auto k = builtin::klein();
  Vec vk(k);
  auto amu = twisted_group_algebra(vk.amb, builtin_cochain::mu_klein(k));
  CHECK(amu->dim() == 4);
  CHECK(simple_catalogue(amu, vk.alg("e")).simples.size() == 1);

  Vec d8(builtin::d8());
  auto ga = d8.alg("x,y,z");
  auto cat = simple_catalogue(ga, ga);
  CHECK(std::count(cat.coset_rep.begin(), cat.coset_rep.end(), d8.g->identity()) == 5);
}

TEST_CASE("free bimodules") {
  Vec s3(builtin::s3());
  auto e = s3.alg("e");
  for (int g = 0; g < 6; ++g) {
    auto f = free_bimodule(e, e, g);
    CHECK(f.total_dim() == 1);
    CHECK(f.support() == std::vector<int>{g});
    CHECK(is_simple(f));
  }
  auto as = s3.alg("s");
  const int r = s3.g->index_of("r");
  auto f = free_bimodule(as, as, r);
  CHECK(f.total_dim() == 4);
  const auto supp = f.support();
  std::set<int> support(supp.begin(), supp.end());
  std::set<int> expect;
  for (const char* n : {"r", "r2", "rs", "r2s"}) expect.insert(s3.g->index_of(n));
  CHECK(support == expect);
  CHECK(is_simple(f));
  CHECK(check_bimodule(f) == "");
  auto ar = s3.alg("r");
  CHECK(free_bimodule(as, ar, 0).total_dim() == 6);
}

TEST_CASE("hom spaces and semisimplicity") {
  Vec s3(builtin::s3());
  auto as = s3.alg("s");
  auto ar = s3.alg("r");
  for (auto [a, b] : {std::pair{as, as}, std::pair{as, ar}, std::pair{ar, ar}}) {
    auto cat = simple_catalogue(a, b);
    for (const auto& s : cat.simples) CHECK(hom_dim(s, s) == 1);
    for (int g = 0; g < 6; ++g) {
      auto f = free_bimodule(a, b, g);
      int sq = 0;
      for (const auto& s : cat.simples) {
        const int h = hom_dim(s, f);
        sq += h * h;
      }
      CHECK(sq == hom_dim(f, f));
    }
  }
}

TEST_CASE("decompose") {
  Vec s3(builtin::s3());
  auto as = s3.alg("s");
  auto parts = decompose(free_bimodule(as, as, s3.g->identity()));
  CHECK(parts.size() == 2);
  for (const auto& p : parts) {
    CHECK(is_simple(p));
    CHECK(p.total_dim() == 2);
  }
  auto simple = simple_catalogue(as, as).simples.front();
  CHECK(decompose(simple).size() == 1);

  auto k = builtin::klein();
  Vec vk(k);
  auto a1 = vk.alg("x,y");
  auto amu = twisted_group_algebra(vk.amb, builtin_cochain::mu_klein(k));
  CHECK(simple_catalogue(a1, amu).simples.size() == 1);
}

TEST_CASE("decomposition does not depend on the basis") {
  auto rng = fct::seeded_rng("rebase");
  Vec d8(builtin::d8());
  auto a = d8.alg("z");
  auto b = d8.alg("x,y");
  for (int g : {0, 1, 3}) {
    auto f = free_bimodule(a, b, g);
    auto p1 = decompose(f);
    auto p2 = decompose(rebase(f, rng));
    REQUIRE(p1.size() == p2.size());
    std::vector<bool> used(p2.size(), false);
    for (const auto& x : p1) {
      bool matched = false;
      for (size_t j = 0; j < p2.size() && !matched; ++j)
        if (!used[j] && isomorphic_simples(x, p2[j])) used[j] = matched = true;
      CHECK(matched);
    }
  }
}

TEST_CASE("simple dimensions follow the stabilizer formula") {
  for (auto [g, w] : {std::pair{builtin::s3(), builtin_cochain::trivial(Subgroup::whole(builtin::s3()), 3)},
                      std::pair{builtin::d8(), builtin_cochain::omega_d8(builtin::d8())}}) {
    auto amb = make_ambient(w);
    auto data = classify(w);
    for (const auto& di : data)
      for (const auto& dj : data) {
        auto ai = twisted_group_algebra(amb, di.psi), aj = twisted_group_algebra(amb, dj.psi);
        auto cat = simple_catalogue(ai, aj);
        for (int r : double_cosets(di.L, dj.L).representatives) {
          const int stab = intersection(di.L, conjugate(dj.L, r)).size();
          std::multiset<int> expect, got;
          for (int d : projective_irrep_dims(mixed_cocycle(di.psi, dj.psi, w, r)))
            expect.insert(di.L.size() * dj.L.size() * d / stab);
          for (size_t s = 0; s < cat.simples.size(); ++s)
            if (cat.coset_rep[s] == r) got.insert(cat.simples[s].total_dim());
          CHECK(got == expect);
        }
      }
  }
}

TEST_CASE("tensor products and duals") {
  Vec s3(builtin::s3());
  auto as = s3.alg("s");
  auto ar = s3.alg("r");
  auto unit_s = regular_bimodule(as);
  for (const auto& n : simple_catalogue(as, ar).simples) {
    auto t = tensor_over(unit_s, n);
    CHECK(check_bimodule(t) == "");
    CHECK(is_simple(t));
    CHECK(isomorphic_simples(t, n));
  }
  CHECK(is_invertible(unit_s));
  auto e = s3.alg("e");
  for (const auto& x : simple_catalogue(e, e).simples) {
    CHECK(is_invertible(x));
    CHECK(isomorphic_simples(tensor_over(x, dual_bimodule(x)), regular_bimodule(e)));
  }
  CHECK(!is_invertible(free_bimodule(as, as, s3.g->index_of("r"))));
}

TEST_CASE("conjugation orbits") {
  Vec s3(builtin::s3());
  auto e = s3.alg("e");
  auto rep = conjugacy_classes(e);
  CHECK(rep.num_simples == 6);
  CHECK(rep.invertible.size() == 6);
  CHECK(rep.orbits.size() == 3);
  // orbits are closed under every invertible, not just a generating set
  auto cat = simple_catalogue(e, e);
  std::vector<int> orbit_of(cat.simples.size(), -1);
  for (size_t o = 0; o < rep.orbits.size(); ++o)
    for (int s : rep.orbits[o]) orbit_of[s] = static_cast<int>(o);
  for (int x : rep.invertible)
    for (size_t s = 0; s < cat.simples.size(); ++s) {
      auto img = tensor_over(tensor_over(dual_bimodule(cat.simples[x]), cat.simples[s]), cat.simples[x]);
      CHECK(orbit_of[cat.find(img)] == orbit_of[s]);
    }

  CHECK(conjugacy_classes(s3.alg("r,s")).orbits.size() == 3);
  CHECK(two_vertex_classes(s3.alg("s"), s3.alg("s")).orbits.size() == 2);
  CHECK(two_vertex_classes(s3.alg("r"), s3.alg("r")).orbits.size() == 1);
  Vec triv(builtin::trivial());
  CHECK(two_vertex_classes(triv.alg("e"), triv.alg("e")).orbits.size() == 1);
}

TEST_CASE("invertible bimodules over A(<r>,1)") {
  // All six simples are invertible. The three on the coset s are
  // 3-dimensional and square to the unit; a cyclic group of order 6 has only
  // one involution, so the oracle finds S3.
  Vec s3(builtin::s3());
  auto ig = invertible_group(s3.alg("r"));
  CHECK(ig.members.size() == 6);
  CHECK(!ig.abelian);
  std::multiset<int> orders(ig.element_orders.begin(), ig.element_orders.end());
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
  // the group table is a latin square
  for (const auto& row : ig.table) {
    std::set<int> s(row.begin(), row.end());
    CHECK(s.size() == ig.members.size());
  }
}
