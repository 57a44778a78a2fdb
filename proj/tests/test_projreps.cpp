#include "fusioncat/oracle.hpp"
#include "fusioncat/projreps.hpp"
#include "support.hpp"

using namespace fc;

namespace {

Cochain random_coboundary(const Subgroup& l, int64_t m, std::mt19937_64& rng) {
  Cochain eta(l, 1, m);
  for (int a : l.elements())
    if (a != l.parent()->identity()) eta.set({a}, static_cast<int64_t>(rng() % m));
  return differential(eta);
}

}  // namespace

TEST_CASE("regularity basics") {
  auto k = builtin::klein();
  Subgroup G = Subgroup::whole(k);
  Cochain mu = builtin_cochain::mu_klein(k);
  CHECK(is_regular(k->identity(), mu));
  for (int g = 1; g < 4; ++g) CHECK(!is_regular(g, mu));
  for (int g = 0; g < 4; ++g) CHECK(is_regular(g, builtin_cochain::trivial(G, 2)));
}

TEST_CASE("irreducible projective representation counts") {
  auto d8 = builtin::d8();
  CHECK(count_irreducible_projreps(builtin_cochain::trivial(Subgroup::whole(d8), 2)) == 5);
  auto k = builtin::klein();
  Cochain mu = builtin_cochain::mu_klein(k);
  CHECK(count_irreducible_projreps(mu) == 1);
  CHECK(count_irreducible_projreps(mixed_cocycle(mu, mu, builtin_cochain::trivial(Subgroup::whole(k), 3), 0)) == 4);
}

TEST_CASE("count_mij") {
  auto k = builtin::klein();
  Subgroup G = Subgroup::whole(k);
  Cochain one2 = builtin_cochain::trivial(G, 2), one3 = builtin_cochain::trivial(G, 3);
  Cochain mu = builtin_cochain::mu_klein(k);
  Subgroup e = Subgroup::trivial(k);
  for (int g = 0; g < 4; ++g)
    CHECK(count_mij(builtin_cochain::trivial(e, 2), builtin_cochain::trivial(e, 2), one3, g) == 1);
  CHECK(count_mij(one2, mu, one3, 0) == 1);
  CHECK(count_mij(mu, mu, one3, 0) == 4);
  MijTable t(mu, mu, one3);
  CHECK(t(0) == 4);
}

TEST_CASE("Schur triviality") {
  for (int n = 1; n <= 12; ++n) CHECK(is_sub_schur_trivial(builtin::cyclic(n)));
  CHECK(is_sub_schur_trivial(builtin::s3()));
  CHECK(!is_schur_trivial(Subgroup::whole(builtin::d8())));
  CHECK(!is_sub_schur_trivial(builtin::klein()));
}

TEST_CASE("regularity is a class function and conjugation invariant") {
  auto rng = fct::seeded_rng("regularity");
  auto d8 = builtin::d8();
  for (const auto& l : subgroups(d8))
    for (const auto& cls : h2_classes(l).class_representatives) {
      auto rep = regular_classes(cls);
      CHECK(rep.count == static_cast<int>(rep.regular_classes.size()));
      for (const auto& c : rep.regular_classes)
        for (int g : c) CHECK(is_regular(g, cls));
      for (int t = 0; t < 4; ++t) {
        Cochain twisted = cls + random_coboundary(l, 4, rng);
        for (int g : l.elements()) CHECK(is_regular(g, cls) == is_regular(g, twisted));
      }
      for (int g : l.elements())
        for (int h : l.elements()) CHECK(is_regular(g, cls) == is_regular(d8->conj(h, g), cls));
    }
}

TEST_CASE("counts agree with the concrete twisted algebra") {
  auto check_group = [](const GroupPtr& g, const Cochain& omega) {
    auto amb = make_ambient(omega);
    for (const auto& l : subgroups(g)) {
      auto psi0 = solve_psi(omega, l);
      if (!psi0) continue;
      for (const auto& cls : h2_classes(l).class_representatives) {
        Cochain phi = (*psi0 + cls).reduced();
        // a simple (A,A)-bimodule count at g = e is the number of irreducible
        // projective representations of the mixed cocycle
        Cochain mixed = mixed_cocycle(phi, phi, omega, g->identity());
        auto dims = projective_irrep_dims(mixed);
        CHECK(static_cast<int>(dims.size()) == count_irreducible_projreps(mixed));
        int sq = 0;
        for (int d : dims) sq += d * d;
        CHECK(sq == l.size());
        auto a = twisted_group_algebra(amb, phi);
        auto cat = simple_catalogue(a, a);
        int at_e = 0;
        for (int r : cat.coset_rep)
          if (r == g->identity()) ++at_e;
        CHECK(at_e == count_irreducible_projreps(mixed));
      }
    }
  };
  for (auto g : {builtin::klein(), builtin::s3(), builtin::d8()})
    check_group(g, builtin_cochain::trivial(Subgroup::whole(g), 3));
  check_group(builtin::d8(), builtin_cochain::omega_d8(builtin::d8()));
}
