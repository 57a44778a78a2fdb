#include <functional>

#include "fusioncat/cochain.hpp"
#include "support.hpp"

using namespace fc;

namespace {

// random normalized cochain with exponents mod m
Cochain random_cochain(const Subgroup& l, int degree, int64_t m, std::mt19937_64& rng) {
  Cochain c(l, degree, m);
  std::uniform_int_distribution<int64_t> dist(0, m - 1);
  const int e = l.parent()->identity();
  std::vector<int> args(degree);
  std::function<void(int)> rec = [&](int k) {
    if (k == degree) {
      for (int a : args)
        if (a == e) return;
      c.set(args, dist(rng));
      return;
    }
    for (int a : l.elements()) {
      args[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  return c;
}

// Is phi (degree 2) a coboundary of some mu_m-valued 1-cochain? Exhaustive
// search with forced propagation eta(ab) = eta(a) + eta(b) - phi(a,b); a
// solution for -phi exists iff one for phi does, so the sign convention of
// the differential does not matter.
bool brute_degree2(const Cochain& phi, int64_t m) {
  const auto& el = phi.domain().elements();
  const auto& g = *phi.group();
  const int n = static_cast<int>(el.size());
  const Cochain p = phi.at_modulus(m);
  std::vector<int64_t> eta(g.order(), -1);
  eta[g.identity()] = 0;
  auto norm = [m](int64_t v) { return ((v % m) + m) % m; };
  std::function<bool()> dfs = [&]() -> bool {
    // propagate
    std::vector<int64_t> saved = eta;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a : el)
        for (int b : el) {
          if (eta[a] < 0 || eta[b] < 0) continue;
          const int ab = g.mul(a, b);
          const int64_t want = norm(eta[a] + eta[b] - p(a, b));
          if (eta[ab] < 0) {
            eta[ab] = want;
            changed = true;
          } else if (eta[ab] != want) {
            eta = saved;
            return false;
          }
        }
    }
    int free = -1;
    for (int k = 0; k < n && free < 0; ++k)
      if (eta[el[k]] < 0) free = el[k];
    if (free < 0) return true;
    for (int64_t v = 0; v < m; ++v) {
      eta[free] = v;
      if (dfs()) return true;
    }
    eta = saved;
    return false;
  };
  return dfs();
}

// degree 3 on a group of order <= 3: enumerate every normalized 2-cochain
bool brute_degree3(const Cochain& phi, int64_t m) {
  const Subgroup& l = phi.domain();
  const Cochain p = phi.at_modulus(m);
  std::vector<std::pair<int, int>> slots;
  const int e = l.parent()->identity();
  for (int a : l.elements())
    for (int b : l.elements())
      if (a != e && b != e) slots.push_back({a, b});
  std::vector<int64_t> v(slots.size(), 0);
  while (true) {
    Cochain eta(l, 2, m);
    for (size_t s = 0; s < slots.size(); ++s) eta.set({slots[s].first, slots[s].second}, v[s]);
    const Cochain d = differential(eta);
    if (d == p || d == -p) return true;
    size_t i = 0;
    while (i < v.size() && ++v[i] == m) v[i++] = 0;
    if (i == v.size()) return false;
  }
}

}  // namespace

TEST_CASE("normalization and table size") {
  auto d8 = builtin::d8();
  Subgroup G = Subgroup::whole(d8);
  auto rng = fct::seeded_rng("normalization");
  Cochain c = random_cochain(G, 3, 4, rng);
  CHECK(c.is_normalized());
  CHECK(c.values().size() == 512);
  // a cocycle that is not normalized: the coboundary of an arbitrary 1-cochain plus beta
  Cochain eta(G, 1, 6);
  for (auto& v : eta.mutable_values()) v = static_cast<int64_t>(rng() % 6);
  Cochain raw = differential(eta) + builtin_cochain::beta_d8(d8);
  CHECK(!raw.is_normalized());
  Cochain n = normalized_from_table(G, 2, raw.modulus(), raw.values());
  CHECK(n.is_normalized());
  CHECK(is_kx_trivial(n - builtin_cochain::beta_d8(d8)));
  // a table whose identity row is not constant cannot be normalized by a coboundary
  std::vector<int64_t> bad(64, 0);
  bad[1] = 1;
  CHECK_THROWS_AS(normalized_from_table(G, 2, 2, bad), CochainError);
}

TEST_CASE("differential of builtin cocycles") {
  auto k = builtin::klein();
  CHECK(is_cocycle(builtin_cochain::mu_klein(k)));
  CHECK(differential(builtin_cochain::trivial(Subgroup::whole(k), 2)).is_zero());
  auto d8 = builtin::d8();
  CHECK(is_cocycle(builtin_cochain::beta_d8(d8)));
  CHECK(is_cocycle(builtin_cochain::omega_d8(d8)));
  CHECK(is_cocycle(builtin_cochain::omega_d8(d8, true)));
  for (int n = 1; n <= 12; ++n)
    for (int l = 0; l < n; ++l) CHECK(is_cocycle(builtin_cochain::omega_cyclic(builtin::cyclic(n), l)));
}

TEST_CASE("d of d vanishes on random cochains") {
  auto rng = fct::seeded_rng("d∘d");
  auto d8 = builtin::d8();
  Subgroup G = Subgroup::whole(d8);
  for (int t = 0; t < 500; ++t) CHECK(differential(differential(random_cochain(G, 1, 8, rng))).is_zero());
  for (int t = 0; t < 50; ++t) CHECK(differential(differential(random_cochain(G, 2, 4, rng))).is_zero());
  auto s3 = Subgroup::whole(builtin::s3());
  for (int t = 0; t < 50; ++t) CHECK(differential(differential(random_cochain(s3, 2, 6, rng))).is_zero());
}

TEST_CASE("restriction") {
  auto d8 = builtin::d8();
  CHECK(restrict(builtin_cochain::omega_d8(d8), Subgroup::trivial(d8)).is_zero());
  // beta on <x,y> against mu after the relabelling x -> x, y -> y
  auto k = builtin::klein();
  Cochain b = restrict(builtin_cochain::beta_d8(d8), parse_subgroup(d8, "x,y"));
  Cochain mu = builtin_cochain::mu_klein(k);
  const int map[4] = {d8->index_of("e"), d8->index_of("x"), d8->index_of("y"), d8->index_of("xy")};
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) CHECK(b.at_modulus(2)(map[a], map[c]) == mu.at_modulus(2)(a, c));
}

TEST_CASE("conjugate_cochain") {
  auto d8 = builtin::d8();
  auto rng = fct::seeded_rng("conjugation");
  Cochain psi = random_cochain(Subgroup::whole(d8), 2, 4, rng);
  CHECK(conjugate_cochain(psi, d8->identity()) == psi);
  Cochain on_y = random_cochain(parse_subgroup(d8, "y"), 2, 2, rng);
  CHECK(conjugate_cochain(on_y, d8->index_of("z")).domain() == parse_subgroup(d8, "x"));

  auto s3 = builtin::s3();
  for (const auto& l : subgroups(s3))
    for (int t = 0; t < 3; ++t) {
      Cochain p = random_cochain(l, 2, 6, rng);
      for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h)
          CHECK(conjugate_cochain(conjugate_cochain(p, g), h) == conjugate_cochain(p, s3->mul(g, h)));
    }
}

TEST_CASE("omega_correction") {
  auto d8 = builtin::d8();
  Cochain one = builtin_cochain::trivial(Subgroup::whole(d8), 3);
  for (int g = 0; g < 8; ++g) CHECK(omega_correction(one, g).is_zero());

  // d(psi^{g^-1} Omega_{g^-1}) = omega on gLg^-1 for every solvable L
  Cochain w = builtin_cochain::omega_d8(d8);
  int checked = 0;
  for (const auto& l : subgroups(d8)) {
    auto psi0 = solve_psi(w, l);
    if (!psi0) continue;
    for (const auto& cls : h2_classes(l).class_representatives) {
      Cochain psi = *psi0 + cls;
      for (int g = 0; g < 8; ++g) {
        const int gi = d8->inv(g);
        Subgroup lg = conjugate(l, g);
        CHECK(differential(conjugate_cochain(psi, gi) + restrict(omega_correction(w, gi), lg)) == restrict(w, lg));
        ++checked;
      }
    }
  }
  CHECK(checked == 80);

  Cochain oz = restrict(omega_correction(w, d8->index_of("z")), parse_subgroup(d8, "x,y"));
  CHECK(is_cocycle(oz));
  CHECK(!is_kx_trivial(oz));
}

TEST_CASE("mixed_cocycle") {
  auto k = builtin::klein();
  Subgroup G = Subgroup::whole(k);
  Cochain one2 = builtin_cochain::trivial(G, 2), one3 = builtin_cochain::trivial(G, 3);
  Cochain mu = builtin_cochain::mu_klein(k);
  CHECK(mixed_cocycle(one2, one2, one3, 0).is_zero());
  Cochain s = mixed_cocycle(mu, mu, one3, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(s(a, b) == s(b, a));
  CHECK(is_kx_trivial(mixed_cocycle(mu, one2, one3, 0) - mu));
}

TEST_CASE("kx_coboundary_witness basics") {
  auto k = builtin::klein();
  Subgroup G = Subgroup::whole(k);
  auto w = kx_coboundary_witness(builtin_cochain::trivial(G, 2));
  REQUIRE(w);
  CHECK(w->eta.is_zero());
  CHECK(!kx_coboundary_witness(builtin_cochain::mu_klein(k)));
  for (int n = 1; n <= 12; ++n) {
    auto zn = builtin::cyclic(n);
    for (int m = 1; m <= n; ++m) {
      if (n % m) continue;
      Subgroup l = Subgroup::generated(zn, {m % n});
      for (int ell = 0; ell < n; ++ell) {
        const bool trivial = is_kx_trivial(restrict(builtin_cochain::omega_cyclic(zn, ell), l));
        CHECK(trivial == (ell % (n / m) == 0));
      }
    }
  }
}

TEST_CASE("kx_coboundary_witness is sound and complete on small groups") {
  auto rng = fct::seeded_rng("witness");
  std::vector<Subgroup> domains;
  for (auto g : {builtin::klein(), builtin::s3(), builtin::d8(), builtin::cyclic(4), builtin::cyclic(3)})
    for (const auto& l : subgroups(g)) domains.push_back(l);
  int trivial = 0, nontrivial = 0;
  for (const auto& l : domains) {
    auto reps = h2_classes(l).class_representatives;
    for (int64_t m : {2, 4})
      for (int t = 0; t < 3; ++t) {
        Cochain phi = differential(random_cochain(l, 1, m, rng));
        const Cochain& cls = reps[rng() % reps.size()];
        if (m % cls.modulus() == 0) phi = phi + cls;
        auto wit = kx_coboundary_witness(phi);
        if (wit) {
          CHECK(differential(wit->eta) == phi);
          ++trivial;
        } else {
          ++nontrivial;
        }
        CHECK(static_cast<bool>(wit) == brute_degree2(phi, phi.modulus() * l.size()));
      }
  }
  CHECK(trivial > 0);
  CHECK(nontrivial > 0);

  for (auto g : {builtin::cyclic(2), builtin::cyclic(3)}) {
    Subgroup G = Subgroup::whole(g);
    std::vector<Cochain> cases;
    for (int64_t m : {2, 4}) cases.push_back(differential(random_cochain(G, 2, m, rng)));
    if (g->order() == 2) cases.push_back(builtin_cochain::omega_cyclic(g, 1));
    for (const auto& phi : cases) {
      auto wit = kx_coboundary_witness(phi);
      if (wit) CHECK(differential(wit->eta) == phi);
      CHECK(static_cast<bool>(wit) == brute_degree3(phi, phi.modulus() * g->order()));
    }
  }
}

TEST_CASE("solve_psi") {
  auto d8 = builtin::d8();
  auto one = solve_psi(builtin_cochain::trivial(Subgroup::whole(d8), 3), parse_subgroup(d8, "x,y"));
  REQUIRE(one);
  CHECK(one->is_zero());
  Cochain w = builtin_cochain::omega_d8(d8);
  auto psi = solve_psi(w, parse_subgroup(d8, "x,y"));
  REQUIRE(psi);
  CHECK(differential(*psi) == restrict(w, parse_subgroup(d8, "x,y")));
  CHECK(!solve_psi(w, parse_subgroup(d8, "xz")));
}

TEST_CASE("H2 classes") {
  for (int n = 1; n <= 12; ++n) CHECK(h2_classes(Subgroup::whole(builtin::cyclic(n))).class_representatives.size() == 1);
  for (const auto& l : subgroups(builtin::s3())) CHECK(h2_classes(l).class_representatives.size() == 1);
  auto k = builtin::klein();
  auto hk = h2_classes(Subgroup::whole(k));
  REQUIRE(hk.class_representatives.size() == 2);
  CHECK(hk.class_representatives[0].is_zero());
  CHECK(is_kx_trivial(hk.class_representatives[1] - builtin_cochain::mu_klein(k)));
  auto d8 = builtin::d8();
  auto hd = h2_classes(Subgroup::whole(d8));
  REQUIRE(hd.class_representatives.size() == 2);
  CHECK(is_kx_trivial(hd.class_representatives[1] - builtin_cochain::beta_d8(d8)));
  // product of divisors = number of classes; representatives pairwise distinct
  for (auto g : {k, d8, builtin::s3()})
    for (const auto& l : subgroups(g)) {
      auto r = h2_classes(l);
      int64_t prod = 1;
      for (auto d : r.elementary_divisors) prod *= d;
      CHECK(prod == static_cast<int64_t>(r.class_representatives.size()));
      for (size_t i = 0; i < r.class_representatives.size(); ++i) {
        CHECK(is_cocycle(r.class_representatives[i]));
        for (size_t j = i + 1; j < r.class_representatives.size(); ++j)
          CHECK(!is_kx_trivial(r.class_representatives[i] - r.class_representatives[j]));
      }
    }
}

TEST_CASE("builtin cochain values and registry") {
  auto k = builtin::klein();
  CHECK(builtin_cochain::mu_klein(k).at_modulus(4)(2, 1) == 2);
  CHECK(builtin_cochain::omega_cyclic(builtin::cyclic(5), 0).is_zero());
  auto d8 = builtin::d8();
  const int x = d8->index_of("x"), z = d8->index_of("z");
  CHECK(builtin_cochain::omega_d8(d8).at_modulus(4)(x, z, z) == 3);
  CHECK(builtin_cochain::omega_d8(d8, true) == -builtin_cochain::omega_d8(d8));
  CHECK(builtin_cochain::by_name("omega_cyclic:3", builtin::cyclic(6)) == builtin_cochain::omega_cyclic(builtin::cyclic(6), 3));
  CHECK_THROWS_AS(builtin_cochain::by_name("nope", d8), CochainError);
  CHECK_THROWS_AS(builtin_cochain::by_name("omega_cyclic:q", builtin::cyclic(3)), CochainError);
}
