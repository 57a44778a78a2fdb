#include <set>

#include "fusioncat/gt.hpp"
#include "support.hpp"

using namespace fc;

namespace {

FiberDatum mu_fiber(const GTCategory& c) {
  const auto& d8 = c.group();
  Subgroup n = parse_subgroup(d8, "x,y");
  Cochain mu = restrict(builtin_cochain::beta_d8(d8), n);
  for (const auto& f : fiber_functors(c))
    if (f.N == n && is_kx_trivial(f.gamma - mu)) return f;
  throw std::runtime_error("no fiber with class mu");
}

const AlgebraDatum& by_subgroup(const std::vector<AlgebraDatum>& v, const Subgroup& l) {
  for (const auto& a : v)
    if (a.modcat.L == l) return a;
  throw std::runtime_error("no datum on " + l.to_string());
}

std::vector<GTCategory> test_categories() {
  return {h8_category(), rep_category(builtin::cyclic(4)), rep_category(builtin::s3()), rep_category(builtin::d8())};
}

}  // namespace

TEST_CASE("category construction") {
  auto d8 = builtin::d8();
  Subgroup k = parse_subgroup(d8, "z");
  CHECK_THROWS_AS(make_gt_category(builtin_cochain::omega_d8(d8), parse_subgroup(d8, "xz"),
                                   builtin_cochain::trivial(parse_subgroup(d8, "xz"), 2)),
                  GTError);
  CHECK_THROWS_AS(make_gt_category(builtin_cochain::trivial(Subgroup::whole(d8), 2), k, builtin_cochain::trivial(k, 2)),
                  GTError);
  auto c = h8_category();
  CHECK(c.K == k);
}

TEST_CASE("fiber functors") {
  auto c = h8_category();
  auto f = mu_fiber(c);
  CHECK(f.N.size() == 4);
  auto d8 = builtin::d8();
  Subgroup e = Subgroup::trivial(d8);
  auto vec = make_gt_category(builtin_cochain::omega_d8(d8), e, builtin_cochain::trivial(e, 2));
  CHECK(fiber_functors(vec).empty());
  for (auto g : {builtin::cyclic(4), builtin::s3(), builtin::d8()}) {
    bool forgetful = false;
    for (const auto& fb : fiber_functors(rep_category(g)))
      if (fb.N.size() == 1) forgetful = true;
    CHECK(forgetful);
  }
  FiberDatum bad{parse_subgroup(d8, "x"), builtin_cochain::trivial(parse_subgroup(d8, "x"), 2)};
  CHECK_THROWS_AS(check_fiber(c, bad), GTError);
}

TEST_CASE("algebra classification") {
  auto c = h8_category();
  auto algs = classify_algebras(c);
  CHECK(algs.size() == 6);
  auto d8 = c.group();
  for (const char* l : {"e", "x", "xy", "z", "x,y", "xy,z"}) CHECK_NOTHROW(by_subgroup(algs, parse_subgroup(d8, l)));
  for (auto g : {builtin::trivial(), builtin::cyclic(4), builtin::s3(), builtin::d8()})
    CHECK(static_cast<int>(classify_algebras(rep_category(g)).size()) == omega_trivial_count(g));
  CHECK(classify_algebras(rep_category(builtin::trivial())).size() == 1);
}

TEST_CASE("FP dimensions") {
  auto c = h8_category();
  auto algs = classify_algebras(c);
  auto d8 = c.group();
  CHECK(fpdim_squared(c, by_subgroup(algs, parse_subgroup(d8, "z"))) == 1);
  CHECK(fpdim_squared(c, by_subgroup(algs, parse_subgroup(d8, "x,y"))) == 8);
  CHECK(fpdim_squared(c, by_subgroup(algs, parse_subgroup(d8, "e"))) == 2);
  auto fx = fpdim(c, by_subgroup(algs, parse_subgroup(d8, "x,y")));
  CHECK(fx.coefficient * fx.coefficient * fx.radicand == 8);
  for (const auto& a : algs) {
    auto f = fpdim(c, a);
    CHECK(f.coefficient * f.coefficient * f.radicand == fpdim_squared(c, a));
  }
}

TEST_CASE("sum of squares of simple dimensions") {
  for (const auto& c : test_categories())
    for (const auto& d : enumerate_data(c.omega))
      CHECK(fpdim_square_sum(c, d) == mpz_class(c.K.size()) * d.L.size() * c.group()->order());
}

TEST_CASE("FP dimensions are invariant under equivalence") {
  for (const auto& c : test_categories()) {
    auto data = enumerate_data(c.omega);
    for (const auto& d1 : data)
      for (const auto& d2 : data) {
        if (!are_equivalent(d1, d2)) continue;
        auto a1 = algebra_data(c, d1), a2 = algebra_data(c, d2);
        std::multiset<mpq_class> s1, s2;
        for (const auto& a : a1) s1.insert(fpdim_squared(c, a));
        for (const auto& a : a2) s2.insert(fpdim_squared(c, a));
        CHECK(s1 == s2);
      }
  }
}

TEST_CASE("commutativity reports") {
  auto c = h8_category();
  auto f = mu_fiber(c);
  auto algs = classify_algebras(c);
  auto d8 = c.group();
  auto rxy = commutativity_report(c, by_subgroup(algs, parse_subgroup(d8, "x,y")), f);
  CHECK(!rxy.commutative);
  REQUIRE(rxy.exact_fact_breakdown);
  CHECK(rxy.exact_fact_breakdown->a);
  CHECK(!rxy.exact_fact_breakdown->b);
  CHECK(rxy.exact_fact_breakdown->c);
  CHECK(commutativity_report(c, by_subgroup(algs, parse_subgroup(d8, "z")), f).commutative);

  // L = <e> and G = KN exact: both sides are |K| for every simple label
  for (const auto& cat : test_categories())
    for (const auto& fb : fiber_functors(cat))
      for (const auto& d : enumerate_data(cat.omega)) {
        if (d.L.size() != 1 || !is_exact_factorization(cat.K, fb.N)) continue;
        for (const auto& a : algebra_data(cat, d)) {
          auto r = commutativity_report(cat, a, fb);
          CHECK(r.lhs == cat.K.size());
          CHECK(r.rhs == cat.K.size());
        }
      }

  // Rep(G), L = G: one double coset, both sides 1
  for (auto g : {builtin::cyclic(4), builtin::s3(), builtin::d8()}) {
    auto rc = rep_category(g);
    Subgroup e = Subgroup::trivial(g);
    FiberDatum forget{e, builtin_cochain::trivial(e, 2)};
    for (const auto& d : enumerate_data(rc.omega)) {
      if (d.L.size() != g->order() || d.h2_index != 0) continue;
      auto r = commutativity_report(rc, algebra_data(rc, d).front(), forget);
      CHECK(r.lhs == 1);
      CHECK(r.rhs == 1);
    }
  }
}

TEST_CASE("path algebra verdicts") {
  auto c = h8_category();
  auto f = mu_fiber(c);
  auto algs = classify_algebras(c);
  auto d8 = c.group();
  std::vector<AlgebraDatum> good;
  for (const char* l : {"e", "x", "xy", "z", "xy,z"}) good.push_back(by_subgroup(algs, parse_subgroup(d8, l)));
  CHECK(path_algebra_check(c, good, f).path_algebra);
  good.push_back(by_subgroup(algs, parse_subgroup(d8, "x,y")));
  auto chk = path_algebra_check(c, good, f);
  CHECK(!chk.path_algebra);
  CHECK(chk.reports.size() == 6);
  CHECK(path_algebra_check(c, {}, f).path_algebra);
}

TEST_CASE("exact factorization bound") {
  auto d8 = builtin::d8();
  Subgroup k = parse_subgroup(d8, "z"), n = parse_subgroup(d8, "x,y");
  CHECK(exact_factorization_bound(k, n, Subgroup::trivial(d8), 0));
  CHECK(exact_factorization_bound(k, n, parse_subgroup(d8, "xy,z"), 0));
  CHECK(exact_factorization_bound(k, n, n, 0));
  CHECK_THROWS_AS(exact_factorization_bound(k, parse_subgroup(d8, "x"), n, 0), GTError);
}

TEST_CASE("inequality and the exact factorization criterion") {
  for (const auto& c : test_categories()) {
    INFO(c.group()->label());
    for (const auto& fb : fiber_functors(c))
      for (const auto& d : enumerate_data(c.omega))
        for (const auto& a : algebra_data(c, d)) {
          auto r = commutativity_report(c, a, fb);
          CHECK(mpq_class(r.lhs) <= r.rhs);
          CHECK(r.commutative == (mpq_class(r.lhs) == r.rhs));
          if (is_exact_factorization(c.K, fb.N)) {
            REQUIRE(r.exact_fact_breakdown);
            const auto& b = *r.exact_fact_breakdown;
            CHECK(r.commutative == (b.a && b.b && b.c));
          }
        }
  }
}
