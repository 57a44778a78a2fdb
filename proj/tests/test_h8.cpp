#include <map>

#include "fusioncat/h8.hpp"
#include "support.hpp"

using namespace fc;
using namespace fc::h8;

namespace {

const CycField& qi() { return CycField::get(4); }
Cyc rat(long v) { return Cyc(qi(), mpq_class(v)); }

int commutant_dim(const H8Module& m) {
  Mat sys(qi(), 0, m.dim * m.dim);
  const Mat id = Mat::identity(qi(), m.dim);
  for (const auto& g : m.gens) sys = vstack(sys, kron(g, id) - kron(id, g.transpose()));
  return nullspace(sys).cols();
}

bool breaks(const HopfAlgebraModel& h, const H8ModuleAlgebra& s) {
  try {
    verify_module_algebra(h, s);
  } catch (const H8Error& e) {
    return e.kind == H8Error::Kind::AxiomViolation;
  }
  return false;
}

}  // namespace

TEST_CASE("Kac-Paljutkin algebra") {
  auto h = build_h8();
  CHECK(h.dim == 8);
  CHECK(check_hopf_axioms(h).empty());
  CHECK(h.counit[4] == rat(1));
  CHECK(h.antipode[4] == h.basis(4));
  CHECK(h.comult[1] == [&] {
    Mat d(qi(), 8, 8);
    d(1, 1) = rat(1);
    return d;
  }());
  Elem z2 = h.multiply(h.basis(4), h.basis(4));
  Elem expect(8, rat(0));
  expect[0] = expect[1] = expect[2] = Cyc(qi(), mpq_class(1, 2));
  expect[3] = Cyc(qi(), mpq_class(-1, 2));
  CHECK(z2 == expect);
}

TEST_CASE("a broken structure constant is caught") {
  auto h = build_h8();
  h.mult[4][4][0] = rat(1);
  CHECK(!check_hopf_axioms(h).empty());
  auto h2 = build_h8();
  h2.comult[4](0, 0) = h2.comult[4](0, 0) + rat(1);
  CHECK(!check_hopf_axioms(h2).empty());
}

TEST_CASE("irreducible modules") {
  auto h = build_h8();
  auto w = irreps(h);
  REQUIRE(w.size() == 5);
  int sq = 0;
  for (const auto& m : w) {
    CHECK(check_module(h, m) == "");
    CHECK(commutant_dim(m) == 1);
    sq += m.dim * m.dim;
  }
  CHECK(sq == 8);
  CHECK(w[0].dim == 2);
  CHECK(w[3].gens[2](0, 0) == Cyc::root(qi(), 1));
  for (int j = 0; j < 5; ++j) {
    auto m = decompose_module(h, w[j]);
    for (int k = 0; k < 5; ++k) CHECK(m[k] == (k == j ? 1 : 0));
  }
}

TEST_CASE("module algebras") {
  auto h = build_h8();
  auto w = irreps(h);
  const std::vector<std::array<int, 5>> expect = {
      {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 1, 0, 0}, {0, 1, 1, 1, 1}, {2, 1, 1, 1, 1}};
  const std::vector<int> dims = {1, 2, 2, 4, 4, 8};
  REQUIRE(tags().size() == 6);
  for (size_t t = 0; t < 6; ++t) {
    INFO(tags()[t]);
    auto s = builtin_module_algebra(h, tags()[t]);
    CHECK(verify_module_algebra(h, s));
    CHECK(s.module.dim == dims[t]);
    auto m = decompose_module(h, s.module);
    CHECK(m == expect[t]);
    int total = 0;
    for (int k = 0; k < 5; ++k) total += m[k] * w[k].dim;
    CHECK(total == s.module.dim);
  }
  for (const char* t : {"iii", "v"}) CHECK(verify_module_algebra(h, builtin_module_algebra(h, t, true)));
  CHECK_THROWS_AS(builtin_module_algebra(h, "vii"), H8Error);
}

TEST_CASE("perturbing an action entry breaks an axiom") {
  auto h = build_h8();
  auto rng = fct::seeded_rng("mutation");
  for (const auto& tag : tags()) {
    INFO(tag);
    auto s = builtin_module_algebra(h, tag);
    const int n = s.module.dim;
    for (int g = 0; g < 3; ++g)
      for (int trial = 0; trial < std::min(n * n, 12); ++trial) {
        const int i = n * n <= 12 ? trial / n : static_cast<int>(rng() % n);
        const int j = n * n <= 12 ? trial % n : static_cast<int>(rng() % n);
        auto bad = s;
        Cyc delta = rng() % 2 ? rat(static_cast<long>(rng() % 5) + 1) : Cyc::root(qi(), 1);
        bad.module.gens[g](i, j) = bad.module.gens[g](i, j) + delta;
        CHECK(breaks(h, bad));
      }
  }
}

TEST_CASE("Morita separators") {
  auto h = build_h8();
  auto sep = morita_separators(h);
  CHECK(sep.iv == 3);
  CHECK(sep.v == 2);
  CHECK(sep.separates());
  CHECK(builtin_module_algebra(h, "i").module.dim != builtin_module_algebra(h, "vi").module.dim);
}

TEST_CASE("matching with the gt classification") {
  auto h = build_h8();
  auto c = h8_category();
  auto d8 = c.group();
  const std::map<std::string, std::string> expect = {{"<e>", "ii"}, {"<x>", "iv"}, {"<xy>", "v"},
                                                     {"<z>", "i"},  {"<x,y>", "vi"}, {"<xy,z>", "iii"}};
  for (bool conj : {false, true}) {
    auto m = match_classification(c, h, conj);
    CHECK(m.entries.size() == 6);
    for (const auto& e : m.entries) {
      INFO(e.algebra.modcat.L.to_string());
      CHECK(expect.at(e.algebra.modcat.L.to_string()) == e.tag);
      CHECK(fpdim_squared(c, e.algebra) == builtin_module_algebra(h, e.tag).module.dim);
    }
  }
  CHECK(match_classification(c, h).convention == "standard");
}
