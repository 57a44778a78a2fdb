#include "fusioncat/gt.hpp"

#include "fusioncat/projreps.hpp"

namespace fc {

namespace {

using K = GTError::Kind;

mpq_class fp_square(int k, int l, int dim, int cap) {
  mpq_class r(mpz_class(k) * l * dim * dim, mpz_class(cap) * cap);
  r.canonicalize();
  return r;
}

}  // namespace

ModCatDatum GTCategory::base() const { return make_datum(K, alpha, omega); }

GTCategory make_gt_category(const Cochain& omega, const Subgroup& k, const Cochain& alpha) {
  if (omega.degree() != 3 || omega.domain().size() != omega.group()->order())
    throw GTError(K::InvalidCategory, "omega must be a 3-cochain on the whole group");
  if (!is_cocycle(omega)) throw GTError(K::InvalidCategory, "omega is not a 3-cocycle");
  if (alpha.degree() != 2 || !(alpha.domain() == k))
    throw GTError(K::InvalidCategory, "alpha must be a 2-cochain on K = " + k.to_string());
  if (differential(alpha) != restrict(omega, k))
    throw GTError(K::InvalidCategory, "d(alpha) differs from omega on K = " + k.to_string());
  return GTCategory{omega, k, alpha.reduced()};
}

GTCategory rep_category(const GroupPtr& g) {
  Subgroup G = Subgroup::whole(g);
  return make_gt_category(builtin_cochain::trivial(G, 3), G, builtin_cochain::trivial(G, 2));
}

GTCategory h8_category() {
  auto d8 = builtin::d8();
  Subgroup k = parse_subgroup(d8, "z");
  return make_gt_category(builtin_cochain::omega_d8(d8), k, builtin_cochain::trivial(k, 2));
}

std::vector<FiberDatum> fiber_functors(const GTCategory& c) {
  std::vector<FiberDatum> out;
  const int e = c.group()->identity();
  for (const auto& n : subgroups(c.group())) {
    if (!product_is_whole(c.K, n)) continue;
    auto psi0 = solve_psi(c.omega, n);
    if (!psi0) continue;
    for (const auto& cls : h2_classes(n).class_representatives) {
      Cochain gamma = (*psi0 + cls).reduced();
      if (count_mij(c.alpha, gamma, c.omega, e) == 1) out.push_back({n, gamma});
    }
  }
  return out;
}

void check_fiber(const GTCategory& c, const FiberDatum& f) {
  if (!product_is_whole(c.K, f.N)) throw GTError(K::FiberMismatch, "K N is not the whole group for N = " + f.N.to_string());
  if (f.gamma.degree() != 2 || !(f.gamma.domain() == f.N))
    throw GTError(K::FiberMismatch, "gamma must be a 2-cochain on N");
  if (differential(f.gamma) != restrict(c.omega, f.N))
    throw GTError(K::FiberMismatch, "d(gamma) differs from omega on N = " + f.N.to_string());
  if (count_mij(c.alpha, f.gamma, c.omega, c.group()->identity()) != 1)
    throw GTError(K::FiberMismatch, "K cap N has more than one irreducible twisted representation");
}

std::vector<AlgebraDatum> algebra_data(const GTCategory& c, const ModCatDatum& d) {
  std::vector<AlgebraDatum> out;
  for (const auto& s : simple_bimodules(c.base(), d)) out.push_back({d, s.g, s.rho_index, s.rho_dim});
  return out;
}

std::vector<AlgebraDatum> classify_algebras(const GTCategory& c) {
  std::vector<AlgebraDatum> out;
  for (const auto& d : classify(c.omega)) out.push_back(algebra_data(c, d).front());
  return out;
}

mpq_class fpdim_squared(const GTCategory& c, const AlgebraDatum& d) {
  const Subgroup& L = d.modcat.L;
  const int cap = intersection(c.K, conjugate(L, d.g)).size();
  return fp_square(c.K.size(), L.size(), d.rho_dim, cap);
}

FPDim fpdim(const GTCategory& c, const AlgebraDatum& d) {
  const int cap = intersection(c.K, conjugate(d.modcat.L, d.g)).size();
  long rad = static_cast<long>(c.K.size()) * d.modcat.L.size();
  long out = 1;
  for (long p = 2; p * p <= rad; ++p)
    while (rad % (p * p) == 0) {
      rad /= p * p;
      out *= p;
    }
  mpq_class coeff(mpz_class(out) * d.rho_dim, cap);
  coeff.canonicalize();
  return {coeff, rad};
}

mpz_class fpdim_square_sum(const GTCategory& c, const ModCatDatum& d) {
  mpz_class sum = 0;
  for (const auto& a : algebra_data(c, d)) {
    // (|K||L| dim / cap)^2 = |K||L| * fpdim^2, always an integer here
    mpq_class v = fpdim_squared(c, a) * c.K.size() * d.L.size();
    if (v.get_den() != 1) throw GTError(K::InvalidCategory, "non-integral FP-dimension square");
    sum += v.get_num();
  }
  return sum;
}

bool exact_factorization_bound(const Subgroup& k, const Subgroup& n, const Subgroup& L, int g) {
  if (!is_exact_factorization(k, n)) throw GTError(K::NotExactFactorization, "K and N do not factor G exactly");
  const int cap = intersection(k, conjugate(L, g)).size();
  for (int h = 0; h < k.parent()->order(); ++h)
    if (intersection(n, conjugate(L, h)).size() * cap != L.size()) return false;
  return true;
}

PathReport commutativity_report(const GTCategory& c, const AlgebraDatum& d, const FiberDatum& fiber) {
  check_fiber(c, fiber);
  const ModCatDatum& m = d.modcat;
  PathReport r;
  r.algebra = d;
  for (int h : double_cosets(fiber.N, m.L).representatives) r.lhs += count_mij(fiber.gamma, m.psi, c.omega, h);
  r.rhs = fpdim_squared(c, d);
  r.commutative = mpq_class(r.lhs) == r.rhs;
  if (is_exact_factorization(c.K, fiber.N)) {
    ExactFactBreakdown b;
    b.a = d.rho_dim == 1;
    b.b = true;
    for (int h = 0; h < c.group()->order() && b.b; ++h) {
      Subgroup cap = intersection(fiber.N, conjugate(m.L, h));
      b.b = cap.is_abelian() && is_kx_trivial(mixed_cocycle(fiber.gamma, m.psi, c.omega, h));
    }
    b.c = exact_factorization_bound(c.K, fiber.N, m.L, d.g);
    r.exact_fact_breakdown = b;
  }
  return r;
}

PathCheck path_algebra_check(const GTCategory& c, const std::vector<AlgebraDatum>& summands, const FiberDatum& fiber) {
  PathCheck out;
  for (const auto& s : summands) {
    out.reports.push_back(commutativity_report(c, s, fiber));
    out.path_algebra = out.path_algebra && out.reports.back().commutative;
  }
  return out;
}

}  // namespace fc
