#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusioncat/modcat.hpp"

namespace fc {

class GTError : public std::runtime_error {
 public:
  enum class Kind { InvalidCategory, FiberMismatch, NotExactFactorization };
  GTError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// C(G, omega, K, alpha): module functors on M(K,alpha) over Vec_G^omega.
struct GTCategory {
  Cochain omega;
  Subgroup K;
  Cochain alpha;

  const GroupPtr& group() const { return omega.group(); }
  ModCatDatum base() const;  // (K, alpha) as a module-category datum
};

// Throws InvalidCategory unless d(alpha) = omega|_K.
GTCategory make_gt_category(const Cochain& omega, const Subgroup& K, const Cochain& alpha);
// C(G, 1, G, 1), equivalent to Rep(G)
GTCategory rep_category(const GroupPtr& g);
// C(D8, omega, <z>, 1), equivalent to Rep(H8)
GTCategory h8_category();

struct FiberDatum {
  Subgroup N;
  Cochain gamma;
};

// All (N, gamma-class) with G = KN, d(gamma) = omega|_N and a unique irreducible
// projective representation of K cap N for the mixed cocycle of (alpha, gamma).
std::vector<FiberDatum> fiber_functors(const GTCategory& c);
// Throws FiberMismatch when f violates one of the conditions above.
void check_fiber(const GTCategory& c, const FiberDatum& f);

// Simple object M(g, rho) of M^{K,alpha}(L,psi), A_M its internal End.
struct AlgebraDatum {
  ModCatDatum modcat;
  int g = 0;
  int rho_index = 0;
  int rho_dim = 1;
};

// every simple object of M^{K,alpha}(L,psi)
std::vector<AlgebraDatum> algebra_data(const GTCategory& c, const ModCatDatum& d);
// One datum per class of classify(omega), at the least coset and least rho.
std::vector<AlgebraDatum> classify_algebras(const GTCategory& c);

// |K||L| dim(rho)^2 / |K cap gLg^-1|^2 = dim F_V(A_M)
mpq_class fpdim_squared(const GTCategory& c, const AlgebraDatum& d);
// FPdim = coefficient * sqrt(radicand)
struct FPDim {
  mpq_class coefficient;
  long radicand = 1;
};
FPDim fpdim(const GTCategory& c, const AlgebraDatum& d);
// sum over simples of (|K||L| dim(rho) / |K cap gLg^-1|)^2; equals |K||L||G|
mpz_class fpdim_square_sum(const GTCategory& c, const ModCatDatum& d);

struct ExactFactBreakdown {
  bool a = false;  // dim rho = 1
  bool b = false;  // every N cap hLh^-1 abelian with trivial (gamma, psi) class
  bool c = false;  // |N cap hLh^-1| |K cap gLg^-1| = |L| for all h
};

struct PathReport {
  AlgebraDatum algebra;
  long lhs = 0;
  mpq_class rhs;
  bool commutative = false;
  std::optional<ExactFactBreakdown> exact_fact_breakdown;
};

PathReport commutativity_report(const GTCategory& c, const AlgebraDatum& d, const FiberDatum& fiber);

struct PathCheck {
  bool path_algebra = true;
  std::vector<PathReport> reports;
};
PathCheck path_algebra_check(const GTCategory& c, const std::vector<AlgebraDatum>& summands, const FiberDatum& fiber);

// Throws NotExactFactorization unless G = KN exactly.
bool exact_factorization_bound(const Subgroup& K, const Subgroup& N, const Subgroup& L, int g);

}  // namespace fc
