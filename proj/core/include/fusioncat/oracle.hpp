#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusioncat/cochain.hpp"
#include "fusioncat/matrix.hpp"

namespace fc {

class OracleError : public std::runtime_error {
 public:
  enum class Kind { TwistMismatch, AlgebraMismatch, NonSemisimpleInput, SplittingFailed, FieldMismatch, AxiomViolation };
  OracleError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Vec_G^omega with a fixed coefficient field Q(zeta_K). The associator on
// homogeneous pieces of degrees (g,h,k) is the scalar omega(g,h,k)^-1, so that
// d(psi) = omega|_L is the associativity condition for A(L,psi).
class Ambient {
 public:
  Ambient(Cochain omega, int64_t field_modulus);
  const GroupPtr& group() const { return omega_.group(); }
  const Cochain& omega() const { return omega_; }
  const CycField& field() const { return *f_; }
  // zeta_K^e
  const Cyc& root(int64_t e) const;
  // exponent (base zeta_K) of a value stored at modulus m
  int64_t scale(int64_t exponent, int64_t m) const;
  int64_t omega_exp(int a, int b, int c) const { return wexp_[(a * n_ + b) * n_ + c]; }
  Cyc alpha(int a, int b, int c) const { return root(-omega_exp(a, b, c)); }
  Cyc alpha_inv(int a, int b, int c) const { return root(omega_exp(a, b, c)); }

 private:
  Cochain omega_;
  const CycField* f_;
  int n_;
  std::vector<int64_t> wexp_;
  std::vector<Cyc> roots_;
};
using AmbientPtr = std::shared_ptr<const Ambient>;

// lcm of the given cochain moduli times the exponent of G: enough for the
// eigenvalues met while splitting projective representations.
int64_t suggested_field_modulus(const GroupPtr& g, const std::vector<int64_t>& moduli);
AmbientPtr make_ambient(const Cochain& omega, const std::vector<int64_t>& extra_moduli = {});

class TwistedAlgebra {
 public:
  TwistedAlgebra(AmbientPtr amb, Cochain psi);
  const AmbientPtr& ambient() const { return amb_; }
  const Subgroup& subgroup() const { return psi_.domain(); }
  const Cochain& psi() const { return psi_; }
  int64_t psi_exp(int a, int b) const;
  Cyc mult(int a, int b) const { return amb_->root(psi_exp(a, b)); }
  int dim() const { return psi_.domain().size(); }

 private:
  AmbientPtr amb_;
  Cochain psi_;
  std::vector<int64_t> pexp_;
};
using AlgebraPtr = std::shared_ptr<const TwistedAlgebra>;

// Throws TwistMismatch naming a violating triple when d(psi) != omega|_L.
AlgebraPtr twisted_group_algebra(const AmbientPtr& amb, const Cochain& psi);
// Entrywise twisted associativity; returns an empty string on success.
std::string check_associativity(const TwistedAlgebra& a);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// G-graded (A,B)-bimodule. left[pa][d]: M_d -> M_{a d}, right[pb][d]: M_d -> M_{d b},
// indexed by positions inside the subgroups of A and B.
struct Bimodule {
  AlgebraPtr A, B;
  std::vector<int> dims;
  std::vector<std::vector<Mat>> left, right;

  const CycField& field() const { return A->ambient()->field(); }
  int total_dim() const;
  std::vector<int> support() const;
  const Mat& lambda(int a, int d) const;
  const Mat& rho(int b, int d) const;
};

// Module and middle axioms with associators; returns an empty string on success.
std::string check_bimodule(const Bimodule& m);
Bimodule regular_bimodule(const AlgebraPtr& a);
// (A (x) delta_g) (x) B with the regular actions
Bimodule free_bimodule(const AlgebraPtr& a, const AlgebraPtr& b, int g);

struct BimoduleMap {
  std::vector<Mat> comps;  // per degree, N_d x M_d
};
struct HomSpace {
  int dim = 0;
  std::vector<BimoduleMap> basis;
};
HomSpace hom_space(const Bimodule& m, const Bimodule& n, bool with_basis = false);
int hom_dim(const Bimodule& m, const Bimodule& n);
// number of pairwise non-isomorphic simple constituents
int center_dimension(const Bimodule& m);
bool is_simple(const Bimodule& m);
bool isomorphic_simples(const Bimodule& a, const Bimodule& b);
// Krull-Schmidt splitting into simple sub-bimodules
std::vector<Bimodule> decompose(const Bimodule& m);

Bimodule direct_sum(const std::vector<Bimodule>& parts);
// M (x)_B N for an (A,B)-bimodule M and a (B,C)-bimodule N
Bimodule tensor_over(const Bimodule& m, const Bimodule& n);
// (B,A)-bimodule dual to the (A,B)-bimodule x. Each simple summand S is sent to
// the simple Y with Hom(A, S (x)_B Y) != 0, which pins Y down up to isomorphism.
Bimodule dual_bimodule(const Bimodule& x);
// X (x) X^v = A and X^v (x) X = B, both checked
bool is_invertible(const Bimodule& x);

// A projective representation a -> T_a of a subgroup H on F^n (T indexed by position in H).
struct ProjRep {
  const CycField* field = nullptr;
  Subgroup H;
  std::vector<Mat> T;
  int dim = 0;
};
// Bases (column matrices) of irreducible subspaces whose direct sum is F^n.
std::vector<Mat> irreducible_subspaces(const ProjRep& r);
int intertwiner_dim(const ProjRep& r1, const ProjRep& r2);
ProjRep restrict_rep(const ProjRep& r, const Mat& basis);
// dims of the irreducible phi-representations, ascending
std::vector<int> projective_irrep_dims(const Cochain& phi);

struct SimpleCatalogue {
  AlgebraPtr A, B;
  std::vector<Bimodule> simples;
  std::vector<int> coset_rep;  // double-coset representative supporting each simple
  // index of the simple isomorphic to x (x assumed simple), or -1
  int find(const Bimodule& x) const;
};
SimpleCatalogue simple_catalogue(const AlgebraPtr& a, const AlgebraPtr& b);

struct OrbitReport {
  int num_simples = 0;
  std::vector<int> invertible;             // catalogue indices (single-vertex case)
  std::vector<std::vector<int>> orbits;    // catalogue indices, ascending
};
// orbits of E -> dual(X) (x) E (x) X over invertible X
OrbitReport conjugacy_classes(const AlgebraPtr& a);
// orbits of E -> dual(X1) (x) E (x) X2 on simple (A1,A2)-bimodules
OrbitReport two_vertex_classes(const AlgebraPtr& a1, const AlgebraPtr& a2);

struct InvertibleGroup {
  std::vector<int> members;                 // catalogue indices
  std::vector<std::vector<int>> table;      // positions into members
  int identity = 0;
  bool abelian = false;
  bool cyclic = false;
  std::vector<int> element_orders;
};
InvertibleGroup invertible_group(const AlgebraPtr& a);

}  // namespace fc
