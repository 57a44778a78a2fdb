#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusioncat/group.hpp"

namespace fc {

class CochainError : public std::runtime_error {
 public:
  enum class Kind {
    DegreeTooHigh,
    NotACocycle,
    NotASubgroup,
    CompatibilityViolated,
    UnknownName,
    BadParams,
    NotNormalizable,
    DomainMismatch
  };
  CochainError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

// Normalized n-cochain on a subgroup L with values in mu_M, stored as exponents
// of a fixed primitive M-th root of unity. Indexing is by positions inside
// L.elements(), first argument most significant.
class Cochain {
 public:
  Cochain() = default;
  Cochain(Subgroup domain, int degree, int64_t modulus);

  const Subgroup& domain() const { return dom_; }
  const GroupPtr& group() const { return dom_.parent(); }
  int degree() const { return deg_; }
  int64_t modulus() const { return mod_; }
  const std::vector<int64_t>& values() const { return v_; }
  std::vector<int64_t>& mutable_values() { return v_; }

  // arguments are group element indices that must lie in the domain
  int64_t operator()(int a) const { return v_[idx1(a)]; }
  int64_t operator()(int a, int b) const { return v_[idx2(a, b)]; }
  int64_t operator()(int a, int b, int c) const { return v_[idx3(a, b, c)]; }
  int64_t at(const std::vector<int>& args) const;
  void set(const std::vector<int>& args, int64_t exponent);

  // same cochain viewed in mu_{M'}; M' must be a multiple of M
  Cochain at_modulus(int64_t m2) const;
  // smallest modulus holding the same values
  Cochain reduced() const;
  bool is_zero() const;
  bool is_normalized() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  Cochain scaled(int64_t k) const;
  // equality as mu_infinity-valued functions
  bool operator==(const Cochain& o) const;
  bool operator!=(const Cochain& o) const { return !(*this == o); }

  std::string describe() const;  // "(i,j)->e" rows for the nonzero entries

 private:
  size_t idx1(int a) const { return static_cast<size_t>(pos(a)); }
  size_t idx2(int a, int b) const { return static_cast<size_t>(pos(a)) * n_ + pos(b); }
  size_t idx3(int a, int b, int c) const {
    return (static_cast<size_t>(pos(a)) * n_ + pos(b)) * n_ + pos(c);
  }
  int pos(int a) const;

  Subgroup dom_;
  int deg_ = 0;
  int64_t mod_ = 1;
  int n_ = 0;
  std::vector<int64_t> v_;
};

// Brings two cochains to the common modulus lcm(M1, M2).
std::pair<Cochain, Cochain> common_modulus(const Cochain& a, const Cochain& b);

Cochain zero_cochain(const Subgroup& dom, int degree, int64_t modulus = 1);
// Builds a cochain from a full value table, subtracting the coboundary that
// normalizes it. Throws NotNormalizable when no such coboundary exists.
Cochain normalized_from_table(const Subgroup& dom, int degree, int64_t modulus, std::vector<int64_t> values);

Cochain differential(const Cochain& c);
bool is_cocycle(const Cochain& c);
Cochain restrict(const Cochain& c, const Subgroup& sub);
// psi^g(g1, g2) = psi(g g1 g^-1, g g2 g^-1), living on g^-1 L g
Cochain conjugate_cochain(const Cochain& psi, int g);
// Omega_g on the domain of omega
Cochain omega_correction(const Cochain& omega, int g);
// The mixed 2-cocycle on L_i cap g L_j g^-1
Cochain mixed_cocycle(const Cochain& psi_i, const Cochain& psi_j, const Cochain& omega, int g);
// Same formula without checking the preconditions (used by the checker itself)
Cochain mixed_cochain_unchecked(const Cochain& psi_i, const Cochain& psi_j, const Cochain& omega, int g);

struct CoboundaryWitness {
  Cochain eta;
  Cochain target;
};

// eta with d(eta) = phi in k^x, found at modulus M|L|; nullopt when phi is nontrivial.
std::optional<CoboundaryWitness> kx_coboundary_witness(const Cochain& phi);
bool is_kx_trivial(const Cochain& phi);
// psi with d(psi) = omega|_L, or nullopt if omega|_L is nontrivial
std::optional<Cochain> solve_psi(const Cochain& omega, const Subgroup& L);

struct H2Report {
  Subgroup group;
  int64_t modulus = 1;
  std::vector<int64_t> elementary_divisors;  // prime powers
  std::vector<Cochain> class_representatives;  // first one is the trivial class
};
H2Report h2_classes(const Subgroup& L);

namespace builtin_cochain {
Cochain trivial(const Subgroup& dom, int degree);
Cochain mu_klein(const GroupPtr& klein);        // (-1)^{j1 i2}
Cochain beta_d8(const GroupPtr& d8);            // nontrivial class of H^2(D8)
Cochain omega_cyclic(const GroupPtr& zn, int64_t ell);
// conjugate = true gives the complex-conjugate cocycle
Cochain omega_d8(const GroupPtr& d8, bool conjugate = false);
// names: trivial, mu_klein, beta_d8, omega_cyclic:<l>, omega_d8, omega_d8_conj (and short aliases)
Cochain by_name(const std::string& name, const GroupPtr& g, int default_degree = 3);
}  // namespace builtin_cochain

}  // namespace fc
