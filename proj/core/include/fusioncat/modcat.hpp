#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusioncat/cochain.hpp"

namespace fc {

// A pair (L, psi) with d(psi) = omega|_L, describing the module category M(L,psi).
struct ModCatDatum {
  Subgroup L;
  Cochain psi;
  Cochain omega;
  int h2_index = 0;  // which H^2(L) class was added to the particular solution

  std::string label() const;  // "(<x,y>,1)", "(G,mu)", ...
};

// Checks d(psi) = omega|_L; throws CochainError::CompatibilityViolated otherwise.
ModCatDatum make_datum(const Subgroup& L, const Cochain& psi, const Cochain& omega);

// One datum per subgroup L with omega|_L trivial and per class of H^2(L).
std::vector<ModCatDatum> enumerate_data(const Cochain& omega);

struct EquivalenceCertificate {
  int g = 0;
  CoboundaryWitness witness;  // for psi'^-1 psi^g Omega_g restricted to L'
};

// First g in index order with L = g L' g^-1 and a trivial comparison class.
std::optional<EquivalenceCertificate> are_equivalent(const ModCatDatum& d1, const ModCatDatum& d2);
// Class representatives: the first member of each class in the given order.
std::vector<ModCatDatum> classify_data(const std::vector<ModCatDatum>& data);
std::vector<ModCatDatum> classify(const Cochain& omega);
// sum over conjugacy classes of subgroups of |H^2(L) / N_G(L)|, by orbit counting (omega = 1)
int omega_trivial_count(const GroupPtr& g);

struct SimpleBimoduleLabel {
  int g = 0;
  int rho_index = 0;
  int rho_dim = 0;  // 0 when dims were not requested
  std::vector<int> support;
};

// Labels (g, rho) of the simple (A(L_i,psi_i), A(L_j,psi_j))-bimodules. rho_index k is
// paired with the k-th smallest irreducible dimension of the mixed cocycle.
std::vector<SimpleBimoduleLabel> simple_bimodules(const ModCatDatum& di, const ModCatDatum& dj,
                                                  bool with_dims = true);
int bimodule_count(const ModCatDatum& di, const ModCatDatum& dj);

struct RankTable {
  std::vector<ModCatDatum> data;
  std::vector<std::vector<int>> entries;
};
RankTable rank_table(const std::vector<ModCatDatum>& data);
RankTable rank_table(const Cochain& omega, bool all_data = false);

}  // namespace fc
