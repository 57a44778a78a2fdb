#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "fusioncat/cochain.hpp"

namespace fc {

struct RegularClassReport {
  Subgroup group;
  Cochain cocycle;
  std::vector<std::vector<int>> regular_classes;
  int count = 0;
};

// phi(g,h) = phi(h,g) for all h in C_L(g), L the domain of phi
bool is_regular(int g, const Cochain& phi);
RegularClassReport regular_classes(const Cochain& phi);
int count_irreducible_projreps(const Cochain& phi);
int count_mij(const Cochain& psi_i, const Cochain& psi_j, const Cochain& omega, int g);

bool is_schur_trivial(const Subgroup& l);
bool is_sub_schur_trivial(const GroupPtr& g);

// m_{i,j}(g) for a fixed pair, cached by double-coset representative.
class MijTable {
 public:
  MijTable(Cochain psi_i, Cochain psi_j, Cochain omega);
  int operator()(int g) const;
  int representative(int g) const;

 private:
  Cochain psi_i_, psi_j_, omega_;
  DoubleCosetDecomposition dc_;
  mutable std::mutex mu_;
  mutable std::map<int, int> cache_;
};

}  // namespace fc
