#include "fusioncat/projreps.hpp"

#include <algorithm>

namespace fc {

bool is_regular(int g, const Cochain& phi) {
  const Subgroup& L = phi.domain();
  if (!L.contains(g)) throw CochainError(CochainError::Kind::DomainMismatch, "element not in the cocycle's group");
  const auto& G = phi.group();
  for (int h : L.elements())
    if (G->mul(g, h) == G->mul(h, g) && phi(g, h) != phi(h, g)) return false;
  return true;
}

RegularClassReport regular_classes(const Cochain& phi) {
  if (phi.degree() != 2 || !is_cocycle(phi))
    throw CochainError(CochainError::Kind::NotACocycle, "regularity needs a 2-cocycle");
  RegularClassReport r;
  r.group = phi.domain();
  r.cocycle = phi;
  for (const auto& cls : element_conjugacy_classes(phi.domain()))
    if (is_regular(cls.front(), phi)) r.regular_classes.push_back(cls);
  r.count = static_cast<int>(r.regular_classes.size());
  return r;
}

int count_irreducible_projreps(const Cochain& phi) { return regular_classes(phi).count; }

int count_mij(const Cochain& psi_i, const Cochain& psi_j, const Cochain& omega, int g) {
  return count_irreducible_projreps(mixed_cocycle(psi_i, psi_j, omega, g));
}

bool is_schur_trivial(const Subgroup& l) { return h2_classes(l).class_representatives.size() == 1; }

bool is_sub_schur_trivial(const GroupPtr& g) {
  for (const auto& c : conjugacy_classes_of_subgroups(g))
    if (!is_schur_trivial(c.representative)) return false;
  return true;
}

MijTable::MijTable(Cochain psi_i, Cochain psi_j, Cochain omega)
    : psi_i_(std::move(psi_i)), psi_j_(std::move(psi_j)), omega_(std::move(omega)),
      dc_(double_cosets(psi_i_.domain(), psi_j_.domain())) {}

int MijTable::representative(int g) const {
  for (size_t k = 0; k < dc_.cosets.size(); ++k)
    if (std::binary_search(dc_.cosets[k].begin(), dc_.cosets[k].end(), g)) return dc_.representatives[k];
  return g;
}

int MijTable::operator()(int g) const {
  const int rep = representative(g);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(rep);
    if (it != cache_.end()) return it->second;
  }
  int v = count_mij(psi_i_, psi_j_, omega_, rep);
  std::lock_guard<std::mutex> lk(mu_);
  cache_[rep] = v;
  return v;
}

}  // namespace fc
