#include "fusioncat/modcat.hpp"

#include <algorithm>
#include <numeric>

#include "fusioncat/oracle.hpp"
#include "fusioncat/projreps.hpp"

namespace fc {

namespace {

using K = CochainError::Kind;

std::string class_name(const ModCatDatum& d) {
  if (d.h2_index == 0) return "";
  const auto& G = d.L.parent();
  if (G->label() == "Z2xZ2" && d.L.size() == G->order()) return "mu";
  if (G->label() == "D8") return d.L.size() == G->order() ? "beta" : "beta|" + d.L.to_string();
  return "c" + std::to_string(d.h2_index);
}

}  // namespace

std::string ModCatDatum::label() const {
  std::string l = L.size() == L.parent()->order() && L.size() > 1 ? "G" : L.to_string();
  std::string parts;
  // the particular solution is only visible when omega|_L is not identically zero
  if (!restrict(omega, L).is_zero()) parts = "psi0";
  std::string c = class_name(*this);
  if (!c.empty()) parts = parts.empty() ? c : parts + "*" + c;
  if (parts.empty()) parts = "1";
  return "(" + l + "," + parts + ")";
}

ModCatDatum make_datum(const Subgroup& L, const Cochain& psi, const Cochain& omega) {
  if (psi.degree() != 2 || !(psi.domain() == L))
    throw CochainError(K::DomainMismatch, "psi must be a 2-cochain on L");
  if (omega.degree() != 3 || omega.domain().size() != omega.group()->order())
    throw CochainError(K::DomainMismatch, "omega must be a 3-cochain on the whole group");
  if (L.parent() != omega.group()) throw CochainError(K::DomainMismatch, "L and omega live on different groups");
  if (differential(psi) != restrict(omega, L))
    throw CochainError(K::CompatibilityViolated, "d(psi) differs from omega on " + L.to_string());
  ModCatDatum d;
  d.L = L;
  d.psi = psi.reduced();
  d.omega = omega;
  return d;
}

std::vector<ModCatDatum> enumerate_data(const Cochain& omega) {
  std::vector<ModCatDatum> out;
  for (const auto& L : subgroups(omega.group())) {
    auto psi0 = solve_psi(omega, L);
    if (!psi0) continue;
    auto h2 = h2_classes(L);
    for (size_t k = 0; k < h2.class_representatives.size(); ++k) {
      ModCatDatum d;
      d.L = L;
      d.omega = omega;
      d.psi = (*psi0 + h2.class_representatives[k]).reduced();
      d.h2_index = static_cast<int>(k);
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::optional<EquivalenceCertificate> are_equivalent(const ModCatDatum& d1, const ModCatDatum& d2) {
  const auto& G = d1.L.parent();
  if (d1.L.size() != d2.L.size()) return std::nullopt;
  for (int g = 0; g < G->order(); ++g) {
    if (!(conjugate(d2.L, g) == d1.L)) continue;
    Cochain cmp = conjugate_cochain(d1.psi, g) - d2.psi + restrict(omega_correction(d1.omega, g), d2.L);
    auto w = kx_coboundary_witness(cmp);
    if (w) return EquivalenceCertificate{g, std::move(*w)};
  }
  return std::nullopt;
}

std::vector<ModCatDatum> classify_data(const std::vector<ModCatDatum>& data) {
  std::vector<ModCatDatum> reps;
  for (const auto& d : data) {
    bool seen = false;
    for (const auto& r : reps)
      if (are_equivalent(r, d)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(d);
  }
  return reps;
}

std::vector<ModCatDatum> classify(const Cochain& omega) { return classify_data(enumerate_data(omega)); }

int omega_trivial_count(const GroupPtr& g) {
  int total = 0;
  for (const auto& cls : conjugacy_classes_of_subgroups(g)) {
    const Subgroup& L = cls.representative;
    auto reps = h2_classes(L).class_representatives;
    const int n = static_cast<int>(reps.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    const Subgroup nl = normalizer(L);
    for (int a : nl.elements())
      for (int i = 0; i < n; ++i) {
        Cochain moved = conjugate_cochain(reps[i], a);
        for (int j = 0; j < n; ++j)
          if (is_kx_trivial(moved - reps[j])) {
            int ri = root(i), rj = root(j);
            if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            break;
          }
      }
    for (int i = 0; i < n; ++i)
      if (root(i) == i) ++total;
  }
  return total;
}

std::vector<SimpleBimoduleLabel> simple_bimodules(const ModCatDatum& di, const ModCatDatum& dj, bool with_dims) {
  if (di.omega != dj.omega) throw CochainError(K::DomainMismatch, "data over different omega");
  auto dc = double_cosets(di.L, dj.L);
  std::vector<SimpleBimoduleLabel> out;
  for (size_t k = 0; k < dc.representatives.size(); ++k) {
    const int g = dc.representatives[k];
    Cochain phi = mixed_cocycle(di.psi, dj.psi, di.omega, g);
    const int m = count_irreducible_projreps(phi);
    std::vector<int> dims;
    if (with_dims) {
      dims = projective_irrep_dims(phi);
      if (static_cast<int>(dims.size()) != m)
        throw CochainError(K::CompatibilityViolated, "irreducible count disagrees with the regular class count");
    }
    for (int r = 0; r < m; ++r) out.push_back({g, r, with_dims ? dims[r] : 0, dc.cosets[k]});
  }
  return out;
}

int bimodule_count(const ModCatDatum& di, const ModCatDatum& dj) {
  return static_cast<int>(simple_bimodules(di, dj, false).size());
}

RankTable rank_table(const std::vector<ModCatDatum>& data) {
  RankTable t;
  t.data = data;
  const size_t n = data.size();
  t.entries.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t.entries[i][j] = bimodule_count(data[i], data[j]);
  return t;
}

RankTable rank_table(const Cochain& omega, bool all_data) {
  return rank_table(all_data ? enumerate_data(omega) : classify(omega));
}

}  // namespace fc
