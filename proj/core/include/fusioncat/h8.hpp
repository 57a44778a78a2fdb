#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusioncat/gt.hpp"
#include "fusioncat/matrix.hpp"

namespace fc::h8 {

class H8Error : public std::runtime_error {
 public:
  enum class Kind { AxiomViolation, AmbiguousMatch, UnknownTag };
  H8Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

using Elem = std::vector<Cyc>;  // coordinates in the basis x^a y^b z^c, index a + 2b + 4c

// Kac-Paljutkin algebra over Q(i) by structure constants.
struct HopfAlgebraModel {
  const CycField* field = nullptr;
  int dim = 8;
  std::vector<std::string> labels;
  std::vector<std::vector<Elem>> mult;  // mult[i][j] = e_i e_j
  std::vector<Mat> comult;              // comult[k](i,j) = coefficient of e_i (x) e_j in Delta(e_k)
  std::vector<Cyc> counit;
  std::vector<Elem> antipode;           // antipode[k] = S(e_k)

  Elem basis(int k) const;
  Elem multiply(const Elem& a, const Elem& b) const;
  Elem apply_antipode(const Elem& a) const;
};

HopfAlgebraModel build_h8();
// names of the failed axioms (empty when everything holds)
std::vector<std::string> check_hopf_axioms(const HopfAlgebraModel& h);

// Action matrices of x, y, z.
struct H8Module {
  std::string name;
  int dim = 0;
  std::array<Mat, 3> gens;
};

// rho(e_k) for every basis element
std::vector<Mat> basis_action(const HopfAlgebraModel& h, const H8Module& m);
// empty on success, else the first failed relation
std::string check_module(const HopfAlgebraModel& h, const H8Module& m);
// W0..W4
std::vector<H8Module> irreps(const HopfAlgebraModel& h);
std::vector<Cyc> character(const HopfAlgebraModel& h, const H8Module& m);

struct H8ModuleAlgebra {
  std::string tag;
  H8Module module;
  std::vector<std::vector<Elem>> product;  // product[i][j] in the carrier basis
  Elem unit;
};

// tags "i".."vi"; conjugate swaps theta and its conjugate in (iii) and (v)
H8ModuleAlgebra builtin_module_algebra(const HopfAlgebraModel& h, const std::string& tag, bool conjugate = false);
const std::vector<std::string>& tags();
// Throws AxiomViolation naming the failing instance.
bool verify_module_algebra(const HopfAlgebraModel& h, const H8ModuleAlgebra& s);
// multiplicities of W0..W4
std::array<int, 5> decompose_module(const HopfAlgebraModel& h, const H8Module& m);
// dim Z(S)^x: number of indecomposable summands over the Hopf subalgebra <x>
int x_summands(const HopfAlgebraModel& h, const H8ModuleAlgebra& s);

struct MoritaSeparators {
  int ii = 0, iii = 0, iv = 0, v = 0;
  bool separates() const { return ii != iii && iv != v; }
};
MoritaSeparators morita_separators(const HopfAlgebraModel& h);

struct MatchEntry {
  AlgebraDatum algebra;
  std::string tag;
  std::array<int, 5> multiplicities{};  // m_X(M) for X0..X4
};
struct MatchResult {
  std::vector<MatchEntry> entries;
  // "standard": X3 is the coset-xy simple with the smaller T_z root index
  std::string convention;
};
// Multiplicities m_X(M) = dim Hom(X (x) M, M) from the bimodule oracle, compared with
// decompose_module of (i)..(vi). Throws AmbiguousMatch if neither convention gives a bijection.
MatchResult match_classification(const GTCategory& c, const HopfAlgebraModel& h, bool conjugate_iii = false);

}  // namespace fc::h8
