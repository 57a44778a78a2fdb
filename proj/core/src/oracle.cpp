#include "fusioncat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fusioncat/modlinalg.hpp"

namespace fc {

namespace {

using Kind = OracleError::Kind;

int subgroup_exponent(const Subgroup& l) {
  int e = 1;
  for (int a : l.elements()) e = static_cast<int>(lcm64(e, l.parent()->element_order(a)));
  return e;
}

}  // namespace

// ---------------------------------------------------------------- ambient

Ambient::Ambient(Cochain omega, int64_t field_modulus)
    : omega_(std::move(omega)), f_(&CycField::get(field_modulus)), n_(omega_.group()->order()) {
  if (omega_.degree() != 3 || omega_.domain().size() != n_)
    throw OracleError(Kind::FieldMismatch, "ambient needs a 3-cochain on the whole group");
  if (field_modulus % omega_.modulus() != 0)
    throw OracleError(Kind::FieldMismatch, "field modulus must be a multiple of the omega modulus");
  roots_.reserve(field_modulus);
  for (int64_t k = 0; k < field_modulus; ++k) roots_.push_back(Cyc::root(*f_, k));
  wexp_.resize(static_cast<size_t>(n_) * n_ * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) wexp_[(a * n_ + b) * n_ + c] = scale(omega_(a, b, c), omega_.modulus());
}

const Cyc& Ambient::root(int64_t e) const { return roots_[mod_norm(e, f_->modulus())]; }

int64_t Ambient::scale(int64_t exponent, int64_t m) const {
  if (f_->modulus() % m != 0) throw OracleError(Kind::FieldMismatch, "cochain modulus does not divide field modulus");
  return mod_norm(exponent, m) * (f_->modulus() / m);
}

int64_t suggested_field_modulus(const GroupPtr& g, const std::vector<int64_t>& moduli) {
  int64_t m = 1;
  for (int64_t x : moduli) m = lcm64(m, x);
  return m * subgroup_exponent(Subgroup::whole(g));
}

AmbientPtr make_ambient(const Cochain& omega, const std::vector<int64_t>& extra_moduli) {
  std::vector<int64_t> mods = extra_moduli;
  mods.push_back(omega.modulus());
  return std::make_shared<Ambient>(omega, suggested_field_modulus(omega.group(), mods));
}

// ---------------------------------------------------------------- algebras

TwistedAlgebra::TwistedAlgebra(AmbientPtr amb, Cochain psi) : amb_(std::move(amb)), psi_(std::move(psi)) {
  const Subgroup& L = psi_.domain();
  const int n = L.size();
  pexp_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pexp_[i * n + j] = amb_->scale(psi_(L.elements()[i], L.elements()[j]), psi_.modulus());
}

int64_t TwistedAlgebra::psi_exp(int a, int b) const {
  const Subgroup& L = psi_.domain();
  return pexp_[L.position(a) * L.size() + L.position(b)];
}

AlgebraPtr twisted_group_algebra(const AmbientPtr& amb, const Cochain& psi) {
  if (psi.degree() != 2) throw OracleError(Kind::TwistMismatch, "psi must be a 2-cochain");
  if (psi.group() != amb->group()) throw OracleError(Kind::TwistMismatch, "psi lives on another group");
  auto a = std::make_shared<TwistedAlgebra>(amb, psi);
  std::string err = check_associativity(*a);
  if (!err.empty()) throw OracleError(Kind::TwistMismatch, err);
  return a;
}

std::string check_associativity(const TwistedAlgebra& alg) {
  // (d_a d_b) d_c -> d_a (d_b d_c) through the associator must agree:
  // psi(a,b) psi(ab,c) alpha(a,b,c)^-1 ... written with exponents of zeta_K.
  const auto& G = alg.ambient()->group();
  const auto& els = alg.subgroup().elements();
  for (int a : els)
    for (int b : els)
      for (int c : els) {
        int64_t lhs = alg.psi_exp(a, b) + alg.psi_exp(G->mul(a, b), c);
        int64_t rhs = alg.psi_exp(b, c) + alg.psi_exp(a, G->mul(b, c)) - alg.ambient()->omega_exp(a, b, c);
        if (mod_norm(lhs - rhs, alg.ambient()->field().modulus()) != 0) {
          std::ostringstream os;
          os << "d(psi) != omega on (" << G->name(a) << "," << G->name(b) << "," << G->name(c) << ")";
          return os.str();
        }
      }
  return "";
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  return a->ambient() == b->ambient() && a->subgroup() == b->subgroup() && a->psi() == b->psi();
}

// ---------------------------------------------------------------- bimodules

int Bimodule::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<int> Bimodule::support() const {
  std::vector<int> s;
  for (size_t d = 0; d < dims.size(); ++d)
    if (dims[d] > 0) s.push_back(static_cast<int>(d));
  return s;
}

const Mat& Bimodule::lambda(int a, int d) const { return left[A->subgroup().position(a)][d]; }
const Mat& Bimodule::rho(int b, int d) const { return right[B->subgroup().position(b)][d]; }

namespace {

Bimodule empty_bimodule(const AlgebraPtr& a, const AlgebraPtr& b, std::vector<int> dims) {
  Bimodule m;
  m.A = a;
  m.B = b;
  m.dims = std::move(dims);
  const auto& G = a->ambient()->group();
  const auto& F = a->ambient()->field();
  const int n = G->order();
  m.left.resize(a->dim());
  for (int p = 0; p < a->dim(); ++p) {
    int x = a->subgroup().elements()[p];
    for (int d = 0; d < n; ++d) m.left[p].emplace_back(F, m.dims[G->mul(x, d)], m.dims[d]);
  }
  m.right.resize(b->dim());
  for (int p = 0; p < b->dim(); ++p) {
    int y = b->subgroup().elements()[p];
    for (int d = 0; d < n; ++d) m.right[p].emplace_back(F, m.dims[G->mul(d, y)], m.dims[d]);
  }
  return m;
}

std::string describe_failure(const char* what, const GroupPtr& G, std::initializer_list<int> els) {
  std::ostringstream os;
  os << what << " fails at (";
  bool first = true;
  for (int e : els) {
    os << (first ? "" : ",") << G->name(e);
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string check_bimodule(const Bimodule& m) {
  const auto& amb = *m.A->ambient();
  const auto& G = amb.group();
  const auto& F = amb.field();
  const auto& LA = m.A->subgroup().elements();
  const auto& LB = m.B->subgroup().elements();
  if (m.B->ambient() != m.A->ambient()) return "algebras live in different ambients";
  for (int d : m.support()) {
    const Mat id = Mat::identity(F, m.dims[d]);
    if (m.lambda(G->identity(), d) != id) return describe_failure("left unit", G, {d});
    if (m.rho(G->identity(), d) != id) return describe_failure("right unit", G, {d});
    for (int a : LA)
      for (int a2 : LA) {
        // lambda_a lambda_a2 = psi(a,a2) alpha(a,a2,d)^-1 lambda_{a a2}
        Mat lhs = m.lambda(a, G->mul(a2, d)) * m.lambda(a2, d);
        Mat rhs = m.lambda(G->mul(a, a2), d) * amb.root(m.A->psi_exp(a, a2) + amb.omega_exp(a, a2, d));
        if (lhs != rhs) return describe_failure("left module axiom", G, {a, a2, d});
      }
    for (int b : LB)
      for (int b2 : LB) {
        // rho_b2 rho_b = alpha(d,b,b2) psi(b,b2) rho_{b b2}
        Mat lhs = m.rho(b2, G->mul(d, b)) * m.rho(b, d);
        Mat rhs = m.rho(G->mul(b, b2), d) * amb.root(m.B->psi_exp(b, b2) - amb.omega_exp(d, b, b2));
        if (lhs != rhs) return describe_failure("right module axiom", G, {d, b, b2});
      }
    for (int a : LA)
      for (int b : LB) {
        // alpha(a,d,b) lambda_a rho_b = rho_b lambda_a
        Mat lhs = m.lambda(a, G->mul(d, b)) * m.rho(b, d) * amb.alpha(a, d, b);
        Mat rhs = m.rho(b, G->mul(a, d)) * m.lambda(a, d);
        if (lhs != rhs) return describe_failure("middle associativity", G, {a, d, b});
      }
  }
  return "";
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  const auto& G = a->ambient()->group();
  const auto& amb = *a->ambient();
  std::vector<int> dims(G->order(), 0);
  for (int x : a->subgroup().elements()) dims[x] = 1;
  Bimodule m = empty_bimodule(a, a, dims);
  for (int x : a->subgroup().elements())
    for (int d : a->subgroup().elements()) {
      m.left[a->subgroup().position(x)][d](0, 0) = amb.root(a->psi_exp(x, d));
      m.right[a->subgroup().position(x)][d](0, 0) = amb.root(a->psi_exp(d, x));
    }
  return m;
}

Bimodule free_bimodule(const AlgebraPtr& a, const AlgebraPtr& b, int g) {
  if (a->ambient() != b->ambient()) throw OracleError(Kind::AlgebraMismatch, "algebras live in different ambients");
  const auto& amb = *a->ambient();
  const auto& G = amb.group();
  const auto& LA = a->subgroup();
  const auto& LB = b->subgroup();
  const int n = G->order();
  // basis (x,y) sits in degree x g y; slot[x][y] is its index there
  std::vector<int> dims(n, 0);
  std::vector<std::vector<int>> slot(LA.size(), std::vector<int>(LB.size()));
  for (int i = 0; i < LA.size(); ++i)
    for (int j = 0; j < LB.size(); ++j) {
      int d = G->mul(G->mul(LA.elements()[i], g), LB.elements()[j]);
      slot[i][j] = dims[d]++;
    }
  Bimodule m = empty_bimodule(a, b, dims);
  for (int i = 0; i < LA.size(); ++i)
    for (int j = 0; j < LB.size(); ++j) {
      const int x = LA.elements()[i], y = LB.elements()[j];
      const int xg = G->mul(x, g);
      const int d = G->mul(xg, y);
      for (int i2 = 0; i2 < LA.size(); ++i2) {
        const int x2 = LA.elements()[i2];
        const int tx = LA.position(G->mul(x2, x));
        int64_t e = a->psi_exp(x2, x) + amb.omega_exp(x2, x, g) + amb.omega_exp(x2, xg, y);
        m.left[i2][d](slot[tx][j], slot[i][j]) = amb.root(e);
      }
      for (int j2 = 0; j2 < LB.size(); ++j2) {
        const int y2 = LB.elements()[j2];
        const int ty = LB.position(G->mul(y, y2));
        int64_t e = b->psi_exp(y, y2) - amb.omega_exp(xg, y, y2);
        m.right[j2][d](slot[i][ty], slot[i][j]) = amb.root(e);
      }
    }
  return m;
}

Bimodule direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw OracleError(Kind::AlgebraMismatch, "empty direct sum");
  const auto& G = parts[0].A->ambient()->group();
  const int n = G->order();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts) {
    if (!same_algebra(p.A, parts[0].A) || !same_algebra(p.B, parts[0].B))
      throw OracleError(Kind::AlgebraMismatch, "direct sum of bimodules over different algebras");
    for (int d = 0; d < n; ++d) dims[d] += p.dims[d];
  }
  Bimodule m = empty_bimodule(parts[0].A, parts[0].B, dims);
  std::vector<int> off(n, 0);
  for (const auto& p : parts) {
    for (size_t k = 0; k < m.left.size(); ++k) {
      int x = m.A->subgroup().elements()[k];
      for (int d = 0; d < n; ++d) {
        const Mat& s = p.left[k][d];
        const int td = G->mul(x, d);
        for (int r = 0; r < s.rows(); ++r)
          for (int c = 0; c < s.cols(); ++c) m.left[k][d](off[td] + r, off[d] + c) = s(r, c);
      }
    }
    for (size_t k = 0; k < m.right.size(); ++k) {
      int y = m.B->subgroup().elements()[k];
      for (int d = 0; d < n; ++d) {
        const Mat& s = p.right[k][d];
        const int td = G->mul(d, y);
        for (int r = 0; r < s.rows(); ++r)
          for (int c = 0; c < s.cols(); ++c) m.right[k][d](off[td] + r, off[d] + c) = s(r, c);
      }
    }
    for (int d = 0; d < n; ++d) off[d] += p.dims[d];
  }
  return m;
}

// ---------------------------------------------------------------- projective reps

ProjRep restrict_rep(const ProjRep& r, const Mat& basis) {
  ProjRep out;
  out.field = r.field;
  out.H = r.H;
  out.dim = basis.cols();
  for (const auto& t : r.T) {
    auto c = solve(basis, t * basis);
    if (!c) throw OracleError(Kind::SplittingFailed, "subspace is not invariant");
    out.T.push_back(std::move(*c));
  }
  return out;
}

namespace {

// X T1_a = T2_a X for the generators a of H
Mat intertwiner_system(const ProjRep& r1, const ProjRep& r2) {
  const auto& F = *r1.field;
  const int n1 = r1.dim, n2 = r2.dim;
  Mat sys(F, 0, n1 * n2);
  const Mat i1 = Mat::identity(F, n1), i2 = Mat::identity(F, n2);
  for (int g : r1.H.generators()) {
    int p = r1.H.position(g);
    sys = vstack(sys, kron(r1.T[p].transpose(), i2) - kron(i1, r2.T[p]));
  }
  return sys;
}

Mat spin(const ProjRep& r, const Mat& v) {
  Mat basis = column_basis(v);
  std::vector<int> gens = r.H.generators();
  for (int k = 0; k < basis.cols(); ++k) {
    for (int g : gens) {
      Mat w = r.T[r.H.position(g)] * basis.col(k);
      if (rank(hstack(basis, w)) > basis.cols()) basis = hstack(basis, w);
    }
  }
  return basis;
}

// eigenspaces of T_a; the eigenvalues are roots of unity because T_a^o is a scalar root of unity
std::vector<Mat> eigenspaces(const ProjRep& r, int a) {
  const auto& F = *r.field;
  const Mat& t = r.T[r.H.position(a)];
  const int o = r.H.parent()->element_order(a);
  std::vector<Mat> out;
  Mat p = Mat::identity(F, r.dim);
  for (int k = 0; k < o; ++k) p = p * t;
  const int64_t K = F.modulus();
  const int64_t s = p(0, 0).root_index();
  if (s < 0 || p != Mat::scalar(F, r.dim, p(0, 0))) return out;
  int found = 0;
  for (int64_t u = 0; u < K && found < r.dim; ++u) {
    if (mod_norm(o * u - s, K) != 0) continue;
    Mat e = nullspace(t - Mat::scalar(F, r.dim, Cyc::root(F, u)));
    if (e.cols() > 0) {
      found += e.cols();
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::optional<Mat> proper_submodule(const ProjRep& r) {
  const int k = r.dim;
  // cyclic submodules generated by eigenvectors
  std::vector<Mat> joint{Mat::identity(*r.field, k)};
  for (int a : r.H.elements()) {
    if (a == r.H.parent()->identity()) continue;
    auto es = eigenspaces(r, a);
    for (const auto& e : es)
      for (int c = 0; c < e.cols(); ++c) {
        Mat w = spin(r, e.col(c));
        if (w.cols() < k) return w;
      }
    // refine the joint eigenspaces
    std::vector<Mat> next;
    for (const auto& j : joint)
      for (const auto& e : es) {
        Mat x = intersect_spaces(j, e);
        if (x.cols() > 0) next.push_back(std::move(x));
      }
    if (!next.empty()) joint = std::move(next);
  }
  for (const auto& j : joint)
    for (int c = 0; c < j.cols(); ++c) {
      Mat w = spin(r, j.col(c));
      if (w.cols() < k) return w;
    }
  // kernels of commutant elements are submodules
  Mat ns = nullspace(intertwiner_system(r, r));
  if (ns.cols() <= 1) return std::nullopt;
  const auto& F = *r.field;
  for (int c = 0; c < ns.cols(); ++c) {
    Mat x = unvec(ns.col(c), k, k);
    Mat ker = nullspace(x);
    if (ker.cols() > 0 && ker.cols() < k) return ker;
    for (int64_t u = 0; u < F.modulus(); ++u) {
      Mat e = nullspace(x - Mat::scalar(F, k, Cyc::root(F, u)));
      if (e.cols() > 0 && e.cols() < k) return e;
    }
  }
  throw OracleError(Kind::SplittingFailed, "could not split a reducible representation over the chosen field");
}

// H-invariant complement of the invariant subspace w
Mat invariant_complement(const ProjRep& r, const Mat& w) {
  const auto& F = *r.field;
  const int k = r.dim;
  Rref e = rref(hstack(w, Mat::identity(F, k)));
  Mat q = hstack(w, Mat::identity(F, k)).cols_range(e.pivots);
  Mat d(F, k, k);
  for (int i = 0; i < w.cols(); ++i) d(i, i) = Cyc::one(F);
  auto qi = inverse(q);
  Mat p0 = q * d * *qi;
  Mat p(F, k, k);
  for (const auto& t : r.T) {
    auto ti = inverse(t);
    p = p + *ti * p0 * t;
  }
  return nullspace(p);
}

void split_into(const ProjRep& r, const Mat& u, std::vector<Mat>& out) {
  if (u.cols() <= 1) {
    out.push_back(u);
    return;
  }
  ProjRep ru = restrict_rep(r, u);
  auto w = proper_submodule(ru);
  if (!w) {
    out.push_back(u);
    return;
  }
  Mat c = invariant_complement(ru, *w);
  if (c.cols() + w->cols() != u.cols()) throw OracleError(Kind::NonSemisimpleInput, "no invariant complement");
  split_into(r, u * *w, out);
  split_into(r, u * c, out);
}

}  // namespace

std::vector<Mat> irreducible_subspaces(const ProjRep& r) {
  std::vector<Mat> out;
  if (r.dim == 0) return out;
  split_into(r, Mat::identity(*r.field, r.dim), out);
  return out;
}

int intertwiner_dim(const ProjRep& r1, const ProjRep& r2) {
  if (r1.dim == 0 || r2.dim == 0) return 0;
  return r1.dim * r2.dim - rank(intertwiner_system(r1, r2));
}

std::vector<int> projective_irrep_dims(const Cochain& phi) {
  const Subgroup& H = phi.domain();
  const auto& G = phi.group();
  const CycField& F = CycField::get(phi.modulus() * subgroup_exponent(H));
  const int64_t sc = F.modulus() / phi.modulus();
  ProjRep reg;
  reg.field = &F;
  reg.H = H;
  reg.dim = H.size();
  for (int a : H.elements()) {
    Mat t(F, H.size(), H.size());
    for (int b : H.elements()) t(H.position(G->mul(a, b)), H.position(b)) = Cyc::root(F, phi(a, b) * sc);
    reg.T.push_back(std::move(t));
  }
  std::vector<ProjRep> distinct;
  for (const auto& w : irreducible_subspaces(reg)) {
    ProjRep s = restrict_rep(reg, w);
    bool seen = false;
    for (const auto& d : distinct)
      if (d.dim == s.dim && intertwiner_dim(d, s) > 0) seen = true;
    if (!seen) distinct.push_back(std::move(s));
  }
  std::vector<int> dims;
  for (const auto& d : distinct) dims.push_back(d.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

// ---------------------------------------------------------------- orbit blocks

namespace {

// The part of a bimodule over one double coset L_A d0 L_B: the stabilizer
// H = L_A cap d0 L_B d0^-1 acts on M_{d0} by T_a = rho_b lambda_a with
// b = d0^-1 a^-1 d0, and P_g = rho_b lambda_a moves M_{d0} onto M_g.
struct Block {
  int d0 = 0;
  std::vector<int> coset;
  std::vector<Mat> path;  // aligned with coset
  ProjRep rep;
};

std::vector<Block> blocks(const Bimodule& m) {
  const auto& G = m.A->ambient()->group();
  const auto& LA = m.A->subgroup();
  const auto& LB = m.B->subgroup();
  auto dc = double_cosets(LA, LB);
  std::vector<Block> out;
  for (size_t k = 0; k < dc.cosets.size(); ++k) {
    const int d0 = dc.representatives[k];
    if (m.dims[d0] == 0) continue;
    Block bl;
    bl.d0 = d0;
    bl.coset = dc.cosets[k];
    for (int g : bl.coset) {
      for (int a : LA.elements()) {
        int b = G->mul(G->inv(G->mul(a, d0)), g);
        if (!LB.contains(b)) continue;
        bl.path.push_back(m.rho(b, G->mul(a, d0)) * m.lambda(a, d0));
        break;
      }
    }
    bl.rep.field = &m.field();
    bl.rep.H = intersection(LA, conjugate(LB, d0));
    bl.rep.dim = m.dims[d0];
    for (int a : bl.rep.H.elements()) {
      int b = G->mul(G->mul(G->inv(d0), G->inv(a)), d0);
      bl.rep.T.push_back(m.rho(b, G->mul(a, d0)) * m.lambda(a, d0));
    }
    out.push_back(std::move(bl));
  }
  return out;
}

void require_same_pair(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.A, n.A) || !same_algebra(m.B, n.B))
    throw OracleError(Kind::AlgebraMismatch, "bimodules over different algebra pairs");
}

// sub-bimodule with the given per-degree column bases
Bimodule sub_bimodule(const Bimodule& m, const std::vector<Mat>& bases) {
  const auto& G = m.A->ambient()->group();
  const int n = G->order();
  std::vector<int> dims(n);
  for (int d = 0; d < n; ++d) dims[d] = bases[d].cols();
  Bimodule s = empty_bimodule(m.A, m.B, dims);
  for (int d = 0; d < n; ++d) {
    if (dims[d] == 0) continue;
    for (size_t k = 0; k < s.left.size(); ++k) {
      int td = G->mul(m.A->subgroup().elements()[k], d);
      auto c = solve(bases[td], m.left[k][d] * bases[d]);
      if (!c) throw OracleError(Kind::SplittingFailed, "subspace is not a sub-bimodule");
      s.left[k][d] = std::move(*c);
    }
    for (size_t k = 0; k < s.right.size(); ++k) {
      int td = G->mul(d, m.B->subgroup().elements()[k]);
      auto c = solve(bases[td], m.right[k][d] * bases[d]);
      if (!c) throw OracleError(Kind::SplittingFailed, "subspace is not a sub-bimodule");
      s.right[k][d] = std::move(*c);
    }
  }
  return s;
}

}  // namespace

HomSpace hom_space(const Bimodule& m, const Bimodule& n, bool with_basis) {
  require_same_pair(m, n);
  const auto& F = m.field();
  const int ng = m.A->ambient()->group()->order();
  HomSpace hs;
  auto bm = blocks(m);
  auto bn = blocks(n);
  for (const auto& x : bm)
    for (const auto& y : bn) {
      if (x.d0 != y.d0) continue;
      if (!with_basis) {
        hs.dim += intertwiner_dim(x.rep, y.rep);
        continue;
      }
      Mat ns = nullspace(intertwiner_system(x.rep, y.rep));
      for (int c = 0; c < ns.cols(); ++c) {
        Mat f0 = unvec(ns.col(c), y.rep.dim, x.rep.dim);
        BimoduleMap f;
        for (int d = 0; d < ng; ++d) f.comps.emplace_back(F, n.dims[d], m.dims[d]);
        for (size_t k = 0; k < x.coset.size(); ++k)
          f.comps[x.coset[k]] = y.path[k] * f0 * *inverse(x.path[k]);
        hs.basis.push_back(std::move(f));
      }
      hs.dim += ns.cols();
    }
  return hs;
}

int hom_dim(const Bimodule& m, const Bimodule& n) { return hom_space(m, n).dim; }

std::vector<Bimodule> decompose(const Bimodule& m) {
  const auto& G = m.A->ambient()->group();
  const auto& F = m.field();
  std::vector<Bimodule> out;
  for (const auto& bl : blocks(m)) {
    for (const auto& w : irreducible_subspaces(bl.rep)) {
      std::vector<Mat> bases;
      for (int d = 0; d < G->order(); ++d) bases.emplace_back(F, m.dims[d], 0);
      for (size_t k = 0; k < bl.coset.size(); ++k) bases[bl.coset[k]] = bl.path[k] * w;
      out.push_back(sub_bimodule(m, bases));
    }
  }
  return out;
}

bool is_simple(const Bimodule& m) { return m.total_dim() > 0 && hom_dim(m, m) == 1; }

bool isomorphic_simples(const Bimodule& a, const Bimodule& b) {
  return a.dims == b.dims && hom_dim(a, b) == 1 && hom_dim(b, a) == 1;
}

int center_dimension(const Bimodule& m) {
  std::vector<Bimodule> distinct;
  for (auto& s : decompose(m)) {
    bool seen = false;
    for (const auto& d : distinct)
      if (isomorphic_simples(d, s)) seen = true;
    if (!seen) distinct.push_back(std::move(s));
  }
  return static_cast<int>(distinct.size());
}

// ---------------------------------------------------------------- tensor product

Bimodule tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.B, n.A)) throw OracleError(Kind::AlgebraMismatch, "right algebra of M differs from left algebra of N");
  const auto& amb = *m.A->ambient();
  const auto& G = amb.group();
  const auto& F = amb.field();
  const int ng = G->order();
  const auto& LB = m.B->subgroup().elements();

  // W_g = sum over d e = g of M_d (x) N_e; offset[d][e] inside W_g
  std::vector<int> wdim(ng, 0);
  std::vector<std::vector<int>> offset(ng, std::vector<int>(ng, -1));
  for (int d = 0; d < ng; ++d)
    for (int e = 0; e < ng; ++e)
      if (m.dims[d] && n.dims[e]) {
        int g = G->mul(d, e);
        offset[d][e] = wdim[g];
        wdim[g] += m.dims[d] * n.dims[e];
      }

  auto add_into = [&](Mat& dst, int row_off, int col_off, const Mat& src) {
    for (int r = 0; r < src.rows(); ++r)
      for (int c = 0; c < src.cols(); ++c)
        if (!src(r, c).is_zero()) dst(row_off + r, col_off + c) += src(r, c);
  };

  // relations rho_b(m) (x) n - alpha(d,b,e) m (x) lambda_b(n), as rows
  std::vector<Mat> rel(ng);
  for (int g = 0; g < ng; ++g) rel[g] = Mat(F, 0, wdim[g]);
  for (int d = 0; d < ng; ++d)
    for (int b : LB) {
      if (b == G->identity()) continue;
      int db = G->mul(d, b);
      if (!m.dims[d] || !m.dims[db]) continue;
      for (int e = 0; e < ng; ++e) {
        int be = G->mul(b, e);
        if (!n.dims[e] || !n.dims[be]) continue;
        int g = G->mul(db, e);
        const int src = m.dims[d] * n.dims[e];
        Mat cols(F, wdim[g], src);
        add_into(cols, offset[db][e], 0, kron(m.rho(b, d), Mat::identity(F, n.dims[e])));
        add_into(cols, offset[d][be], 0, kron(Mat::identity(F, m.dims[d]), n.lambda(b, e)) * (-amb.alpha(d, b, e)));
        rel[g] = vstack(rel[g], cols.transpose());
      }
    }

  // quotient coordinates: the non-pivot positions of the reduced relations
  std::vector<Rref> red(ng);
  std::vector<std::vector<int>> keep(ng);
  std::vector<int> qdim(ng, 0);
  for (int g = 0; g < ng; ++g) {
    red[g] = rref(rel[g]);
    std::vector<char> piv(wdim[g], 0);
    for (int p : red[g].pivots) piv[p] = 1;
    for (int j = 0; j < wdim[g]; ++j)
      if (!piv[j]) keep[g].push_back(j);
    qdim[g] = static_cast<int>(keep[g].size());
  }
  // projection W_g -> Q_g and section Q_g -> W_g
  auto proj = [&](int g) {
    Mat p(F, qdim[g], wdim[g]);
    std::vector<int> pos(wdim[g], -1);
    for (int k = 0; k < qdim[g]; ++k) {
      pos[keep[g][k]] = k;
      p(k, keep[g][k]) = Cyc::one(F);
    }
    for (int i = 0; i < red[g].rank(); ++i)
      for (int k = 0; k < qdim[g]; ++k) {
        const Cyc& v = red[g].m(i, keep[g][k]);
        if (!v.is_zero()) p(k, red[g].pivots[i]) = -v;
      }
    return p;
  };
  auto sect = [&](int g) {
    Mat s(F, wdim[g], qdim[g]);
    for (int k = 0; k < qdim[g]; ++k) s(keep[g][k], k) = Cyc::one(F);
    return s;
  };
  std::vector<Mat> P(ng), S(ng);
  for (int g = 0; g < ng; ++g) {
    P[g] = proj(g);
    S[g] = sect(g);
  }

  Bimodule t = empty_bimodule(m.A, n.B, qdim);
  const auto& LA = m.A->subgroup().elements();
  const auto& LC = n.B->subgroup().elements();
  for (int g = 0; g < ng; ++g) {
    if (!qdim[g]) continue;
    for (size_t k = 0; k < LA.size(); ++k) {
      const int a = LA[k];
      const int ag = G->mul(a, g);
      Mat op(F, wdim[ag], wdim[g]);
      for (int d = 0; d < ng; ++d) {
        int e = G->mul(G->inv(d), g);
        if (offset[d][e] < 0) continue;
        Mat blk = kron(m.lambda(a, d), Mat::identity(F, n.dims[e])) * amb.alpha_inv(a, d, e);
        add_into(op, offset[G->mul(a, d)][e], offset[d][e], blk);
      }
      t.left[k][g] = P[ag] * op * S[g];
    }
    for (size_t k = 0; k < LC.size(); ++k) {
      const int c = LC[k];
      const int gc = G->mul(g, c);
      Mat op(F, wdim[gc], wdim[g]);
      for (int d = 0; d < ng; ++d) {
        int e = G->mul(G->inv(d), g);
        if (offset[d][e] < 0) continue;
        Mat blk = kron(Mat::identity(F, m.dims[d]), n.rho(c, e)) * amb.alpha(d, e, c);
        add_into(op, offset[d][G->mul(e, c)], offset[d][e], blk);
      }
      t.right[k][g] = P[gc] * op * S[g];
    }
  }
  return t;
}

// ---------------------------------------------------------------- catalogue, duals

namespace {

std::mutex catalogue_mu;
std::map<std::pair<const TwistedAlgebra*, const TwistedAlgebra*>, std::shared_ptr<const SimpleCatalogue>>
    catalogue_cache;

SimpleCatalogue build_catalogue(const AlgebraPtr& a, const AlgebraPtr& b) {
  SimpleCatalogue cat;
  cat.A = a;
  cat.B = b;
  auto dc = double_cosets(a->subgroup(), b->subgroup());
  for (int g : dc.representatives) {
    std::vector<Bimodule> distinct;
    for (auto& s : decompose(free_bimodule(a, b, g))) {
      bool seen = false;
      for (const auto& d : distinct)
        if (isomorphic_simples(d, s)) seen = true;
      if (!seen) distinct.push_back(std::move(s));
    }
    std::stable_sort(distinct.begin(), distinct.end(),
                     [](const Bimodule& x, const Bimodule& y) { return x.total_dim() < y.total_dim(); });
    for (auto& s : distinct) {
      cat.simples.push_back(std::move(s));
      cat.coset_rep.push_back(g);
    }
  }
  return cat;
}

std::shared_ptr<const SimpleCatalogue> cached_catalogue(const AlgebraPtr& a, const AlgebraPtr& b) {
  auto key = std::make_pair(a.get(), b.get());
  {
    std::lock_guard<std::mutex> lk(catalogue_mu);
    auto it = catalogue_cache.find(key);
    if (it != catalogue_cache.end() && same_algebra(it->second->A, a) && same_algebra(it->second->B, b))
      return it->second;
  }
  auto cat = std::make_shared<const SimpleCatalogue>(build_catalogue(a, b));
  std::lock_guard<std::mutex> lk(catalogue_mu);
  catalogue_cache[key] = cat;
  return cat;
}

Bimodule dual_of_simple(const Bimodule& s) {
  auto cat = cached_catalogue(s.B, s.A);
  Bimodule unit = regular_bimodule(s.A);
  int found = -1;
  for (size_t k = 0; k < cat->simples.size(); ++k) {
    if (cat->simples[k].total_dim() != s.total_dim()) continue;
    if (hom_dim(unit, tensor_over(s, cat->simples[k])) > 0) {
      if (found >= 0) throw OracleError(Kind::AxiomViolation, "two candidate duals for one simple");
      found = static_cast<int>(k);
    }
  }
  if (found < 0) throw OracleError(Kind::AxiomViolation, "no dual found for a simple bimodule");
  return cat->simples[found];
}

}  // namespace

SimpleCatalogue simple_catalogue(const AlgebraPtr& a, const AlgebraPtr& b) { return *cached_catalogue(a, b); }

int SimpleCatalogue::find(const Bimodule& x) const {
  for (size_t k = 0; k < simples.size(); ++k)
    if (simples[k].dims == x.dims && hom_dim(simples[k], x) > 0) return static_cast<int>(k);
  return -1;
}

Bimodule dual_bimodule(const Bimodule& x) {
  std::vector<Bimodule> parts;
  for (const auto& s : decompose(x)) parts.push_back(dual_of_simple(s));
  return direct_sum(parts);
}

bool is_invertible(const Bimodule& x) {
  if (x.total_dim() == 0) return false;
  Bimodule d = dual_bimodule(x);
  auto is_unit = [](const Bimodule& y, const AlgebraPtr& a) {
    Bimodule u = regular_bimodule(a);
    return y.dims == u.dims && hom_dim(u, y) == 1;
  };
  return is_unit(tensor_over(x, d), x.A) && is_unit(tensor_over(d, x), x.B);
}

// ---------------------------------------------------------------- conjugation

namespace {

std::vector<std::vector<int>> orbits_from_action(int n, const std::vector<std::vector<int>>& images) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto& img : images)
    for (int k = 0; k < n; ++k) {
      int r1 = root(k), r2 = root(img[k]);
      if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
  std::map<int, std::vector<int>> by_root;
  for (int k = 0; k < n; ++k) by_root[root(k)].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : by_root) out.push_back(std::move(v));
  return out;
}

std::vector<int> invertible_indices(const SimpleCatalogue& cat) {
  std::vector<int> inv;
  const int unit_dim = cat.A->dim();
  for (size_t k = 0; k < cat.simples.size(); ++k)
    if (cat.simples[k].total_dim() == unit_dim && is_invertible(cat.simples[k])) inv.push_back(static_cast<int>(k));
  return inv;
}

}  // namespace

OrbitReport conjugacy_classes(const AlgebraPtr& a) {
  auto cat = cached_catalogue(a, a);
  OrbitReport rep;
  rep.num_simples = static_cast<int>(cat->simples.size());
  rep.invertible = invertible_indices(*cat);
  std::vector<std::vector<int>> images;
  for (int x : rep.invertible) {
    const Bimodule& X = cat->simples[x];
    Bimodule Xd = dual_bimodule(X);
    std::vector<int> img;
    for (const auto& e : cat->simples) {
      int k = cat->find(tensor_over(tensor_over(Xd, e), X));
      if (k < 0) throw OracleError(Kind::AxiomViolation, "conjugate of a simple is not in the catalogue");
      img.push_back(k);
    }
    images.push_back(std::move(img));
  }
  rep.orbits = orbits_from_action(rep.num_simples, images);
  return rep;
}

OrbitReport two_vertex_classes(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  auto cat = cached_catalogue(a1, a2);
  auto c1 = cached_catalogue(a1, a1);
  auto c2 = cached_catalogue(a2, a2);
  OrbitReport rep;
  rep.num_simples = static_cast<int>(cat->simples.size());
  std::vector<std::vector<int>> images;
  // the pair group is generated by (X1, 1) and (1, X2)
  for (int x : invertible_indices(*c1)) {
    const Bimodule& X = c1->simples[x];
    Bimodule Xd = dual_bimodule(X);
    std::vector<int> img;
    for (const auto& e : cat->simples) img.push_back(cat->find(tensor_over(Xd, e)));
    images.push_back(std::move(img));
  }
  for (int x : invertible_indices(*c2)) {
    const Bimodule& X = c2->simples[x];
    std::vector<int> img;
    for (const auto& e : cat->simples) img.push_back(cat->find(tensor_over(e, X)));
    images.push_back(std::move(img));
  }
  for (const auto& img : images)
    for (int k : img)
      if (k < 0) throw OracleError(Kind::AxiomViolation, "translate of a simple is not in the catalogue");
  rep.orbits = orbits_from_action(rep.num_simples, images);
  return rep;
}

InvertibleGroup invertible_group(const AlgebraPtr& a) {
  auto cat = cached_catalogue(a, a);
  InvertibleGroup ig;
  ig.members = invertible_indices(*cat);
  const int n = static_cast<int>(ig.members.size());
  std::map<int, int> pos;
  for (int k = 0; k < n; ++k) pos[ig.members[k]] = k;
  ig.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = cat->find(tensor_over(cat->simples[ig.members[i]], cat->simples[ig.members[j]]));
      if (!pos.count(k)) throw OracleError(Kind::AxiomViolation, "product of invertibles is not invertible");
      ig.table[i][j] = pos[k];
    }
  Bimodule unit = regular_bimodule(a);
  ig.identity = pos.at(cat->find(unit));
  ig.abelian = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ig.table[i][j] != ig.table[j][i]) ig.abelian = false;
  for (int i = 0; i < n; ++i) {
    int o = 1, x = i;
    while (x != ig.identity) {
      x = ig.table[x][i];
      ++o;
    }
    ig.element_orders.push_back(o);
  }
  ig.cyclic = std::find(ig.element_orders.begin(), ig.element_orders.end(), n) != ig.element_orders.end();
  return ig;
}

}  // namespace fc
