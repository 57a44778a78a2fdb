#include "fusioncat/h8.hpp"

#include <algorithm>

#include "fusioncat/oracle.hpp"

namespace fc::h8 {

namespace {

using K = H8Error::Kind;

const CycField& qi() { return CycField::get(4); }
Cyc zero() { return Cyc::zero(qi()); }
Cyc rat(long p, long q = 1) { return Cyc(qi(), mpq_class(p, q)); }
Cyc imag() { return Cyc::root(qi(), 1); }

Elem zero_elem(int n) { return Elem(n, zero()); }
Elem unit_vec(int n, int k) {
  Elem e = zero_elem(n);
  e[k] = rat(1);
  return e;
}

// Sum of u_i v_j t[i][j] for a bilinear table t.
Elem bilinear(const std::vector<std::vector<Elem>>& t, const Elem& u, const Elem& v) {
  const int n = static_cast<int>(u.size());
  Elem r = zero_elem(static_cast<int>(t[0][0].size()));
  for (int i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      Cyc s = u[i] * v[j];
      for (size_t k = 0; k < r.size(); ++k)
        if (!t[i][j][k].is_zero()) r[k] += s * t[i][j][k];
    }
  }
  return r;
}

Mat tensor_product(const HopfAlgebraModel& h, const Mat& t, const Mat& u) {
  Mat r(qi(), 8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (t(i, j).is_zero()) continue;
      for (int k = 0; k < 8; ++k)
        for (int l = 0; l < 8; ++l) {
          if (u(k, l).is_zero()) continue;
          Cyc s = t(i, j) * u(k, l);
          const Elem& a = h.mult[i][k];
          const Elem& b = h.mult[j][l];
          for (int p = 0; p < 8; ++p) {
            if (a[p].is_zero()) continue;
            for (int q = 0; q < 8; ++q)
              if (!b[q].is_zero()) r(p, q) += s * a[p] * b[q];
          }
        }
    }
  return r;
}

Mat simple_tensor(int i, int j, const Cyc& c) {
  Mat r(qi(), 8, 8);
  r(i, j) = c;
  return r;
}

Mat column(const Elem& v) {
  Mat m(qi(), static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

Elem as_elem(const Mat& m) {
  Elem v;
  for (int i = 0; i < m.rows(); ++i) v.push_back(m(i, 0));
  return v;
}

// matrix with row i picking input coordinate p[i]
Mat permutation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  Mat m(qi(), n, n);
  for (int i = 0; i < n; ++i) m(i, p[i]) = rat(1);
  return m;
}

Mat diag(const std::vector<Cyc>& d) {
  const int n = static_cast<int>(d.size());
  Mat m(qi(), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

std::vector<std::vector<Elem>> pointwise_product(int n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n, zero_elem(n)));
  for (int i = 0; i < n; ++i) t[i][i][i] = rat(1);
  return t;
}

Cyc trace(const Mat& m) {
  Cyc s = zero();
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

[[noreturn]] void violation(const std::string& what) { throw H8Error(K::AxiomViolation, what); }

}  // namespace

Elem HopfAlgebraModel::basis(int k) const { return unit_vec(dim, k); }

Elem HopfAlgebraModel::multiply(const Elem& a, const Elem& b) const { return bilinear(mult, a, b); }

Elem HopfAlgebraModel::apply_antipode(const Elem& a) const {
  Elem r = zero_elem(dim);
  for (int k = 0; k < dim; ++k)
    if (!a[k].is_zero())
      for (int p = 0; p < dim; ++p) r[p] += a[k] * antipode[k][p];
  return r;
}

HopfAlgebraModel build_h8() {
  HopfAlgebraModel h;
  h.field = &qi();
  h.labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  h.mult.assign(8, std::vector<Elem>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int c1 = i >> 2, c2 = j >> 2;
      int n2 = j & 3;
      if (c1) n2 = ((n2 & 1) << 1) | (n2 >> 1);  // z n = sigma(n) z, sigma swapping x and y
      const int m = (i & 3) ^ n2;
      Elem r = zero_elem(8);
      if (c1 + c2 < 2) {
        r[m + 4 * (c1 + c2)] = rat(1);
      } else {
        // z^2 = (1 + x + y - xy) / 2
        r[m] += rat(1, 2);
        r[m ^ 1] += rat(1, 2);
        r[m ^ 2] += rat(1, 2);
        r[m ^ 3] -= rat(1, 2);
      }
      h.mult[i][j] = r;
    }

  Mat dx = simple_tensor(1, 1, rat(1));
  Mat dy = simple_tensor(2, 2, rat(1));
  Mat p = simple_tensor(0, 0, rat(1, 2)) + simple_tensor(2, 0, rat(1, 2)) + simple_tensor(0, 1, rat(1, 2)) +
          simple_tensor(2, 1, rat(-1, 2));
  Mat dz = tensor_product(h, p, simple_tensor(4, 4, rat(1)));
  for (int k = 0; k < 8; ++k) {
    Mat d = simple_tensor(0, 0, rat(1));
    if (k & 1) d = tensor_product(h, d, dx);
    if (k & 2) d = tensor_product(h, d, dy);
    if (k & 4) d = tensor_product(h, d, dz);
    h.comult.push_back(d);
  }
  h.counit.assign(8, rat(1));
  // S(x^a y^b z^c) = z^c y^b x^a
  for (int k = 0; k < 8; ++k) h.antipode.push_back(h.mult[k & 4][k & 3]);
  return h;
}

std::vector<std::string> check_hopf_axioms(const HopfAlgebraModel& h) {
  std::vector<std::string> bad;
  auto note = [&](bool ok, const std::string& name) {
    if (!ok && (bad.empty() || bad.back() != name)) bad.push_back(name);
  };
  const Elem one = h.basis(0);
  for (int i = 0; i < 8; ++i) {
    note(h.multiply(one, h.basis(i)) == h.basis(i) && h.multiply(h.basis(i), one) == h.basis(i), "unit");
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k)
        note(h.multiply(h.mult[i][j], h.basis(k)) == h.multiply(h.basis(i), h.mult[j][k]), "associativity");
  }
  // relations of the presentation
  auto e = [&](int k) { return h.basis(k); };
  Elem z2 = zero_elem(8);
  z2[0] = rat(1, 2), z2[1] = rat(1, 2), z2[2] = rat(1, 2), z2[3] = rat(-1, 2);
  note(h.mult[4][4] == z2, "z^2 relation");
  note(h.mult[4][1] == h.multiply(e(2), e(4)) && h.mult[4][2] == h.multiply(e(1), e(4)), "zx = yz, zy = xz");
  note(h.mult[1][1] == one && h.mult[2][2] == one && h.mult[1][2] == h.mult[2][1], "x, y relations");

  auto delta = [&](const Elem& a) {
    Mat r(qi(), 8, 8);
    for (int k = 0; k < 8; ++k)
      if (!a[k].is_zero()) r = r + h.comult[k] * a[k];
    return r;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      note(delta(h.mult[i][j]) == tensor_product(h, h.comult[i], h.comult[j]), "comultiplication is multiplicative");

  for (int k = 0; k < 8; ++k) {
    const Mat& d = h.comult[k];
    // (Delta (x) id) Delta vs (id (x) Delta) Delta, as 512-vectors
    std::vector<Cyc> left(512, zero()), right(512, zero());
    Elem l_counit = zero_elem(8), r_counit = zero_elem(8), l_anti = zero_elem(8), r_anti = zero_elem(8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (d(i, j).is_zero()) continue;
        for (int p = 0; p < 8; ++p)
          for (int q = 0; q < 8; ++q) {
            if (!h.comult[i](p, q).is_zero()) left[(p * 8 + q) * 8 + j] += d(i, j) * h.comult[i](p, q);
            if (!h.comult[j](p, q).is_zero()) right[(i * 8 + p) * 8 + q] += d(i, j) * h.comult[j](p, q);
          }
        l_counit[j] += d(i, j) * h.counit[i];
        r_counit[i] += d(i, j) * h.counit[j];
        Elem a = h.multiply(h.antipode[i], e(j));
        Elem b = h.multiply(e(i), h.antipode[j]);
        for (int p = 0; p < 8; ++p) {
          l_anti[p] += d(i, j) * a[p];
          r_anti[p] += d(i, j) * b[p];
        }
      }
    note(left == right, "coassociativity");
    note(l_counit == e(k) && r_counit == e(k), "counit");
    Elem target = zero_elem(8);
    target[0] = h.counit[k];
    note(l_anti == target && r_anti == target, "antipode");
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      note(h.apply_antipode(h.mult[i][j]) == h.multiply(h.antipode[j], h.antipode[i]), "antipode is an antihomomorphism");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Cyc eps = zero();
      for (int k = 0; k < 8; ++k)
        if (!h.mult[i][j][k].is_zero()) eps += h.mult[i][j][k] * h.counit[k];
      note(eps == h.counit[i] * h.counit[j], "counit is multiplicative");
    }
  return bad;
}

std::vector<Mat> basis_action(const HopfAlgebraModel& h, const H8Module& m) {
  (void)h;
  std::vector<Mat> out;
  for (int k = 0; k < 8; ++k) {
    Mat r = Mat::identity(qi(), m.dim);
    if (k & 1) r = r * m.gens[0];
    if (k & 2) r = r * m.gens[1];
    if (k & 4) r = r * m.gens[2];
    out.push_back(r);
  }
  return out;
}

std::string check_module(const HopfAlgebraModel& h, const H8Module& m) {
  auto rho = basis_action(h, m);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Mat rhs(qi(), m.dim, m.dim);
      for (int k = 0; k < 8; ++k)
        if (!h.mult[i][j][k].is_zero()) rhs = rhs + rho[k] * h.mult[i][j][k];
      if (rho[i] * rho[j] != rhs) return m.name + ": action of " + h.labels[i] + "*" + h.labels[j];
    }
  return "";
}

std::vector<H8Module> irreps(const HopfAlgebraModel& h) {
  std::vector<H8Module> w;
  w.push_back({"W0", 2, {diag({rat(-1), rat(1)}), diag({rat(1), rat(-1)}), permutation({1, 0})}});
  auto one_dim = [](const std::string& n, Cyc a, Cyc b, Cyc c) {
    return H8Module{n, 1, {diag({a}), diag({b}), diag({c})}};
  };
  w.push_back(one_dim("W1", rat(1), rat(1), rat(1)));
  w.push_back(one_dim("W2", rat(1), rat(1), rat(-1)));
  w.push_back(one_dim("W3", rat(-1), rat(-1), imag()));
  w.push_back(one_dim("W4", rat(-1), rat(-1), -imag()));
  for (const auto& m : w) {
    auto err = check_module(h, m);
    if (!err.empty()) violation(err);
  }
  return w;
}

std::vector<Cyc> character(const HopfAlgebraModel& h, const H8Module& m) {
  std::vector<Cyc> chi;
  for (const auto& r : basis_action(h, m)) chi.push_back(trace(r));
  return chi;
}

const std::vector<std::string>& tags() {
  static const std::vector<std::string> t = {"i", "ii", "iii", "iv", "v", "vi"};
  return t;
}

H8ModuleAlgebra builtin_module_algebra(const HopfAlgebraModel& h, const std::string& tag, bool conjugate) {
  const Cyc th = rat(1, 2) + imag() * mpq_class(conjugate ? -1 : 1, 2);
  const Cyc tb = th.conjugate();
  H8ModuleAlgebra s;
  s.tag = tag;
  auto commutative = [&](int n, Mat x, Mat y, Mat z) {
    s.module = {tag, n, {std::move(x), std::move(y), std::move(z)}};
    s.product = pointwise_product(n);
    s.unit = Elem(n, rat(1));
  };
  if (tag == "i") {
    Mat id = Mat::identity(qi(), 1);
    commutative(1, id, id, id);
  } else if (tag == "ii") {
    Mat id = Mat::identity(qi(), 2);
    commutative(2, id, id, permutation({1, 0}));
  } else if (tag == "iii") {
    Mat z(qi(), 2, 2);
    z(0, 0) = th, z(0, 1) = tb, z(1, 0) = tb, z(1, 1) = th;
    commutative(2, permutation({1, 0}), permutation({1, 0}), z);
  } else if (tag == "iv") {
    commutative(4, permutation({0, 1, 3, 2}), permutation({1, 0, 2, 3}), permutation({2, 3, 0, 1}));
  } else if (tag == "v") {
    Mat z(qi(), 4, 4);
    z(0, 2) = th, z(0, 3) = tb;
    z(1, 3) = th, z(1, 2) = tb;
    z(2, 0) = th, z(2, 1) = tb;
    z(3, 1) = th, z(3, 0) = tb;
    commutative(4, permutation({1, 0, 3, 2}), permutation({1, 0, 3, 2}), z);
  } else if (tag == "vi") {
    // H8^* in the dual basis with (h.f)(t) = f(S(h) t). That action respects the
    // product dual to the opposite coproduct, (fg)(t) = f(t2) g(t1), not the plain one.
    std::array<Mat, 3> gens;
    const int gen_index[3] = {1, 2, 4};
    for (int g = 0; g < 3; ++g) {
      Mat a(qi(), 8, 8);
      for (int k = 0; k < 8; ++k) {
        Elem st = h.multiply(h.antipode[gen_index[g]], h.basis(k));
        for (int i = 0; i < 8; ++i) a(k, i) = st[i];
      }
      gens[g] = a;
    }
    s.module = {tag, 8, gens};
    s.product.assign(8, std::vector<Elem>(8, zero_elem(8)));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) s.product[i][j][k] = h.comult[k](j, i);
    s.unit = h.counit;
  } else {
    throw H8Error(K::UnknownTag, "unknown module algebra tag '" + tag + "'");
  }
  return s;
}

bool verify_module_algebra(const HopfAlgebraModel& h, const H8ModuleAlgebra& s) {
  const std::string name = "(" + s.tag + ")";
  auto err = check_module(h, s.module);
  if (!err.empty()) violation(name + " module axiom: " + err);
  const int n = s.module.dim;
  for (int a = 0; a < n; ++a) {
    if (bilinear(s.product, s.unit, unit_vec(n, a)) != unit_vec(n, a) ||
        bilinear(s.product, unit_vec(n, a), s.unit) != unit_vec(n, a))
      violation(name + " unit fails on basis vector " + std::to_string(a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (bilinear(s.product, s.product[a][b], unit_vec(n, c)) != bilinear(s.product, unit_vec(n, a), s.product[b][c]))
          violation(name + " associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
  }
  auto rho = basis_action(h, s.module);
  // generators suffice: the law is multiplicative in h because Delta is
  for (int k : {1, 2, 4}) {
    Elem eps_unit = s.unit;
    for (auto& v : eps_unit) v = v * h.counit[k];
    if (as_elem(rho[k] * column(s.unit)) != eps_unit)
      violation(name + " " + h.labels[k] + " does not fix the unit");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Elem lhs = as_elem(rho[k] * column(s.product[a][b]));
        Elem rhs = zero_elem(n);
        for (int p = 0; p < 8; ++p)
          for (int q = 0; q < 8; ++q) {
            const Cyc& c = h.comult[k](p, q);
            if (c.is_zero()) continue;
            Elem t = bilinear(s.product, as_elem(rho[p].col(a)), as_elem(rho[q].col(b)));
            for (int i = 0; i < n; ++i) rhs[i] += c * t[i];
          }
        if (lhs != rhs)
          violation(name + " module-algebra law fails for " + h.labels[k] + " on (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
      }
  }
  return true;
}

std::array<int, 5> decompose_module(const HopfAlgebraModel& h, const H8Module& m) {
  auto w = irreps(h);
  Mat chars(qi(), 8, 5);
  for (int j = 0; j < 5; ++j) {
    auto chi = character(h, w[j]);
    for (int k = 0; k < 8; ++k) chars(k, j) = chi[k];
  }
  auto sol = solve(chars, column(character(h, m)));
  if (!sol) violation(m.name + ": character is not a combination of irreducible characters");
  std::array<int, 5> out{};
  for (int j = 0; j < 5; ++j) {
    const Cyc& v = (*sol)(j, 0);
    mpq_class q = v.rational_part();
    if (!v.is_rational() || q.get_den() != 1 || q < 0) violation(m.name + ": non-integral multiplicity");
    out[j] = static_cast<int>(q.get_num().get_si());
  }
  return out;
}

int x_summands(const HopfAlgebraModel& h, const H8ModuleAlgebra& s) {
  const int n = s.module.dim;
  // center: c with c s_b = s_b c for every basis vector s_b
  Mat sys(qi(), 0, n);
  for (int b = 0; b < n; ++b) {
    Mat blk(qi(), n, n);
    for (int c = 0; c < n; ++c) {
      Elem d = bilinear(s.product, unit_vec(n, c), unit_vec(n, b));
      Elem e = bilinear(s.product, unit_vec(n, b), unit_vec(n, c));
      for (int i = 0; i < n; ++i) blk(i, c) = d[i] - e[i];
    }
    sys = vstack(sys, blk);
  }
  Mat center = nullspace(sys);
  Mat fix = basis_action(h, s.module)[1] - Mat::identity(qi(), n);
  return nullspace(fix * center).cols();
}

MoritaSeparators morita_separators(const HopfAlgebraModel& h) {
  MoritaSeparators r;
  r.ii = x_summands(h, builtin_module_algebra(h, "ii"));
  r.iii = x_summands(h, builtin_module_algebra(h, "iii"));
  r.iv = x_summands(h, builtin_module_algebra(h, "iv"));
  r.v = x_summands(h, builtin_module_algebra(h, "v"));
  return r;
}

namespace {

// T_a = rho_b lambda_a on the degree-d0 piece, b = d0^-1 a^-1 d0
Mat self_map(const Bimodule& s, int a, int d0) {
  const auto& G = s.A->subgroup().parent();
  const int b = G->mul(G->mul(G->inv(d0), G->inv(a)), d0);
  return s.rho(b, G->mul(a, d0)) * s.lambda(a, d0);
}

int coset_of(const DoubleCosetDecomposition& dc, int g) {
  for (size_t k = 0; k < dc.cosets.size(); ++k)
    if (std::binary_search(dc.cosets[k].begin(), dc.cosets[k].end(), g)) return dc.representatives[k];
  return -1;
}

}  // namespace

MatchResult match_classification(const GTCategory& c, const HopfAlgebraModel& h, bool conjugate_iii) {
  const auto& G = c.group();
  auto algebras = classify_algebras(c);
  std::vector<int64_t> moduli = {c.alpha.modulus()};
  for (const auto& a : algebras) moduli.push_back(a.modcat.psi.modulus());
  auto amb = make_ambient(c.omega, moduli);
  auto ak = twisted_group_algebra(amb, c.alpha);

  // X0..X4
  auto kk = simple_catalogue(ak, ak);
  auto dck = double_cosets(c.K, c.K);
  const int cx = coset_of(dck, G->index_of("x")), cxy = coset_of(dck, G->index_of("xy"));
  const int unit = kk.find(regular_bimodule(ak));
  const int z = c.K.generators().front();
  std::vector<int> at_x, at_e, at_xy;
  for (size_t i = 0; i < kk.simples.size(); ++i) {
    const int rep = kk.coset_rep[i];
    if (rep == cx) at_x.push_back(static_cast<int>(i));
    if (rep == G->identity() && static_cast<int>(i) != unit) at_e.push_back(static_cast<int>(i));
    if (rep == cxy) at_xy.push_back(static_cast<int>(i));
  }
  if (unit < 0 || at_x.size() != 1 || at_e.size() != 1 || at_xy.size() != 2)
    throw H8Error(K::AmbiguousMatch, "unexpected simple objects of the category");
  auto tz_index = [&](int i) { return self_map(kk.simples[i], z, cxy)(0, 0).root_index(); };
  std::sort(at_xy.begin(), at_xy.end(), [&](int a, int b) { return tz_index(a) < tz_index(b); });
  const std::vector<int> xs = {at_x[0], unit, at_e[0], at_xy[0], at_xy[1]};

  std::vector<std::array<int, 5>> tag_mult;
  for (const auto& t : tags())
    tag_mult.push_back(decompose_module(h, builtin_module_algebra(h, t, conjugate_iii && t == "iii").module));

  std::vector<MatchEntry> entries;
  for (const auto& a : algebras) {
    auto al = twisted_group_algebra(amb, a.modcat.psi);
    auto kl = simple_catalogue(ak, al);
    const Subgroup cap = intersection(c.K, a.modcat.L);
    int pick = -1;
    for (size_t i = 0; i < kl.simples.size(); ++i) {
      if (kl.coset_rep[i] != G->identity()) continue;
      const Bimodule& s = kl.simples[i];
      bool trivial = true;
      for (int x : cap.elements())
        trivial = trivial && self_map(s, x, G->identity()) == Mat::identity(s.field(), s.dims[G->identity()]);
      if (trivial) {
        pick = static_cast<int>(i);
        break;
      }
      if (pick < 0 || s.total_dim() < kl.simples[pick].total_dim()) pick = static_cast<int>(i);
    }
    const Bimodule& m = kl.simples[pick];
    MatchEntry e;
    e.algebra = a;
    for (int i = 0; i < 5; ++i) e.multiplicities[i] = hom_dim(tensor_over(kk.simples[xs[i]], m), m);
    entries.push_back(e);
  }

  auto attempt = [&](bool swap) -> bool {
    std::vector<bool> used(tags().size(), false);
    for (auto& e : entries) {
      auto w = e.multiplicities;
      if (swap) std::swap(w[3], w[4]);
      int found = -1;
      for (size_t t = 0; t < tags().size(); ++t)
        if (tag_mult[t] == w) {
          if (found >= 0) return false;
          found = static_cast<int>(t);
        }
      if (found < 0 || used[found]) return false;
      used[found] = true;
      e.tag = tags()[found];
    }
    return true;
  };
  MatchResult r;
  if (attempt(false)) {
    r.convention = "standard";
  } else if (attempt(true)) {
    r.convention = "conjugate";
  } else {
    throw H8Error(K::AmbiguousMatch, "multiplicities do not pair the algebras with (i)..(vi)");
  }
  r.entries = std::move(entries);
  return r;
}

}  // namespace fc::h8
