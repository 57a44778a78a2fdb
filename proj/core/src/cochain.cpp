#include "fusioncat/cochain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "fusioncat/modlinalg.hpp"

namespace fc {

using K = CochainError::Kind;

namespace {

size_t ipow(size_t b, int e) {
  size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// decode a flat index into positions
void decode(size_t idx, int n, int deg, int* out) {
  for (int i = deg - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % n);
    idx /= n;
  }
}

size_t encode(const int* p, int n, int deg) {
  size_t idx = 0;
  for (int i = 0; i < deg; ++i) idx = idx * n + p[i];
  return idx;
}

// multiplication on positions of a subgroup
std::vector<int> position_table(const Subgroup& L) {
  const auto& g = L.parent();
  const int n = L.size();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = L.position(g->mul(L.elements()[i], L.elements()[j]));
  return t;
}

// Value of d(c) at an (n+1)-tuple of positions, from the full (not necessarily normalized) table.
int64_t diff_at(const std::vector<int64_t>& v, int n, int deg, const std::vector<int>& mt, const int* t) {
  int buf[8];
  int64_t s = 0;
  // c(t2..t_{deg+1})
  s += v[encode(t + 1, n, deg)];
  for (int i = 0; i < deg; ++i) {
    int k = 0;
    for (int j = 0; j < deg + 1; ++j) {
      if (j == i) {
        buf[k++] = mt[t[i] * n + t[i + 1]];
        ++j;
      } else {
        buf[k++] = t[j];
      }
    }
    int64_t val = v[encode(buf, n, deg)];
    s += (i % 2 == 0) ? -val : val;
  }
  int64_t last = v[encode(t, n, deg)];
  s += (deg % 2 == 0) ? -last : last;
  return s;
}

// Integer matrix of d: C^{deg-1} -> C^deg on normalized cochains of L. Columns are
// nonidentity (deg-1)-tuples, rows nonidentity deg-tuples (in flat-index order).
struct System {
  IntMatrix A;
  std::vector<size_t> src;  // flat indices of the column tuples in |L|^{deg-1}
  std::vector<size_t> dst;  // flat indices of row tuples in |L|^deg
};

System coboundary_system(const Subgroup& L, int deg) {
  const int n = L.size();
  const int e = L.position(L.parent()->identity());
  auto mt = position_table(L);
  System S;
  std::map<size_t, int> col;
  const size_t nsrc = ipow(n, deg - 1), ndst = ipow(n, deg);
  int p[8];
  for (size_t i = 0; i < nsrc; ++i) {
    decode(i, n, deg - 1, p);
    if (std::find(p, p + deg - 1, e) != p + deg - 1) continue;
    col[i] = static_cast<int>(S.src.size());
    S.src.push_back(i);
  }
  for (size_t i = 0; i < ndst; ++i) {
    decode(i, n, deg, p);
    if (std::find(p, p + deg, e) != p + deg) continue;
    S.dst.push_back(i);
  }
  S.A = IntMatrix(static_cast<int>(S.dst.size()), static_cast<int>(S.src.size()));
  int buf[8];
  for (size_t r = 0; r < S.dst.size(); ++r) {
    decode(S.dst[r], n, deg, p);
    auto add = [&](const int* t, int64_t sgn) {
      if (std::find(t, t + deg - 1, e) != t + deg - 1) return;
      S.A(static_cast<int>(r), col[encode(t, n, deg - 1)]) += sgn;
    };
    if (deg - 1 == 0) continue;  // degree-0 cochains have zero differential
    add(p + 1, 1);
    for (int i = 0; i < deg - 1; ++i) {
      int k = 0;
      for (int j = 0; j < deg; ++j) {
        if (j == i) {
          buf[k++] = mt[p[i] * n + p[i + 1]];
          ++j;
        } else {
          buf[k++] = p[j];
        }
      }
      add(buf, (i % 2 == 0) ? -1 : 1);
    }
    add(p, (deg % 2 == 0) ? 1 : -1);
  }
  return S;
}

// Solves d(eta) = target, everything at modulus m; returns normalized eta.
std::optional<Cochain> solve_coboundary(const Cochain& target, int64_t m) {
  const Subgroup& L = target.domain();
  const int deg = target.degree();
  Cochain t = target.at_modulus(m);
  Cochain eta(L, deg - 1, m);
  if (deg == 1) {
    if (t.is_zero()) return eta;
    return std::nullopt;
  }
  System S = coboundary_system(L, deg);
  if (S.dst.empty()) return eta;
  std::vector<int64_t> b(S.dst.size());
  for (size_t r = 0; r < S.dst.size(); ++r) b[r] = t.values()[S.dst[r]];
  if (S.src.empty()) {
    if (std::all_of(b.begin(), b.end(), [](int64_t v) { return v == 0; })) return eta;
    return std::nullopt;
  }
  auto x = solve_mod(S.A, b, m);
  if (!x) return std::nullopt;
  for (size_t c = 0; c < S.src.size(); ++c) eta.mutable_values()[S.src[c]] = (*x)[c];
  return eta;
}

}  // namespace

// ---------------------------------------------------------------------------

Cochain::Cochain(Subgroup domain, int degree, int64_t modulus)
    : dom_(std::move(domain)), deg_(degree), mod_(modulus), n_(dom_.size()) {
  if (degree < 0 || degree > 4) throw CochainError(K::DegreeTooHigh, "cochain degree out of range");
  if (modulus < 1) throw CochainError(K::BadParams, "modulus must be positive");
  v_.assign(ipow(n_, degree), 0);
}

int Cochain::pos(int a) const {
  int p = dom_.position(a);
  if (p < 0) throw CochainError(K::DomainMismatch, "element outside cochain domain");
  return p;
}

int64_t Cochain::at(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != deg_) throw CochainError(K::BadParams, "wrong number of arguments");
  size_t idx = 0;
  for (int a : args) idx = idx * n_ + pos(a);
  return v_[idx];
}

void Cochain::set(const std::vector<int>& args, int64_t exponent) {
  if (static_cast<int>(args.size()) != deg_) throw CochainError(K::BadParams, "wrong number of arguments");
  size_t idx = 0;
  for (int a : args) idx = idx * n_ + pos(a);
  v_[idx] = mod_norm(exponent, mod_);
}

Cochain Cochain::at_modulus(int64_t m2) const {
  if (m2 % mod_) throw CochainError(K::BadParams, "target modulus is not a multiple");
  Cochain r = *this;
  r.mod_ = m2;
  const int64_t f = m2 / mod_;
  for (auto& v : r.v_) v *= f;
  return r;
}

Cochain Cochain::reduced() const {
  int64_t g = mod_;
  for (int64_t v : v_) g = std::gcd(g, v);
  if (g <= 1) return *this;
  Cochain r = *this;
  r.mod_ = mod_ / g;
  for (auto& v : r.v_) v /= g;
  return r;
}

bool Cochain::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int64_t v) { return v == 0; });
}

bool Cochain::is_normalized() const {
  const int e = dom_.position(dom_.parent()->identity());
  int p[8];
  for (size_t i = 0; i < v_.size(); ++i) {
    if (!v_[i]) continue;
    decode(i, n_, deg_, p);
    if (std::find(p, p + deg_, e) != p + deg_) return false;
  }
  return true;
}

std::pair<Cochain, Cochain> common_modulus(const Cochain& a, const Cochain& b) {
  int64_t m = std::lcm(a.modulus(), b.modulus());
  return {a.at_modulus(m), b.at_modulus(m)};
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (!(dom_ == o.dom_) || deg_ != o.deg_) throw CochainError(K::DomainMismatch, "adding cochains on different domains");
  auto [a, b] = common_modulus(*this, o);
  for (size_t i = 0; i < a.v_.size(); ++i) a.v_[i] = mod_norm(a.v_[i] + b.v_[i], a.mod_);
  return a;
}

Cochain Cochain::operator-() const {
  Cochain r = *this;
  for (auto& v : r.v_) v = mod_norm(-v, mod_);
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

__extension__ using i128 = __int128;

Cochain Cochain::scaled(int64_t k) const {
  Cochain r = *this;
  for (auto& v : r.v_) v = mod_norm(static_cast<int64_t>((static_cast<i128>(v) * k) % mod_), mod_);
  return r;
}

bool Cochain::operator==(const Cochain& o) const {
  if (!(dom_ == o.dom_) || deg_ != o.deg_) return false;
  auto [a, b] = common_modulus(*this, o);
  return a.v_ == b.v_;
}

std::string Cochain::describe() const {
  std::ostringstream os;
  os << "degree " << deg_ << " modulus " << mod_ << "\n";
  int p[8];
  const auto& g = dom_.parent();
  for (size_t i = 0; i < v_.size(); ++i) {
    if (!v_[i]) continue;
    decode(i, n_, deg_, p);
    os << "  (";
    for (int k = 0; k < deg_; ++k) os << (k ? "," : "") << g->name(dom_.elements()[p[k]]);
    os << ") -> " << v_[i] << "\n";
  }
  return os.str();
}

Cochain zero_cochain(const Subgroup& dom, int degree, int64_t modulus) { return Cochain(dom, degree, modulus); }

Cochain normalized_from_table(const Subgroup& dom, int degree, int64_t modulus, std::vector<int64_t> values) {
  Cochain c(dom, degree, modulus);
  if (values.size() != c.values().size()) throw CochainError(K::BadParams, "value table has wrong size");
  for (size_t i = 0; i < values.size(); ++i) c.mutable_values()[i] = mod_norm(values[i], modulus);
  if (c.is_normalized()) return c;
  if (degree == 0) {
    return Cochain(dom, 0, modulus);
  }
  // Unknown eta is a full (deg-1)-cochain; we need d(eta) = c on every degenerate tuple.
  const int n = dom.size();
  const int e = dom.position(dom.parent()->identity());
  auto mt = position_table(dom);
  const size_t nsrc = ipow(n, degree - 1), ndst = ipow(n, degree);
  std::vector<size_t> rows;
  int p[8];
  for (size_t i = 0; i < ndst; ++i) {
    decode(i, n, degree, p);
    if (std::find(p, p + degree, e) != p + degree) rows.push_back(i);
  }
  IntMatrix A(static_cast<int>(rows.size()), static_cast<int>(nsrc));
  std::vector<int64_t> b(rows.size());
  std::vector<int64_t> unit(nsrc, 0);
  for (size_t c0 = 0; c0 < nsrc; ++c0) {
    unit[c0] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      decode(rows[r], n, degree, p);
      int64_t v = degree - 1 == 0 ? 0 : diff_at(unit, n, degree - 1, mt, p);
      A(static_cast<int>(r), static_cast<int>(c0)) = v;
    }
    unit[c0] = 0;
  }
  for (size_t r = 0; r < rows.size(); ++r) b[r] = c.values()[rows[r]];
  auto x = solve_mod(A, b, modulus);
  if (!x) throw CochainError(K::NotNormalizable, "cochain is not cohomologous to a normalized one");
  Cochain r = c;
  for (size_t i = 0; i < ndst; ++i) {
    decode(i, n, degree, p);
    int64_t d = degree - 1 == 0 ? 0 : diff_at(*x, n, degree - 1, mt, p);
    r.mutable_values()[i] = mod_norm(c.values()[i] - d, modulus);
  }
  if (!r.is_normalized()) throw CochainError(K::NotNormalizable, "normalization failed");
  return r;
}

Cochain differential(const Cochain& c) {
  if (c.degree() > 3) throw CochainError(K::DegreeTooHigh, "differential only for degree <= 3");
  const Subgroup& L = c.domain();
  const int n = L.size(), deg = c.degree();
  Cochain d(L, deg + 1, c.modulus());
  if (deg == 0) return d;
  auto mt = position_table(L);
  int p[8];
  for (size_t i = 0; i < d.values().size(); ++i) {
    decode(i, n, deg + 1, p);
    d.mutable_values()[i] = mod_norm(diff_at(c.values(), n, deg, mt, p), c.modulus());
  }
  return d;
}

bool is_cocycle(const Cochain& c) {
  if (c.degree() > 3) throw CochainError(K::DegreeTooHigh, "cocycle test only for degree <= 3");
  const Subgroup& L = c.domain();
  const int n = L.size(), deg = c.degree();
  if (deg == 0) return true;
  auto mt = position_table(L);
  int p[8];
  const size_t total = ipow(n, deg + 1);
  for (size_t i = 0; i < total; ++i) {
    decode(i, n, deg + 1, p);
    if (mod_norm(diff_at(c.values(), n, deg, mt, p), c.modulus())) return false;
  }
  return true;
}

Cochain restrict(const Cochain& c, const Subgroup& sub) {
  for (int a : sub.elements())
    if (!c.domain().contains(a)) throw CochainError(K::NotASubgroup, "restriction target not inside domain");
  Cochain r(sub, c.degree(), c.modulus());
  const int n = sub.size(), deg = c.degree();
  int p[8];
  std::vector<int> args(deg);
  for (size_t i = 0; i < r.values().size(); ++i) {
    decode(i, n, deg, p);
    for (int k = 0; k < deg; ++k) args[k] = sub.elements()[p[k]];
    r.mutable_values()[i] = c.at(args);
  }
  return r;
}

Cochain conjugate_cochain(const Cochain& psi, int g) {
  const auto& G = psi.group();
  Subgroup dom = conjugate(psi.domain(), G->inv(g));
  Cochain r(dom, psi.degree(), psi.modulus());
  const int n = dom.size(), deg = psi.degree();
  int p[8];
  std::vector<int> args(deg);
  for (size_t i = 0; i < r.values().size(); ++i) {
    decode(i, n, deg, p);
    for (int k = 0; k < deg; ++k) args[k] = G->conj(g, dom.elements()[p[k]]);
    r.mutable_values()[i] = psi.at(args);
  }
  return r;
}

Cochain omega_correction(const Cochain& omega, int g) {
  if (omega.degree() != 3) throw CochainError(K::BadParams, "omega must have degree 3");
  if (!is_cocycle(omega)) throw CochainError(K::NotACocycle, "omega is not a 3-cocycle");
  const Subgroup& L = omega.domain();
  if (!L.contains(g)) throw CochainError(K::DomainMismatch, "g outside the domain of omega");
  const auto& G = omega.group();
  Cochain r(L, 2, omega.modulus());
  for (int a : L.elements())
    for (int b : L.elements()) {
      int ga = G->conj(g, a), gb = G->conj(g, b);
      int64_t v = omega(ga, gb, g) + omega(g, a, b) - omega(ga, g, b);
      r.set({a, b}, v);
    }
  return r;
}

Cochain mixed_cochain_unchecked(const Cochain& psi_i, const Cochain& psi_j, const Cochain& omega, int g) {
  const auto& G = omega.group();
  Subgroup H = intersection(psi_i.domain(), conjugate(psi_j.domain(), g));
  const int64_t m = std::lcm(std::lcm(psi_i.modulus(), psi_j.modulus()), omega.modulus());
  Cochain pi = psi_i.at_modulus(m), pj = psi_j.at_modulus(m), w = omega.at_modulus(m);
  const int gi = G->inv(g);
  auto c = [&](int h) { return G->mul(G->mul(gi, h), g); };
  Cochain r(H, 2, m);
  for (int l : H.elements())
    for (int lp : H.elements()) {
      int cl = c(G->inv(l)), clp = c(G->inv(lp));
      int64_t v = pi(l, lp) + pj(clp, cl) + w(l, lp, g) + w(l, G->mul(lp, g), clp) -
                  w(G->mul(G->mul(l, lp), g), clp, cl);
      r.set({l, lp}, v);
    }
  return r;
}

Cochain mixed_cocycle(const Cochain& psi_i, const Cochain& psi_j, const Cochain& omega, int g) {
  if (differential(psi_i) != restrict(omega, psi_i.domain()))
    throw CochainError(K::CompatibilityViolated, "d(psi_i) differs from omega on L_i");
  if (differential(psi_j) != restrict(omega, psi_j.domain()))
    throw CochainError(K::CompatibilityViolated, "d(psi_j) differs from omega on L_j");
  Cochain r = mixed_cochain_unchecked(psi_i, psi_j, omega, g);
  if (!is_cocycle(r)) throw CochainError(K::CompatibilityViolated, "mixed cochain is not a cocycle");
  return r.reduced();
}

std::optional<CoboundaryWitness> kx_coboundary_witness(const Cochain& phi) {
  if (phi.degree() > 3) throw CochainError(K::DegreeTooHigh, "witness search only for degree <= 3");
  if (!is_cocycle(phi)) throw CochainError(K::NotACocycle, "witness requested for a non-cocycle");
  const int64_t m = phi.modulus() * phi.domain().size();
  auto eta = solve_coboundary(phi, m);
  if (!eta) return std::nullopt;
  return CoboundaryWitness{eta->reduced(), phi};
}

bool is_kx_trivial(const Cochain& phi) { return kx_coboundary_witness(phi).has_value(); }

std::optional<Cochain> solve_psi(const Cochain& omega, const Subgroup& L) {
  Cochain w = restrict(omega, L).reduced();
  if (!is_cocycle(w)) throw CochainError(K::NotACocycle, "omega is not a 3-cocycle");
  // Smaller moduli keep the cyclotomic field used downstream small.
  const int64_t M = w.modulus();
  for (int64_t k = 1; k <= L.size(); ++k) {
    if (L.size() % k) continue;
    auto eta = solve_coboundary(w, M * k);
    if (eta) return eta->reduced();
  }
  return std::nullopt;
}

H2Report h2_classes(const Subgroup& L) {
  H2Report rep;
  rep.group = L;
  const int64_t n = L.size();
  rep.modulus = n;
  struct Gen {
    int64_t order;
    Cochain psi;
  };
  std::vector<Gen> gens;
  if (n > 1) {
    System S = coboundary_system(L, 3);
    for (auto [p, v] : factorize(n)) {
      LocalSmith ls = local_smith(S.A, p, v + 1);
      for (size_t t = 0; t < ls.valuations.size(); ++t) {
        int k = ls.valuations[t];
        if (k == 0) continue;
        int64_t pk = 1;
        for (int s = 0; s < k; ++s) pk *= p;
        Cochain psi(L, 2, pk);
        for (size_t c = 0; c < S.src.size(); ++c)
          psi.mutable_values()[S.src[c]] = mod_norm(ls.V(static_cast<int>(c), static_cast<int>(t)), pk);
        rep.elementary_divisors.push_back(pk);
        gens.push_back({pk, psi.at_modulus(n)});
      }
    }
  }
  std::sort(rep.elementary_divisors.begin(), rep.elementary_divisors.end());
  // enumerate all combinations, first coordinate slowest
  std::vector<int64_t> coef(gens.size(), 0);
  while (true) {
    Cochain c(L, 2, n);
    for (size_t i = 0; i < gens.size(); ++i)
      if (coef[i]) c = c + gens[i].psi.scaled(coef[i]);
    rep.class_representatives.push_back(c.reduced());
    int i = static_cast<int>(gens.size()) - 1;
    while (i >= 0 && ++coef[i] == gens[i].order) coef[i--] = 0;
    if (i < 0) break;
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace builtin_cochain {

Cochain trivial(const Subgroup& dom, int degree) { return Cochain(dom, degree, 1); }

Cochain mu_klein(const GroupPtr& g) {
  if (g->order() != 4 || g->is_abelian() == false) throw CochainError(K::BadParams, "mu_klein needs Z2xZ2");
  Subgroup G = Subgroup::whole(g);
  Cochain c(G, 2, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int j1 = (a >> 1) & 1, i2 = b & 1;
      c.set({a, b}, j1 * i2);
    }
  return c;
}

Cochain beta_d8(const GroupPtr& g) {
  if (g->order() != 8 || g->label() != "D8") throw CochainError(K::BadParams, "beta_d8 needs the builtin D8");
  static const char* minus[][2] = {{"x", "z"},    {"x", "xz"},  {"y", "x"},    {"y", "xy"},  {"xy", "x"},  {"xy", "xy"},
                                   {"xy", "yz"},  {"xy", "xyz"}, {"z", "x"},   {"z", "xy"},  {"z", "yz"},  {"z", "xyz"},
                                   {"xz", "z"},   {"xz", "xz"}, {"yz", "x"},   {"yz", "xy"}};
  Cochain c(Subgroup::whole(g), 2, 2);
  for (auto& pr : minus) c.set({g->index_of(pr[0]), g->index_of(pr[1])}, 1);
  return c;
}

Cochain omega_cyclic(const GroupPtr& g, int64_t ell) {
  const int n = g->order();
  // requires the builtin cyclic indexing x^i -> i
  for (int a = 0; a < n; ++a)
    if (g->mul(1 % n, a) != (a + 1) % n) throw CochainError(K::BadParams, "omega_cyclic needs a builtin cyclic group");
  Cochain c(Subgroup::whole(g), 3, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c.set({i, j, k}, ell * i * ((j + k) / n));
  return c.reduced();
}

Cochain omega_d8(const GroupPtr& g, bool conjugate) {
  if (g->order() != 8 || g->label() != "D8") throw CochainError(K::BadParams, "omega_d8 needs the builtin D8");
  // tau_z on pairs of elements of <x,y>
  auto tau = [](int p, int q) -> int {
    const int X = 1, Y = 2, XY = 3;
    if ((p == X && q == X) || (p == Y && q == Y) || (p == X && q == XY) || (p == XY && q == Y)) return 1;
    if (p == Y && q == X) return 2;
    if ((p == XY && q == X) || (p == Y && q == XY)) return 3;
    return 0;
  };
  auto swap = [](int p) { return ((p & 1) << 1) | ((p >> 1) & 1); };
  Cochain c(Subgroup::whole(g), 3, 4);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int d = 0; d < 8; ++d) {
        int p1 = a & 3, n1 = a >> 2, p2 = b & 3, n2 = b >> 2, n3 = d >> 2;
        int e = 0;
        if (n2 && n3 && (p1 == 1 || p1 == 2)) e += 3;  // sigma(z,z) = -sqrt(-1)
        if (n3) e += tau((n1 + n2) % 2 ? swap(p1) : p1, n2 ? swap(p2) : p2);
        c.set({a, b, d}, conjugate ? -e : e);
      }
  return c;
}

Cochain by_name(const std::string& name, const GroupPtr& g, int default_degree) {
  if (name == "trivial" || name == "1") return trivial(Subgroup::whole(g), default_degree);
  if (name == "mu_klein" || name == "mu") return mu_klein(g);
  if (name == "beta_d8" || name == "beta") return beta_d8(g);
  if (name == "omega_d8" || name == "d8") return omega_d8(g, false);
  if (name == "omega_d8_conj" || name == "d8_conj") return omega_d8(g, true);
  const std::string pre = "omega_cyclic";
  if (name.rfind(pre, 0) == 0) {
    std::string rest = name.substr(pre.size());
    if (!rest.empty() && (rest[0] == ':' || rest[0] == '=')) rest = rest.substr(1);
    try {
      size_t used = 0;
      long long ell = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
      return omega_cyclic(g, ell);
    } catch (const std::logic_error&) {
      throw CochainError(K::BadParams, "omega_cyclic needs an integer parameter, e.g. omega_cyclic:2");
    }
  }
  throw CochainError(K::UnknownName, "unknown builtin cochain '" + name + "'");
}

}  // namespace builtin_cochain

}  // namespace fc
