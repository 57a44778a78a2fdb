#include "fusioncat/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fc {

namespace {

using IPoly = std::vector<int64_t>;  // low degree first

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division by a monic polynomial
IPoly ipoly_div_monic(IPoly a, const IPoly& b) {
  const size_t db = b.size() - 1;
  IPoly q(a.size() - db, 0);
  for (size_t i = a.size(); i-- > db;) {
    int64_t c = a[i];
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

IPoly cyclotomic(int64_t n) {
  static std::map<int64_t, IPoly> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  IPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  IPoly den{1};
  for (int64_t d = 1; d < n; ++d)
    if (n % d == 0) den = ipoly_mul(den, cyclotomic(d));
  IPoly r = ipoly_div_monic(num, den);
  std::lock_guard<std::mutex> lk(mu);
  memo[n] = r;
  return r;
}

// reduce integer polynomial modulo monic p
IPoly ipoly_mod(IPoly a, const IPoly& p) {
  const size_t dp = p.size() - 1;
  for (size_t i = a.size(); i-- > dp;) {
    int64_t c = a[i];
    if (!c) continue;
    for (size_t j = 0; j <= dp; ++j) a[i - dp + j] -= c * p[j];
  }
  a.resize(dp, 0);
  return a;
}

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = q b + r
void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  qtrim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
  while (r.size() >= b.size() && !r.empty()) {
    size_t s = r.size() - b.size();
    mpq_class c = r.back() / b.back();
    q[s] = c;
    for (size_t j = 0; j < b.size(); ++j) r[s + j] -= c * b[j];
    qtrim(r);
  }
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

}  // namespace

CycField::CycField(int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  poly_ = cyclotomic(n);
  phi_ = static_cast<int>(poly_.size()) - 1;
  roots_.resize(n);
  for (int64_t k = 0; k < n; ++k) {
    IPoly mono(k + 1, 0);
    mono[k] = 1;
    roots_[k] = ipoly_mod(mono, poly_);
  }
  for (int k = phi_; k <= 2 * phi_ - 2; ++k) {
    IPoly mono(k + 1, 0);
    mono[k] = 1;
    red_.push_back(ipoly_mod(mono, poly_));
  }
}

const CycField& CycField::get(int64_t n) {
  static std::map<int64_t, std::unique_ptr<CycField>> fields;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = fields.find(n);
  if (it != fields.end()) return *it->second;
  auto* f = new CycField(n);
  fields[n].reset(f);
  return *f;
}

const std::vector<int64_t>& CycField::root(int64_t k) const {
  k %= n_;
  if (k < 0) k += n_;
  return roots_[k];
}

// ---------------------------------------------------------------------------

Cyc::Cyc(const CycField& f, const mpq_class& q) : f_(&f) {
  if (q != 0) {
    c_.assign(f.degree(), mpq_class(0));
    c_[0] = q;
  }
}

Cyc Cyc::root(const CycField& f, int64_t k) {
  Cyc r(f);
  const auto& v = f.root(k);
  r.c_.assign(f.degree(), mpq_class(0));
  for (int i = 0; i < f.degree(); ++i) r.c_[i] = v[i];
  r.trim();
  return r;
}

void Cyc::trim() {
  for (const auto& x : c_)
    if (x != 0) return;
  c_.clear();
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.c_.empty()) return *this;
  if (!f_) f_ = o.f_;
  if (c_.empty()) {
    c_ = o.c_;
    return *this;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (o.c_.empty()) return *this;
  if (!f_) f_ = o.f_;
  if (c_.empty()) {
    c_ = o.c_;
    for (auto& x : c_) x = -x;
    return *this;
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  r -= o;
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const mpq_class& q) const {
  if (q == 0 || c_.empty()) return Cyc(*f_);
  Cyc r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  const CycField* f = f_ ? f_ : o.f_;
  if (c_.empty() || o.c_.empty()) return Cyc(*f);
  if (o.is_rational()) return *this * o.c_[0];
  if (is_rational()) return o * c_[0];
  const int phi = f->degree();
  std::vector<mpq_class> t(2 * phi - 1, mpq_class(0));
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.c_[j] != 0) t[i + j] += c_[i] * o.c_[j];
  }
  Cyc r(*f);
  r.c_.assign(t.begin(), t.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (t[k] == 0) continue;
    const auto& red = f->reduction(k);
    for (int i = 0; i < phi; ++i)
      if (red[i]) r.c_[i] += t[k] * red[i];
  }
  r.trim();
  return r;
}

Cyc Cyc::inverse() const {
  if (c_.empty()) throw std::domain_error("division by zero in cyclotomic field");
  if (is_rational()) return Cyc(*f_, 1 / c_[0]);
  // extended Euclid: find u with a u = 1 mod Phi
  QPoly a(c_.begin(), c_.end());
  qtrim(a);
  QPoly p;
  for (int64_t v : f_->cyclotomic_polynomial()) p.emplace_back(v);
  QPoly r0 = p, r1 = a, s0, s1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: not coprime");
  }
  mpq_class lead = r1[0];
  QPoly q, rem;
  qdivmod(s1, p, q, rem);
  Cyc out(*f_);
  out.c_.assign(f_->degree(), mpq_class(0));
  for (size_t i = 0; i < rem.size(); ++i) out.c_[i] = rem[i] / lead;
  out.trim();
  return out;
}

Cyc Cyc::conjugate() const {
  if (is_rational()) return *this;
  Cyc r(*f_);
  for (int i = 0; i < f_->degree(); ++i)
    if (c_[i] != 0) r += Cyc::root(*f_, -i) * c_[i];
  return r;
}

bool Cyc::operator==(const Cyc& o) const {
  if (c_.empty() || o.c_.empty()) return c_.empty() && o.c_.empty();
  return c_ == o.c_;
}

int64_t Cyc::root_index() const {
  if (c_.empty()) return -1;
  for (int64_t k = 0; k < f_->modulus(); ++k) {
    const auto& v = f_->root(k);
    bool eq = true;
    for (int i = 0; i < f_->degree() && eq; ++i) eq = (c_[i] == v[i]);
    if (eq) return k;
  }
  return -1;
}

Cyc Cyc::embed(const CycField& target) const {
  if (target.modulus() % f_->modulus()) throw std::invalid_argument("embedding into a non-extension");
  const int64_t s = target.modulus() / f_->modulus();
  Cyc r(target);
  for (int i = 0; i < f_->degree(); ++i)
    if (c_.size() > static_cast<size_t>(i) && c_[i] != 0) r += Cyc::root(target, i * s) * c_[i];
  return r;
}

std::string Cyc::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < f_->degree(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? "+" : "");
    first = false;
    if (i == 0) {
      os << c_[i].get_str();
    } else {
      if (c_[i] == -1)
        os << "-";
      else if (c_[i] != 1)
        os << c_[i].get_str() << "*";
      os << "z" << f_->modulus() << (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return os.str();
}

}  // namespace fc
