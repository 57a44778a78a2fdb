#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fc {

// Q(zeta_N) with power basis 1, zeta, ..., zeta^(phi(N)-1).
class CycField {
 public:
  // Fields are interned; the returned reference lives for the whole program.
  static const CycField& get(int64_t n);

  int64_t modulus() const { return n_; }
  int degree() const { return phi_; }
  // zeta^k reduced into the power basis, integer coefficients
  const std::vector<int64_t>& root(int64_t k) const;
  // x^k for phi <= k < 2 phi - 1, reduced
  const std::vector<int64_t>& reduction(int k) const { return red_[k - phi_]; }
  const std::vector<int64_t>& cyclotomic_polynomial() const { return poly_; }

 private:
  explicit CycField(int64_t n);
  int64_t n_;
  int phi_;
  std::vector<int64_t> poly_;                  // monic, degree phi
  std::vector<std::vector<int64_t>> roots_;    // zeta^k for k < n
  std::vector<std::vector<int64_t>> red_;
};

// An element of Q(zeta_N). Empty coefficient vector means zero.
class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(const CycField& f) : f_(&f) {}
  Cyc(const CycField& f, const mpq_class& q);
  static Cyc root(const CycField& f, int64_t k);   // zeta_N^k
  static Cyc zero(const CycField& f) { return Cyc(f); }
  static Cyc one(const CycField& f) { return Cyc(f, mpq_class(1)); }

  const CycField& field() const { return *f_; }
  bool has_field() const { return f_ != nullptr; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const mpq_class& q) const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc inverse() const;
  Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }
  // zeta -> zeta^-1
  Cyc conjugate() const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }
  // k with this == zeta^k, or -1 if this is not an N-th root of unity
  int64_t root_index() const;
  // image in a larger cyclotomic field (target modulus divisible by ours)
  Cyc embed(const CycField& target) const;
  std::string to_string() const;

 private:
  void trim();
  const CycField* f_ = nullptr;
  std::vector<mpq_class> c_;
};

}  // namespace fc
