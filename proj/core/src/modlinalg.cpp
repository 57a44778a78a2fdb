#include "fusioncat/modlinalg.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>

namespace fc {

int64_t mod_norm(int64_t v, int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> f;
  for (int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

namespace {

__extension__ using i128 = __int128;

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>((static_cast<i128>(a) * b) % m);
}

// inverse of a unit mod m
int64_t inv_unit(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, r = mod_norm(a, m);
  while (r) {
    int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::logic_error("inv_unit: not a unit");
  return mod_norm(x, m);
}

int valuation(int64_t v, int64_t p, int e) {
  if (v == 0) return e;
  int k = 0;
  while (v % p == 0 && k < e) {
    v /= p;
    ++k;
  }
  return k;
}

struct Reduction {
  IntMatrix A;                 // reduced in place
  std::vector<int64_t> b;      // transformed by the row operations (may be empty)
  IntMatrix V;
  std::vector<int> vals;
};

// Row ops act on A and b; column ops on A and V. Pivot is the entry of least valuation.
Reduction reduce_local(const IntMatrix& A0, const std::vector<int64_t>* b0, int64_t p, int e) {
  int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  Reduction R;
  R.A = A0;
  for (auto& v : R.A.a) v = mod_norm(v, q);
  if (b0) {
    R.b = *b0;
    for (auto& v : R.b) v = mod_norm(v, q);
  }
  const int m = R.A.rows, n = R.A.cols;
  R.V = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) R.V(i, i) = 1;
  auto& A = R.A;
  for (int t = 0; t < std::min(m, n); ++t) {
    int bi = -1, bj = -1, bk = e;
    for (int i = t; i < m && bk > 0; ++i)
      for (int j = t; j < n; ++j) {
        int64_t v = A(i, j);
        if (!v) continue;
        int k = valuation(v, p, e);
        if (k < bk) {
          bk = k;
          bi = i;
          bj = j;
          if (k == 0) break;
        }
      }
    if (bi < 0) break;
    if (bi != t) {
      for (int j = 0; j < n; ++j) std::swap(A(t, j), A(bi, j));
      if (!R.b.empty()) std::swap(R.b[t], R.b[bi]);
    }
    if (bj != t) {
      for (int i = 0; i < m; ++i) std::swap(A(i, t), A(i, bj));
      for (int i = 0; i < n; ++i) std::swap(R.V(i, t), R.V(i, bj));
    }
    int64_t pk = 1;
    for (int i = 0; i < bk; ++i) pk *= p;
    int64_t u = inv_unit(A(t, t) / pk, q);
    for (int j = t; j < n; ++j) A(t, j) = mulmod(A(t, j), u, q);
    if (!R.b.empty()) R.b[t] = mulmod(R.b[t], u, q);
    for (int i = t + 1; i < m; ++i) {
      int64_t v = A(i, t);
      if (!v) continue;
      int64_t f = v / pk;
      for (int j = t; j < n; ++j)
        if (A(t, j)) A(i, j) = mod_norm(A(i, j) - mulmod(f, A(t, j), q), q);
      if (!R.b.empty()) R.b[i] = mod_norm(R.b[i] - mulmod(f, R.b[t], q), q);
    }
    for (int j = t + 1; j < n; ++j) {
      int64_t v = A(t, j);
      if (!v) continue;
      int64_t f = v / pk;
      A(t, j) = 0;
      for (int i = 0; i < n; ++i)
        if (R.V(i, t)) R.V(i, j) = mod_norm(R.V(i, j) - mulmod(f, R.V(i, t), q), q);
    }
    R.vals.push_back(bk);
  }
  return R;
}

std::optional<std::vector<int64_t>> solve_prime_power(const IntMatrix& A, const std::vector<int64_t>& b,
                                                      int64_t p, int e) {
  int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  Reduction R = reduce_local(A, &b, p, e);
  const int r = static_cast<int>(R.vals.size());
  std::vector<int64_t> y(A.cols, 0);
  for (int i = 0; i < A.rows; ++i) {
    int64_t c = R.b[i];
    if (i >= r) {
      if (c) return std::nullopt;
      continue;
    }
    int64_t pk = 1;
    for (int s = 0; s < R.vals[i]; ++s) pk *= p;
    if (c % pk) return std::nullopt;
    y[i] = c / pk;
  }
  std::vector<int64_t> x(A.cols, 0);
  for (int i = 0; i < A.cols; ++i) {
    int64_t s = 0;
    for (int j = 0; j < r; ++j)
      if (y[j]) s = (s + mulmod(R.V(i, j), y[j], q)) % q;
    x[i] = s;
  }
  return x;
}

}  // namespace

LocalSmith local_smith(const IntMatrix& A, int64_t p, int e) {
  Reduction R = reduce_local(A, nullptr, p, e);
  LocalSmith s;
  s.p = p;
  s.e = e;
  s.valuations = std::move(R.vals);
  s.V = std::move(R.V);
  return s;
}

std::optional<std::vector<int64_t>> solve_mod(const IntMatrix& A, const std::vector<int64_t>& b, int64_t m) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve_mod: size mismatch");
  if (m == 1) return std::vector<int64_t>(A.cols, 0);
  std::vector<int64_t> x(A.cols, 0);
  int64_t acc = 1;
  for (auto [p, e] : factorize(m)) {
    auto part = solve_prime_power(A, b, p, e);
    if (!part) return std::nullopt;
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    // x = x (mod acc), x = part (mod q)
    int64_t t = mulmod(inv_unit(acc % q, q), 1, q);
    for (int i = 0; i < A.cols; ++i) {
      int64_t diff = mod_norm((*part)[i] - x[i], q);
      x[i] = x[i] + acc * mulmod(diff, t, q);
    }
    acc *= q;
  }
  for (auto& v : x) v = mod_norm(v, m);
  return x;
}

}  // namespace fc
