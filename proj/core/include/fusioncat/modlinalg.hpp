#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fc {

// Dense row-major integer matrix used for coboundary systems.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int64_t> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  int64_t& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int64_t operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

int64_t mod_norm(int64_t v, int64_t m);
int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
// prime factorization as (p, e) pairs, ascending p
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// Solves A x = b over Z/m. Works one prime power at a time with a Smith
// reduction over the local ring Z/p^e, then glues with CRT.
std::optional<std::vector<int64_t>> solve_mod(const IntMatrix& A, const std::vector<int64_t>& b, int64_t m);

// Smith form of A over Z/p^e: U A V = diag(p^k_1, ..., p^k_r, 0, ...).
struct LocalSmith {
  int64_t p = 0;
  int e = 0;
  std::vector<int> valuations;   // k_i for the r nonzero diagonal entries, nondecreasing
  IntMatrix V;                   // cols x cols, invertible mod p^e
};
LocalSmith local_smith(const IntMatrix& A, int64_t p, int e);

}  // namespace fc
