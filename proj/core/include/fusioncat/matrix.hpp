#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusioncat/cyclotomic.hpp"

namespace fc {

// Dense matrix over a cyclotomic field.
class Mat {
 public:
  Mat() = default;
  Mat(const CycField& f, int rows, int cols);
  static Mat identity(const CycField& f, int n);
  static Mat scalar(const CycField& f, int n, const Cyc& s);

  const CycField& field() const { return *f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Cyc& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Cyc& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Cyc& s) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  Mat transpose() const;
  Mat col(int j) const;
  Mat cols_range(const std::vector<int>& js) const;
  Mat rows_range(const std::vector<int>& is) const;
  std::string to_string() const;

 private:
  const CycField* f_ = nullptr;
  int r_ = 0, c_ = 0;
  std::vector<Cyc> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
// Kronecker product
Mat kron(const Mat& a, const Mat& b);

struct Rref {
  Mat m;                 // reduced row echelon form (pivots 1, cleared above and below)
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};
Rref rref(Mat m);
int rank(const Mat& m);
// columns form a basis of the null space
Mat nullspace(const Mat& m);
// basis (as columns) of the column space, chosen among the given columns
Mat column_basis(const Mat& m);
// solves A X = B; nullopt when inconsistent
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);
// basis of the intersection of two column spaces
Mat intersect_spaces(const Mat& a, const Mat& b);
// If A = s B for a scalar s (B nonzero), returns s.
std::optional<Cyc> proportionality(const Mat& a, const Mat& b);

// Flattening convention for Kronecker systems: vec(X) stacks columns.
Mat vec(const Mat& x);
Mat unvec(const Mat& v, int rows, int cols);

}  // namespace fc
