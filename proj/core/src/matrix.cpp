#include "fusioncat/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fc {

Mat::Mat(const CycField& f, int rows, int cols)
    : f_(&f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Cyc(f)) {}

Mat Mat::identity(const CycField& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyc::one(f);
  return m;
}

Mat Mat::scalar(const CycField& f, int n, const Cyc& s) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: shape mismatch");
  Mat r(*f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Cyc& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Cyc& y = o(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference: shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::operator*(const Cyc& s) const {
  Mat r = *this;
  for (auto& x : r.a_)
    if (!x.is_zero()) x = x * s;
  return r;
}

bool Mat::operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat r(*f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::col(int j) const { return cols_range({j}); }

Mat Mat::cols_range(const std::vector<int>& js) const {
  Mat r(*f_, r_, static_cast<int>(js.size()));
  for (int i = 0; i < r_; ++i)
    for (size_t k = 0; k < js.size(); ++k) r(i, static_cast<int>(k)) = (*this)(i, js[k]);
  return r;
}

Mat Mat::rows_range(const std::vector<int>& is) const {
  Mat r(*f_, static_cast<int>(is.size()), c_);
  for (size_t k = 0; k < is.size(); ++k)
    for (int j = 0; j < c_; ++j) r(static_cast<int>(k), j) = (*this)(is[k], j);
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[";
    for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Cyc& x = a(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

Rref rref(Mat m) {
  Rref out;
  const int R = m.rows(), C = m.cols();
  int row = 0;
  for (int j = 0; j < C && row < R; ++j) {
    int piv = -1;
    // prefer a rational pivot: cheaper inverse and smaller fill-in
    for (int i = row; i < R; ++i) {
      if (m(i, j).is_zero()) continue;
      if (piv < 0) piv = i;
      if (m(i, j).is_rational()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      for (int k = 0; k < C; ++k) std::swap(m(piv, k), m(row, k));
    Cyc inv = m(row, j).inverse();
    for (int k = j; k < C; ++k)
      if (!m(row, k).is_zero()) m(row, k) = m(row, k) * inv;
    for (int i = 0; i < R; ++i) {
      if (i == row || m(i, j).is_zero()) continue;
      Cyc f = m(i, j);
      for (int k = j; k < C; ++k)
        if (!m(row, k).is_zero()) m(i, k) -= f * m(row, k);
    }
    out.pivots.push_back(j);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

int rank(const Mat& m) { return rref(m).rank(); }

Mat nullspace(const Mat& m) {
  Rref r = rref(m);
  const int C = m.cols();
  std::vector<char> is_piv(C, 0);
  for (int p : r.pivots) is_piv[p] = 1;
  std::vector<int> free;
  for (int j = 0; j < C; ++j)
    if (!is_piv[j]) free.push_back(j);
  Mat ns(m.field(), C, static_cast<int>(free.size()));
  for (size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    ns(f, static_cast<int>(k)) = Cyc::one(m.field());
    for (size_t i = 0; i < r.pivots.size(); ++i)
      if (!r.m(static_cast<int>(i), f).is_zero()) ns(r.pivots[i], static_cast<int>(k)) = -r.m(static_cast<int>(i), f);
  }
  return ns;
}

Mat column_basis(const Mat& m) { return m.cols_range(rref(m).pivots); }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  Rref r = rref(hstack(a, b));
  Mat x(a.field(), a.cols(), b.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    int p = r.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(p, j) = r.m(static_cast<int>(i), a.cols() + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Rref r = rref(hstack(a, Mat::identity(a.field(), a.rows())));
  if (r.rank() < a.rows() || r.pivots[a.rows() - 1] >= a.cols()) return std::nullopt;
  std::vector<int> js;
  for (int j = 0; j < a.rows(); ++j) js.push_back(a.cols() + j);
  return r.m.cols_range(js);
}

Mat intersect_spaces(const Mat& a, const Mat& b) {
  Mat nb = b * Cyc(b.field(), mpq_class(-1));
  Mat ns = nullspace(hstack(a, nb));
  std::vector<int> top;
  for (int i = 0; i < a.cols(); ++i) top.push_back(i);
  Mat coeff = ns.rows_range(top);
  Mat v = a * coeff;
  if (v.cols() == 0) return v;
  return column_basis(v);
}

std::optional<Cyc> proportionality(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) {
        Cyc s = a(i, j) / b(i, j);
        if (a == b * s) return s;
        return std::nullopt;
      }
  return std::nullopt;
}

Mat vec(const Mat& x) {
  Mat v(x.field(), x.rows() * x.cols(), 1);
  for (int j = 0; j < x.cols(); ++j)
    for (int i = 0; i < x.rows(); ++i) v(j * x.rows() + i, 0) = x(i, j);
  return v;
}

Mat unvec(const Mat& v, int rows, int cols) {
  Mat x(v.field(), rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) x(i, j) = v(j * rows + i, 0);
  return x;
}

}  // namespace fc
