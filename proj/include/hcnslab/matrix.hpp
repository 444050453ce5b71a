#pragma once
#include <vector>

#include "hcnslab/ring.hpp"

namespace hcns {

// Small dense matrix over an exact scalar ring, row-major.
template <class R>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const R& fill)
      : r_(rows), c_(cols), a_(rows * cols, fill) {}

  static Mat identity(std::size_t n, const R& like) {
    Mat m(n, n, ring_zero(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring_one(like);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const {
    return a_[i * c_ + j];
  }

  Mat operator+(const Mat& o) const {
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] + o.a_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] - o.a_[i];
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    R z = ring_zero(a_.empty() ? o.a_[0] : a_[0]);
    Mat m(r_, o.c_, z);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const R& v = (*this)(i, k);
        if (RingTraits<R>::is_zero(v)) continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          m(i, j) = m(i, j) + v * o(k, j);
      }
    return m;
  }
  Mat scaled(const R& s) const {
    Mat m = *this;
    for (auto& v : m.a_) v = v * s;
    return m;
  }
  std::vector<R> apply(const std::vector<R>& x) const {
    if (x.size() != c_) throw std::invalid_argument("matrix apply mismatch");
    R z = ring_zero(a_.empty() ? x[0] : a_[0]);
    std::vector<R> y(r_, z);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) {
        if (RingTraits<R>::is_zero((*this)(i, j))) continue;
        y[i] = y[i] + (*this)(i, j) * x[j];
      }
    return y;
  }
  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const {
    for (const auto& v : a_)
      if (!RingTraits<R>::is_zero(v)) return false;
    return true;
  }

  // Inverse over a field; nullopt when singular.
  std::optional<Mat> inverse() const {
    if (r_ != c_) return std::nullopt;
    R z = ring_zero(a_[0]);
    Mat aug = *this;
    Mat inv = identity(r_, a_[0]);
    for (std::size_t col = 0; col < c_; ++col) {
      std::size_t piv = col;
      while (piv < r_ && RingTraits<R>::is_zero(aug(piv, col))) ++piv;
      if (piv == r_) return std::nullopt;
      if (piv != col) {
        for (std::size_t j = 0; j < c_; ++j) {
          std::swap(aug(piv, j), aug(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      auto pinv = RingTraits<R>::invert(aug(col, col));
      if (!pinv) return std::nullopt;
      for (std::size_t j = 0; j < c_; ++j) {
        aug(col, j) = aug(col, j) * *pinv;
        inv(col, j) = inv(col, j) * *pinv;
      }
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == col || RingTraits<R>::is_zero(aug(i, col))) continue;
        R f = aug(i, col);
        for (std::size_t j = 0; j < c_; ++j) {
          aug(i, j) = aug(i, j) - f * aug(col, j);
          inv(i, j) = inv(i, j) - f * inv(col, j);
        }
      }
    }
    (void)z;
    return inv;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<R> a_;
};

}  // namespace hcns
