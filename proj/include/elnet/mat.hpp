#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "elnet/errors.hpp"
#include "elnet/rat.hpp"

namespace elnet {

// Dense matrix of exact rationals, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  // Zero-based access.
  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rat>& flat() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;

  friend bool operator==(const Mat&, const Mat&) = default;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& s, Mat a);

// Group element written as e^c * body, with c rational and body an exact
// matrix. Keeps equality decidable when generators have a constant diagonal.
struct ScaledMat {
  Rat exponent;
  Mat body;

  friend bool operator==(const ScaledMat&, const ScaledMat&) = default;
};

inline ScaledMat operator*(const ScaledMat& a, const ScaledMat& b) {
  return ScaledMat{a.exponent + b.exponent, a.body * b.body};
}

}  // namespace elnet
