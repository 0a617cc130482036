#include "elnet/linalg.hpp"

#include <algorithm>

namespace elnet {

Mat lie_bracket(const Mat& a, const Mat& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw DimensionMismatch("lie_bracket needs square matrices of equal size");
  return a * b - b * a;
}

Mat solve(const Mat& a, const Mat& b) {
  if (!a.square()) throw SingularInterior("solve needs a square system");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve shape mismatch");
  const std::size_t n = a.rows();
  Mat lhs = a, rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && lhs.at(piv, col) == 0) ++piv;
    if (piv == n) throw SingularInterior("singular system");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs.at(piv, j), lhs.at(col, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(piv, j), rhs.at(col, j));
    }
    Rat inv = Rat(1) / lhs.at(col, col);
    for (std::size_t j = col; j < n; ++j) lhs.at(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(col, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || lhs.at(r, col) == 0) continue;
      Rat f = lhs.at(r, col);
      for (std::size_t j = col; j < n; ++j) lhs.at(r, j) -= f * lhs.at(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(r, j) -= f * rhs.at(col, j);
    }
  }
  return rhs;
}

Mat schur_complement(const Mat& k, const std::set<std::size_t>& interior) {
  if (!k.square()) throw DimensionMismatch("schur_complement needs a square matrix");
  const std::size_t n = k.rows();
  for (std::size_t i : interior)
    if (i >= n) throw IndexOutOfRange("interior index out of range");
  if (interior.empty()) return k;

  std::vector<std::size_t> bnd, intr(interior.begin(), interior.end());
  for (std::size_t i = 0; i < n; ++i)
    if (!interior.count(i)) bnd.push_back(i);

  auto sub = [&](const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
    Mat m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m.at(i, j) = k.at(rs[i], cs[j]);
    return m;
  };

  Mat kb = sub(bnd, bnd), kbi = sub(bnd, intr), kib = sub(intr, bnd);
  Mat x = solve(sub(intr, intr), kib);  // K_I^{-1} K_{I,B}
  return kb - kbi * x;
}

Mat exp_nilpotent(const Mat& n, const Rat& t) {
  if (!n.square()) throw DimensionMismatch("exp_nilpotent needs a square matrix");
  const std::size_t sz = n.rows();
  Mat result = Mat::identity(sz);
  Mat term = Mat::identity(sz);  // t^m N^m / m!
  for (std::size_t m = 1; m <= sz; ++m) {
    term = term * n;
    if (term.is_zero()) return result;
    term *= t / Rat(m);
    result += term;
  }
  throw NotNilpotent("power series did not terminate");
}

ScaledMat scaled_exp(const Mat& m, const Rat& t) {
  if (!m.square() || m.rows() == 0)
    throw UnsupportedMatrix("scaled_exp needs a nonempty square matrix");
  Rat c = m.at(0, 0);
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m.at(i, i) != c) throw UnsupportedMatrix("diagonal is not constant");
  Mat n = m;
  for (std::size_t i = 0; i < m.rows(); ++i) n.at(i, i) = 0;
  try {
    return ScaledMat{t * c, exp_nilpotent(n, t)};
  } catch (const NotNilpotent&) {
    throw UnsupportedMatrix("off-diagonal part is not nilpotent");
  }
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = row[pivots_[r]];
    if (f == 0) continue;
    Rat c = f;  // basis pivot is 1
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * rows_[r][j];
  }
  return row;
}

bool RowSpace::insert(std::vector<Rat> row) {
  row = reduce(std::move(row));
  auto it = std::find_if(row.begin(), row.end(), [](const Rat& x) { return x != 0; });
  if (it == row.end()) return false;
  std::size_t piv = std::size_t(it - row.begin());
  Rat inv = Rat(1) / *it;
  for (auto& x : row) x *= inv;
  // back-substitute into the existing basis so lookups stay one pass
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) rows_[r][j] -= c * row[j];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

bool RowSpace::contains(std::vector<Rat> row) const {
  row = reduce(std::move(row));
  return std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
}

std::size_t span_dim(const std::vector<Mat>& mats) {
  RowSpace space;
  for (const auto& m : mats) {
    if (m.rows() != mats.front().rows() || m.cols() != mats.front().cols())
      throw DimensionMismatch("span_dim needs matrices of one shape");
    space.insert(m.flat());
  }
  return space.dim();
}

}  // namespace elnet
