#include "cmrees/linalg.hpp"

#include <sstream>

namespace cmrees {

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
  return m;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CycMatrix: dimension mismatch in product");
  CycMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyc& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyc& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: dimension mismatch in difference");
  CycMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Cyc CycMatrix::trace() const {
  Cyc t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

Cyc CycMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("CycMatrix::det: not square");
  CycMatrix m = *this;
  Cyc d(1);
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int r = col; r < rows_; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Cyc(0);
    if (piv != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Cyc inv = m.at(col, col).inverse();
    for (int r = col + 1; r < rows_; ++r) {
      Cyc f = m.at(r, col) * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

LaurentQ CycMatrix::char_factor_q() const {
  if (rows_ != cols_) throw std::invalid_argument("char_factor_q: not square");
  // det(I - q A) = sum_i (-q)^i e_i(A); Newton's identities recover the
  // elementary symmetric functions from traces of powers.
  int n = rows_;
  std::vector<Cyc> p(n + 1, Cyc(0));  // power sums p_k = tr(A^k)
  CycMatrix power = identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * (*this);
    p[k] = power.trace();
  }
  std::vector<Cyc> e(n + 1, Cyc(0));  // elementary symmetric
  e[0] = Cyc(1);
  for (int k = 1; k <= n; ++k) {
    Cyc acc(0);
    for (int i = 1; i <= k; ++i) {
      Cyc t = e[k - i] * p[i];
      acc += (i % 2 == 1) ? t : -t;  // (-1)^{i-1}
    }
    e[k] = acc * Cyc(Rat(1, k));
  }
  LaurentQ f;
  for (int i = 0; i <= n; ++i) f.set(i, (i % 2 == 0) ? e[i] : -e[i]);
  return f;
}

CycMatrix CycMatrix::rref(std::vector<int>* pivots) const {
  CycMatrix m = *this;
  int prow = 0;
  std::vector<int> piv;
  for (int col = 0; col < cols_ && prow < rows_; ++col) {
    int sel = -1;
    for (int r = prow; r < rows_; ++r)
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(prow, j));
    Cyc inv = m.at(prow, col).inverse();
    for (int j = 0; j < cols_; ++j) m.at(prow, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == prow) continue;
      Cyc f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) m.at(r, j) -= f * m.at(prow, j);
    }
    piv.push_back(col);
    ++prow;
  }
  CycMatrix out(prow, cols_);
  for (int r = 0; r < prow; ++r)
    for (int j = 0; j < cols_; ++j) out.at(r, j) = m.at(r, j);
  if (pivots) *pivots = std::move(piv);
  return out;
}

int CycMatrix::rank() const { return rref().rows(); }

CycMatrix CycMatrix::kernel() const {
  std::vector<int> pivots;
  CycMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  CycMatrix ker(cols_ - (int)pivots.size(), cols_);
  int row = 0;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    ker.at(row, free_col) = Cyc(1);
    for (size_t i = 0; i < pivots.size(); ++i) ker.at(row, pivots[i]) = -r.at((int)i, free_col);
    ++row;
  }
  return ker;
}

CycMatrix CycMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("CycMatrix::inverse: not square");
  CycMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Cyc(1);
  }
  std::vector<int> pivots;
  CycMatrix r = aug.rref(&pivots);
  if ((int)pivots.size() != rows_ || pivots[rows_ - 1] != rows_ - 1)
    throw std::runtime_error("CycMatrix::inverse: singular matrix");
  CycMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

std::string CycMatrix::key(int conductor) const {
  std::ostringstream out;
  for (const auto& c : data_) {
    Cyc p = c.promoted(conductor);
    for (const auto& q : p.coeffs()) out << q.get_str() << ",";
    out << ";";
  }
  return out.str();
}

std::string CycMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << at(i, j).str();
    out << "]\n";
  }
  return out.str();
}

Subspace Subspace::span(const CycMatrix& vectors) {
  Subspace s(vectors.cols());
  s.basis_ = vectors.rref();
  return s;
}

bool Subspace::contains(const std::vector<Cyc>& v) const {
  if ((int)v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dim mismatch");
  CycMatrix stacked(basis_.rows() + 1, ambient_);
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int j = 0; j < ambient_; ++j) stacked.at(basis_.rows(), j) = v[j];
  return stacked.rank() == basis_.rows();
}

bool Subspace::contains(const Subspace& o) const {
  if (o.dim() > dim()) return false;
  return sum(o).dim() == dim();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  CycMatrix stacked(basis_.rows() + o.basis_.rows(), ambient_);
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int i = 0; i < o.basis_.rows(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(basis_.rows() + i, j) = o.basis_.at(i, j);
  return span(stacked);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Zassenhaus: row reduce [U | U; V | 0]; rows with zero left block carry
  // an intersection basis in the right block.
  int du = basis_.rows(), dv = o.basis_.rows();
  CycMatrix block(du + dv, 2 * ambient_);
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < ambient_; ++j) {
      block.at(i, j) = basis_.at(i, j);
      block.at(i, ambient_ + j) = basis_.at(i, j);
    }
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < ambient_; ++j) block.at(du + i, j) = o.basis_.at(i, j);
  CycMatrix r = block.rref();
  CycMatrix inter(0, ambient_);
  std::vector<std::vector<Cyc>> rows;
  for (int i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < ambient_ && left_zero; ++j) left_zero = r.at(i, j).is_zero();
    if (!left_zero) continue;
    std::vector<Cyc> v(ambient_);
    for (int j = 0; j < ambient_; ++j) v[j] = r.at(i, ambient_ + j);
    rows.push_back(std::move(v));
  }
  CycMatrix m((int)rows.size(), ambient_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < ambient_; ++j) m.at((int)i, j) = rows[i][j];
  return span(m);
}

}  // namespace cmrees
