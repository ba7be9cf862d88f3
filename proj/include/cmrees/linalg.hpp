#ifndef CMREES_LINALG_HPP
#define CMREES_LINALG_HPP

#include <string>
#include <vector>

#include "cmrees/cyclotomic.hpp"
#include "cmrees/laurent.hpp"

namespace cmrees {

/// Dense matrix over the cyclotomic scalars.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Cyc(0)) {}
  static CycMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyc& at(int r, int c) { return data_[r * cols_ + c]; }
  const Cyc& at(int r, int c) const { return data_[r * cols_ + c]; }

  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix transpose() const;
  CycMatrix inverse() const;  // throws if singular
  Cyc trace() const;
  Cyc det() const;

  // det(I - q * this) as a polynomial in q.
  LaurentQ char_factor_q() const;

  // Reduced row echelon form with deterministic first-nonzero pivoting.
  // Returns pivot column indices; zero rows are dropped.
  CycMatrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  // Basis of the right kernel, rows = kernel vectors.
  CycMatrix kernel() const;

  // All entries promoted to a common conductor; serialization is canonical
  // for equal matrices at equal conductor.
  std::string key(int conductor) const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Cyc> data_;
};

/// Subspace of a D-dimensional coordinate space, stored as an RREF basis.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
  // Rows of `vectors` span the subspace.
  static Subspace span(const CycMatrix& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const CycMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Cyc>& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;  // Zassenhaus

 private:
  int ambient_;
  CycMatrix basis_;  // RREF, no zero rows
};

}  // namespace cmrees

#endif
