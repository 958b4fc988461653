#pragma once

// Exact integer sparse matrices on the Fock space of a site window.

#include <cstdint>
#include <vector>

#include "nicolai/fock.h"

namespace nicolai {

struct MatrixEntry {
  BasisIndex row;
  std::int64_t value;

  bool operator==(const MatrixEntry&) const = default;
};

/// Column-major sparse integer operator. Each column is sorted by row and
/// holds only nonzero values; all arithmetic is overflow-checked.
class SparseOperator {
 public:
  using Column = std::vector<MatrixEntry>;

  explicit SparseOperator(SiteWindow window);

  static SparseOperator identity(SiteWindow window);

  const SiteWindow& window() const { return window_; }
  BasisIndex dimension() const { return columns_.size(); }
  const Column& column(BasisIndex col) const { return columns_[col]; }
  const std::vector<Column>& columns() const { return columns_; }

  std::int64_t at(BasisIndex row, BasisIndex col) const;
  std::size_t nonzeros() const;
  bool is_zero() const;
  /// Largest |entry|; zero for the zero operator.
  std::int64_t max_abs() const;

  /// Replaces column `col`; entries may be unsorted, with duplicates and zeros.
  void set_column(BasisIndex col, Column entries);

  SparseOperator transpose() const;

  bool operator==(const SparseOperator&) const = default;

 private:
  SiteWindow window_;
  std::vector<Column> columns_;
};

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(std::int64_t s, const SparseOperator& a);
FockVector operator*(const SparseOperator& a, const FockVector& v);

/// Column j holds the image of basis configuration j.
SparseOperator build_matrix(const OperatorSum& op, const SiteWindow& window);
SparseOperator build_matrix(const FermionMonomial& m, const SiteWindow& window);

enum class Parity { even, odd };

Parity parity_of(const FermionMonomial& m);

/// Anticommutator when both operands are odd, commutator otherwise.
SparseOperator graded_commutator(const SparseOperator& a, const SparseOperator& b, Parity pa, Parity pb);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);

/// The grading automorphism on matrices: (-1)^N A (-1)^N.
SparseOperator grade(const SparseOperator& a);

/// diag((-1)^popcount).
SparseOperator parity_operator(const SiteWindow& window);
/// diag(popcount).
SparseOperator number_operator(const SiteWindow& window);

/// (c_lo + c*_lo)(c_lo+1 + c*_lo+1)...(c_hi + c*_hi), a signed permutation
/// that exchanges c_i and +-c*_i under conjugation.
SparseOperator particle_hole_unitary(const SiteWindow& window);
/// U A U^T with U = particle_hole_unitary.
SparseOperator particle_hole_conjugate(const SparseOperator& a);

}  // namespace nicolai
