#include "nicolai/sparse.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "nicolai/checked.h"

namespace nicolai {

namespace {

void require_same_window(const SparseOperator& a, const SparseOperator& b) {
  if (!(a.window() == b.window())) {
    throw std::domain_error("operator windows differ: " + to_string(a.window()) + " vs " + to_string(b.window()));
  }
}

// Sorts by row, merges duplicates and drops zeros.
void canonicalize(SparseOperator::Column& col) {
  std::sort(col.begin(), col.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.row < y.row; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < col.size();) {
    BasisIndex row = col[i].row;
    std::int64_t sum = 0;
    for (; i < col.size() && col[i].row == row; ++i) sum = checked_add(sum, col[i].value);
    if (sum != 0) col[out++] = {row, sum};
  }
  col.resize(out);
}

SparseOperator combine(const SparseOperator& a, const SparseOperator& b, std::int64_t sb) {
  require_same_window(a, b);
  SparseOperator out(a.window());
  for (BasisIndex j = 0; j < a.dimension(); ++j) {
    SparseOperator::Column col = a.column(j);
    for (const auto& e : b.column(j)) col.push_back({e.row, checked_mul(sb, e.value)});
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace

SparseOperator::SparseOperator(SiteWindow window) : window_(window), columns_(window.dimension()) {}

SparseOperator SparseOperator::identity(SiteWindow window) {
  SparseOperator out(window);
  for (BasisIndex j = 0; j < out.dimension(); ++j) out.columns_[j] = {{j, 1}};
  return out;
}

std::int64_t SparseOperator::at(BasisIndex row, BasisIndex col) const {
  const Column& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const MatrixEntry& e, BasisIndex r) { return e.row < r; });
  return (it != c.end() && it->row == row) ? it->value : 0;
}

std::size_t SparseOperator::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseOperator::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

std::int64_t SparseOperator::max_abs() const {
  std::int64_t m = 0;
  for (const auto& c : columns_) {
    for (const auto& e : c) m = std::max(m, e.value < 0 ? checked_sub(0, e.value) : e.value);
  }
  return m;
}

void SparseOperator::set_column(BasisIndex col, Column entries) {
  for (const auto& e : entries) {
    if (e.row >= dimension()) throw std::domain_error("matrix row outside window");
  }
  canonicalize(entries);
  columns_.at(col) = std::move(entries);
}

SparseOperator SparseOperator::transpose() const {
  SparseOperator out(window_);
  for (BasisIndex j = 0; j < dimension(); ++j) {
    for (const auto& e : columns_[j]) out.columns_[e.row].push_back({j, e.value});
  }
  // Rows are visited in increasing j, so every output column is already sorted.
  return out;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) { return combine(a, b, 1); }
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) { return combine(a, b, -1); }

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  require_same_window(a, b);
  SparseOperator out(a.window());
  for (BasisIndex j = 0; j < b.dimension(); ++j) {
    SparseOperator::Column col;
    for (const auto& eb : b.column(j)) {
      for (const auto& ea : a.column(eb.row)) col.push_back({ea.row, checked_mul(ea.value, eb.value)});
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

SparseOperator operator*(std::int64_t s, const SparseOperator& a) {
  SparseOperator out(a.window());
  if (s == 0) return out;
  for (BasisIndex j = 0; j < a.dimension(); ++j) {
    SparseOperator::Column col = a.column(j);
    for (auto& e : col) e.value = checked_mul(s, e.value);
    out.set_column(j, std::move(col));
  }
  return out;
}

FockVector operator*(const SparseOperator& a, const FockVector& v) {
  if (!(a.window() == v.window())) throw std::domain_error("vector and operator windows differ");
  FockVector out(v.window());
  for (const auto& [j, amp] : v.amplitudes()) {
    for (const auto& e : a.column(j)) out.add(e.row, checked_mul(e.value, amp));
  }
  return out;
}

SparseOperator build_matrix(const OperatorSum& op, const SiteWindow& window) {
  for (const auto& t : op.terms) {
    if (!t.fits(window)) throw std::domain_error("operator term " + t.to_string() + " outside window " + to_string(window));
  }
  SparseOperator out(window);
  for (BasisIndex j = 0; j < window.dimension(); ++j) {
    const FockVector image = apply(op, FockVector::basis(OccupationConfig(window, j)));
    SparseOperator::Column col;
    col.reserve(image.amplitudes().size());
    for (const auto& [row, amp] : image.amplitudes()) col.push_back({row, amp});
    out.set_column(j, std::move(col));
  }
  return out;
}

SparseOperator build_matrix(const FermionMonomial& m, const SiteWindow& window) {
  OperatorSum op;
  op += m;
  return build_matrix(op, window);
}

Parity parity_of(const FermionMonomial& m) { return m.odd() ? Parity::odd : Parity::even; }

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) { return a * b + b * a; }

SparseOperator graded_commutator(const SparseOperator& a, const SparseOperator& b, Parity pa, Parity pb) {
  require_same_window(a, b);
  return (pa == Parity::odd && pb == Parity::odd) ? anticommutator(a, b) : commutator(a, b);
}

SparseOperator grade(const SparseOperator& a) {
  SparseOperator out(a.window());
  for (BasisIndex j = 0; j < a.dimension(); ++j) {
    SparseOperator::Column col = a.column(j);
    for (auto& e : col) {
      if ((std::popcount(e.row) + std::popcount(j)) % 2 == 1) e.value = -e.value;
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

SparseOperator parity_operator(const SiteWindow& window) {
  SparseOperator out(window);
  for (BasisIndex j = 0; j < out.dimension(); ++j) out.set_column(j, {{j, std::popcount(j) % 2 == 0 ? 1 : -1}});
  return out;
}

SparseOperator number_operator(const SiteWindow& window) {
  SparseOperator out(window);
  for (BasisIndex j = 0; j < out.dimension(); ++j) out.set_column(j, {{j, std::popcount(j)}});
  return out;
}

SparseOperator particle_hole_unitary(const SiteWindow& window) {
  // Expanding the product over basis configs, only the term that flips every
  // site survives on each basis vector, so U is a signed permutation.
  SparseOperator out(window);
  const BasisIndex all = window.dimension() - 1;
  for (BasisIndex j = 0; j < out.dimension(); ++j) {
    OccupationConfig cfg(window, j);
    int sign = 1;
    for (int site = window.hi(); site >= window.lo(); --site) {
      auto r = apply_ladder(cfg, site, !cfg.occupied(site));
      cfg = r->config;
      sign *= r->sign;
    }
    out.set_column(j, {{j ^ all, sign}});
  }
  return out;
}

SparseOperator particle_hole_conjugate(const SparseOperator& a) {
  const SparseOperator u = particle_hole_unitary(a.window());
  return u * a * u.transpose();
}

}  // namespace nicolai
