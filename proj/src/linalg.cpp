#include "nicolai/linalg.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "nicolai/checked.h"

namespace nicolai {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<BasisIndex>> collect(DisjointSets& sets, const std::vector<BasisIndex>& subset) {
  std::vector<std::vector<BasisIndex>> blocks;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(sets.find(i), blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(subset[i]);
  }
  return blocks;
}

template <typename Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
          a[r][k] = checked_sub(checked_mul(a[rank][c], a[r][k]), checked_mul(a[r][c], a[rank][k])) / prev;
        } else {
          a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
        }
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const DenseIntMatrix& m) {
  try {
    return bareiss_rank<std::int64_t>(m);
  } catch (const std::overflow_error&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) big[r].assign(m[r].begin(), m[r].end());
    return bareiss_rank<cpp_int>(std::move(big));
  }
}

std::vector<BasisIndex> sector_basis(const SiteWindow& window, std::optional<int> particles) {
  if (particles && (*particles < 0 || *particles > window.size())) {
    throw std::domain_error("particle sector outside 0.." + std::to_string(window.size()));
  }
  std::vector<BasisIndex> out;
  for (BasisIndex j = 0; j < window.dimension(); ++j) {
    if (!particles || std::popcount(j) == *particles) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<BasisIndex>> column_blocks(std::span<const SparseOperator* const> ops,
                                                   const std::vector<BasisIndex>& subset) {
  DisjointSets sets(subset.size());
  for (const SparseOperator* op : ops) {
    std::unordered_map<BasisIndex, std::size_t> first_column_for_row;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (const auto& e : op->column(subset[i])) {
        auto [it, fresh] = first_column_for_row.try_emplace(e.row, i);
        if (!fresh) sets.join(it->second, i);
      }
    }
  }
  return collect(sets, subset);
}

std::size_t joint_kernel_dimension(std::span<const SparseOperator* const> ops, const std::vector<BasisIndex>& subset) {
  std::size_t rank = 0;
  for (const auto& block : column_blocks(ops, subset)) {
    // Rows are (operator, row index) pairs touched by the block.
    std::vector<std::unordered_map<BasisIndex, std::size_t>> row_slot(ops.size());
    std::size_t rows = 0;
    for (std::size_t o = 0; o < ops.size(); ++o) {
      for (BasisIndex j : block) {
        for (const auto& e : ops[o]->column(j)) {
          if (row_slot[o].try_emplace(e.row, rows).second) ++rows;
        }
      }
    }
    if (rows == 0) continue;
    DenseIntMatrix dense(rows, std::vector<std::int64_t>(block.size(), 0));
    for (std::size_t o = 0; o < ops.size(); ++o) {
      for (std::size_t c = 0; c < block.size(); ++c) {
        for (const auto& e : ops[o]->column(block[c])) dense[row_slot[o].at(e.row)][c] = e.value;
      }
    }
    rank += exact_rank(dense);
  }
  return subset.size() - rank;
}

std::vector<double> symmetric_eigenvalues(const SparseOperator& h, const std::vector<BasisIndex>& subset) {
  std::unordered_map<BasisIndex, std::size_t> index_of;
  for (std::size_t i = 0; i < subset.size(); ++i) index_of.emplace(subset[i], i);

  DisjointSets sets(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (const auto& e : h.column(subset[i])) {
      auto it = index_of.find(e.row);
      if (it == index_of.end()) throw std::domain_error("basis subset is not invariant under the operator");
      if (h.at(subset[i], e.row) != e.value) throw std::domain_error("operator is not symmetric");
      sets.join(i, it->second);
    }
  }

  std::vector<double> eigenvalues;
  eigenvalues.reserve(subset.size());
  for (const auto& block : collect(sets, subset)) {
    const auto n = static_cast<Eigen::Index>(block.size());
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    std::unordered_map<BasisIndex, Eigen::Index> local;
    for (Eigen::Index c = 0; c < n; ++c) local.emplace(block[static_cast<std::size_t>(c)], c);
    for (Eigen::Index c = 0; c < n; ++c) {
      for (const auto& e : h.column(block[static_cast<std::size_t>(c)])) {
        dense(local.at(e.row), c) = static_cast<double>(e.value);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed to converge");
    for (Eigen::Index i = 0; i < n; ++i) eigenvalues.push_back(solver.eigenvalues()(i));
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace nicolai
