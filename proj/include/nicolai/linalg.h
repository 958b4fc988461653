#pragma once

// Exact rank and floating-point spectra for the integer operators.
//
// Both routines first split the basis into blocks that the operators never
// connect, so the dense work stays small even on 2^14-dimensional spaces.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nicolai/sparse.h"

namespace nicolai {

using DenseIntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// int64 and retries with arbitrary precision if an intermediate overflows.
std::size_t exact_rank(const DenseIntMatrix& m);

/// Basis indices with `particles` occupied sites, or all indices.
std::vector<BasisIndex> sector_basis(const SiteWindow& window, std::optional<int> particles);

/// Connected components of `subset` under the nonzero pattern of `ops`
/// (columns are joined when they share a nonzero row in the same operator).
std::vector<std::vector<BasisIndex>> column_blocks(std::span<const SparseOperator* const> ops,
                                                   const std::vector<BasisIndex>& subset);

/// dim of (ker ops[0] ∩ ker ops[1] ∩ ...) restricted to span(subset), exactly.
std::size_t joint_kernel_dimension(std::span<const SparseOperator* const> ops, const std::vector<BasisIndex>& subset);

/// Eigenvalues of a symmetric integer operator restricted to span(subset),
/// which must be an invariant subspace. Sorted ascending.
std::vector<double> symmetric_eigenvalues(const SparseOperator& h, const std::vector<BasisIndex>& subset);

}  // namespace nicolai
