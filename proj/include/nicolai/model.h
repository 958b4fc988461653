#pragma once

// Supercharges and Hamiltonians of the Nicolai chain on finite intervals.
//
//   q_{2i} = c_{2i+1} c*_{2i} c_{2i-1},   Q = sum_i q_{2i},   H = {Q, Q*}
//
// An interval (k, l) with k < l names I_{k,l} = [2k .. 2l] and the padded
// window J_{k,l} = [2k-1 .. 2l+1]. Open-edge operators use Q[k,l] on J_{k,l};
// closed-edge operators use Q[k+1,l-1] on I_{k,l}.

#include <optional>
#include <string>
#include <vector>

#include "nicolai/fock.h"
#include "nicolai/sparse.h"

namespace nicolai {

class Interval {
 public:
  Interval(int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  /// l - k, the number of site pairs beyond the first.
  int length() const { return l_ - k_; }

  /// I_{k,l} = [2k .. 2l], 2(l-k)+1 sites.
  SiteWindow inner() const { return SiteWindow(2 * k_, 2 * l_); }
  /// J_{k,l} = [2k-1 .. 2l+1], 2(l-k+1)+1 sites.
  SiteWindow padded() const { return SiteWindow(2 * k_ - 1, 2 * l_ + 1); }

  Interval shifted(int pairs) const { return Interval(k_ + pairs, l_ + pairs); }

  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;

 private:
  int k_;
  int l_;
};

enum class EdgeMode { open, closed };

std::string to_string(EdgeMode mode);
EdgeMode parse_edge_mode(const std::string& text);

/// q_{2i} = c_{2i+1} c*_{2i} c_{2i-1}.
FermionMonomial local_supercharge(int i);

/// sum_{i=first}^{last} q_{2i}.
OperatorSum supercharge_sum(int first, int last);

struct ModelOperators {
  Interval interval;
  EdgeMode edge;
  SiteWindow window;
  SparseOperator Q;
  SparseOperator Qdag;
  SparseOperator H;
};

/// Throws std::domain_error for closed edges unless k + 1 < l.
ModelOperators build_supercharge(const Interval& interval, EdgeMode edge);

/// The five per-site terms of the explicit bulk Hamiltonian for index i:
///   c*_{2i} c_{2i-1} c_{2i+2} c*_{2i+3} + c*_{2i-1} c_{2i} c_{2i+3} c*_{2i+2}
///   + c*_{2i} c_{2i} c_{2i+1} c*_{2i+1} + c*_{2i-1} c_{2i-1} c_{2i} c*_{2i}
///   - c*_{2i-1} c_{2i-1} c_{2i+1} c*_{2i+1}
OperatorSum bulk_hamiltonian_terms(int i);
/// The last three terms above (those supported on {2i-1, 2i, 2i+1}).
OperatorSum bulk_hamiltonian_diagonal_terms(int i);
/// The first two terms above (hopping across to the next triplet).
OperatorSum bulk_hamiltonian_hopping_terms(int i);

/// Checks that {q_{2i}, q*_{2i}} + {q_{2i}, q*_{2i+2}} + {q_{2i+2}, q*_{2i}}
/// equals bulk_hamiltonian_terms(i) exactly, and that the cross terms
/// {q_{2i}, q*_{2i+4}}, {q_{2i+4}, q*_{2i}} vanish.
bool bulk_term_crosscheck(int i);

struct SymmetryReport {
  bool commutes_with_number;
  bool commutes_with_parity;
  /// Whether U H U^T == H for the particle-hole unitary U. Reported only.
  bool particle_hole_invariant;
};

SymmetryReport symmetry_report(const ModelOperators& m);

struct SpectrumReport {
  std::optional<int> sector;  // particle number; empty for the whole space
  std::vector<double> eigenvalues;
  std::size_t kernel_dimension;

  std::string sector_label() const { return sector ? std::to_string(*sector) : "all"; }
};

/// Eigenvalues of H on a particle-number sector (or everywhere), and the
/// exact dimension of ker Q ∩ ker Q* on the same subspace.
SpectrumReport spectrum(const ModelOperators& m, std::optional<int> sector = std::nullopt);

}  // namespace nicolai
