#include "nicolai/model.h"

#include <array>
#include <stdexcept>

#include "nicolai/linalg.h"

namespace nicolai {

Interval::Interval(int k, int l) : k_(k), l_(l) {
  if (k >= l) throw std::domain_error("interval requires k < l");
}

std::string to_string(EdgeMode mode) { return mode == EdgeMode::open ? "open" : "closed"; }

EdgeMode parse_edge_mode(const std::string& text) {
  if (text == "open") return EdgeMode::open;
  if (text == "closed" || text == "close") return EdgeMode::closed;
  throw std::domain_error("edge mode must be 'open' or 'closed'");
}

FermionMonomial local_supercharge(int i) {
  return FermionMonomial::written(1, {{2 * i + 1, false}, {2 * i, true}, {2 * i - 1, false}});
}

OperatorSum supercharge_sum(int first, int last) {
  OperatorSum q;
  for (int i = first; i <= last; ++i) q += local_supercharge(i);
  return q;
}

ModelOperators build_supercharge(const Interval& interval, EdgeMode edge) {
  int first = interval.k();
  int last = interval.l();
  SiteWindow window = interval.padded();
  if (edge == EdgeMode::closed) {
    if (interval.k() + 1 >= interval.l()) throw std::domain_error("closed edges need k + 1 < l");
    first = interval.k() + 1;
    last = interval.l() - 1;
    window = interval.inner();
  }
  const OperatorSum q = supercharge_sum(first, last);
  SparseOperator Q = build_matrix(q, window);
  SparseOperator Qdag = build_matrix(adjoint(q), window);
  SparseOperator H = anticommutator(Q, Qdag);
  return ModelOperators{interval, edge, window, std::move(Q), std::move(Qdag), std::move(H)};
}

OperatorSum bulk_hamiltonian_diagonal_terms(int i) {
  const int a = 2 * i - 1, b = 2 * i, c = 2 * i + 1;
  OperatorSum h;
  h += FermionMonomial::written(1, {{b, true}, {b, false}, {c, false}, {c, true}});
  h += FermionMonomial::written(1, {{a, true}, {a, false}, {b, false}, {b, true}});
  h += FermionMonomial::written(-1, {{a, true}, {a, false}, {c, false}, {c, true}});
  return h;
}

OperatorSum bulk_hamiltonian_hopping_terms(int i) {
  const int a = 2 * i - 1, b = 2 * i, d = 2 * i + 2, e = 2 * i + 3;
  OperatorSum h;
  h += FermionMonomial::written(1, {{b, true}, {a, false}, {d, false}, {e, true}});
  h += FermionMonomial::written(1, {{a, true}, {b, false}, {e, false}, {d, true}});
  return h;
}

OperatorSum bulk_hamiltonian_terms(int i) {
  OperatorSum h = bulk_hamiltonian_hopping_terms(i);
  h += bulk_hamiltonian_diagonal_terms(i);
  return h;
}

bool bulk_term_crosscheck(int i) {
  const SiteWindow near(2 * i - 1, 2 * i + 3);
  const auto q0 = build_matrix(local_supercharge(i), near);
  const auto q1 = build_matrix(local_supercharge(i + 1), near);
  const auto q0d = build_matrix(adjoint(local_supercharge(i)), near);
  const auto q1d = build_matrix(adjoint(local_supercharge(i + 1)), near);
  const SparseOperator grouped = anticommutator(q0, q0d) + anticommutator(q0, q1d) + anticommutator(q1, q0d);
  if (!(grouped == build_matrix(bulk_hamiltonian_terms(i), near))) return false;

  const SiteWindow far(2 * i - 1, 2 * i + 5);
  const auto f0 = build_matrix(local_supercharge(i), far);
  const auto f2 = build_matrix(local_supercharge(i + 2), far);
  const auto f0d = build_matrix(adjoint(local_supercharge(i)), far);
  const auto f2d = build_matrix(adjoint(local_supercharge(i + 2)), far);
  return anticommutator(f0, f2d).is_zero() && anticommutator(f2, f0d).is_zero();
}

SymmetryReport symmetry_report(const ModelOperators& m) {
  return SymmetryReport{
      commutator(m.H, number_operator(m.window)).is_zero(),
      commutator(m.H, parity_operator(m.window)).is_zero(),
      particle_hole_conjugate(m.H) == m.H,
  };
}

SpectrumReport spectrum(const ModelOperators& m, std::optional<int> sector) {
  const std::vector<BasisIndex> subset = sector_basis(m.window, sector);
  const std::array<const SparseOperator*, 2> charges{&m.Q, &m.Qdag};
  return SpectrumReport{sector, symmetric_eigenvalues(m.H, subset), joint_kernel_dimension(charges, subset)};
}

}  // namespace nicolai
