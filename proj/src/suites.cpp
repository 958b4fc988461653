#include "nicolai/suites.h"

#include <algorithm>
#include <set>

#include "nicolai/charges.h"
#include "nicolai/ground_states.h"
#include "nicolai/serialize.h"
#include "nicolai/sparse.h"

namespace nicolai {

namespace {

std::string interval_scope(int k, int l, EdgeMode mode) {
  return "I(" + std::to_string(k) + "," + std::to_string(l) + ") " + to_string(mode);
}

}  // namespace

OperatorSum explicit_hamiltonian(int first, int last) {
  OperatorSum h;
  for (int i = first; i <= last; ++i) {
    h += bulk_hamiltonian_diagonal_terms(i);
    if (i < last) h += bulk_hamiltonian_hopping_terms(i);
  }
  return h;
}

std::vector<CheckResult> verify_algebra_suite(int n) {
  std::vector<CheckResult> out;
  for (EdgeMode mode : {EdgeMode::open, EdgeMode::closed}) {
    if (mode == EdgeMode::closed && n < 2) continue;
    const ModelOperators m = build_supercharge(Interval(0, n), mode);
    const std::string scope = interval_scope(0, n, mode);
    const SparseOperator parity = parity_operator(m.window);
    const SparseOperator number = number_operator(m.window);
    const int first = mode == EdgeMode::open ? 0 : 1;
    const int last = mode == EdgeMode::open ? n : n - 1;
    auto add = [&](std::string identity, bool ok) { out.push_back({std::move(identity), scope, ok, ""}); };
    add("Q^2 = 0", (m.Q * m.Q).is_zero());
    add("Qdag^2 = 0", (m.Qdag * m.Qdag).is_zero());
    add("Qdag = Q^T", m.Qdag == m.Q.transpose());
    add("H = Q Qdag + Qdag Q", m.H == m.Q * m.Qdag + m.Qdag * m.Q);
    add("H = explicit bulk terms", m.H == build_matrix(explicit_hamiltonian(first, last), m.window));
    add("[H, Q] = 0", commutator(m.H, m.Q).is_zero());
    add("[H, Qdag] = 0", commutator(m.H, m.Qdag).is_zero());
    add("{(-1)^N, Q} = 0", anticommutator(parity, m.Q).is_zero());
    add("{(-1)^N, Qdag} = 0", anticommutator(parity, m.Qdag).is_zero());
    add("[H, N] = 0", commutator(m.H, number).is_zero());
    add("[H, (-1)^N] = 0", commutator(m.H, parity).is_zero());
  }
  return out;
}

std::vector<CheckResult> verify_charges_suite(int n) {
  std::vector<CheckResult> out;
  const ModelOperators m = build_supercharge(Interval(0, n), EdgeMode::open);
  const SparseOperator parity = parity_operator(m.window);
  for (const auto& f : enumerate_union(0, n)) {
    const std::string scope = "f = " + f.to_string() + " on I(" + std::to_string(f.interval().k()) + "," +
                              std::to_string(f.interval().l()) + ")";
    const FermionMonomial q = build_charge(f).monomial;
    out.push_back({"[H, Q(f)] = [H, Q(f)*] = 0 and {Q, Q(f)} = {Qdag, Q(f)} = 0", scope, verify_commutation(f, m), ""});
    out.push_back({"Q(f) q_2i = q_2i Q(f) = 0 (and adjoints)", scope, verify_annihilation(f, m.window), ""});
    out.push_back({"{(-1)^N, Q(f)} = 0", scope, anticommutator(parity, build_matrix(q, m.window)).is_zero(), ""});
  }
  return out;
}

std::vector<CheckResult> verify_classification_suite(int n) {
  std::vector<CheckResult> out;
  const Interval interval(0, n);
  std::set<BasisIndex> upsilon;
  for (const auto& g : enumerate_upsilon_hat(0, n)) upsilon.insert(g.bits());

  std::size_t mismatches = 0, implication_failures = 0, susy = 0;
  for (BasisIndex b = 0; b < interval.inner().dimension(); ++b) {
    const FockVector psi = FockVector::basis(OccupationConfig(interval.inner(), b));
    const bool open = is_open_edge_susy_vector(psi, 0, n);
    susy += open ? 1 : 0;
    if (open != (upsilon.count(b) == 1)) ++mismatches;
    if (open && n >= 2 && !is_close_edge_susy_vector(psi, 0, n)) ++implication_failures;
  }
  const std::string scope = "I(0," + std::to_string(n) + ")";
  out.push_back({"open-edge SUSY <=> g in Upsilon-hat", scope, mismatches == 0,
                 std::to_string(susy) + " SUSY vectors, " + std::to_string(mismatches) + " mismatches"});
  if (n >= 2) {
    out.push_back({"open-edge SUSY => close-edge SUSY", scope, implication_failures == 0,
                   std::to_string(implication_failures) + " failures"});
  }
  const BigInt transfer = count_transfer(n);
  out.push_back({"|Upsilon-hat| = transfer count", scope, BigInt(upsilon.size()) == transfer,
                 std::to_string(upsilon.size()) + " vs " + transfer.str()});
  return out;
}

std::vector<CheckResult> verify_fixtures_suite(const std::filesystem::path& dir) {
  std::vector<CheckResult> out;
  for (const auto& table : load_fixtures(dir)) {
    std::set<std::string> expected, actual;
    for (const auto& row : table.rows) expected.insert(row.values);
    bool operators_ok = true;
    if (table.kind == "conservation_sequences") {
      for (const auto& f : enumerate_sequences(table.k, table.l)) actual.insert(f.to_string());
      for (const auto& row : table.rows) {
        if (row.op.empty()) continue;
        const auto f = ConservationSequence::parse(Interval(table.k, table.l), row.values);
        operators_ok = operators_ok && build_charge(f).monomial.to_string() == row.op;
      }
    } else {
      for (const auto& g : enumerate_upsilon_hat(table.k, table.l)) actual.insert(g.to_string());
    }
    out.push_back({"enumeration reproduces table as a set", table.name, expected == actual,
                   std::to_string(actual.size()) + " enumerated, " + std::to_string(expected.size()) + " in table"});
    if (table.kind == "conservation_sequences") {
      out.push_back({"charge operators match table", table.name, operators_ok, ""});
    }
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace nicolai
