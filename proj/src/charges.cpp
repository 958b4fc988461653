#include "nicolai/charges.h"

#include <algorithm>
#include <stdexcept>

#include "nicolai/sparse.h"

namespace nicolai {

namespace {

// Constraints that can be decided once positions 0..p are fixed.
bool prefix_ok(std::span<const std::int8_t> v, std::size_t p) {
  if (p == 1 && v[0] != v[1]) return false;
  // Position p sits on site 2k + p, so odd p closes a triplet centred on an even site.
  if (p >= 3 && p % 2 == 1 && v[p - 2] == v[p] && v[p - 1] != v[p]) return false;
  return true;
}

void extend(const Interval& interval, SignPattern& prefix, std::vector<ConservationSequence>& out) {
  const auto size = static_cast<std::size_t>(interval.inner().size());
  if (prefix.size() == size) {
    if (prefix[size - 2] == prefix[size - 1]) out.emplace_back(interval, prefix);
    return;
  }
  for (std::int8_t s : {std::int8_t{-1}, std::int8_t{1}}) {
    prefix.push_back(s);
    if (prefix_ok(prefix, prefix.size() - 1)) extend(interval, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool is_conservation_pattern(const Interval& interval, std::span<const std::int8_t> values) {
  const auto size = static_cast<std::size_t>(interval.inner().size());
  if (values.size() != size) return false;
  for (std::int8_t x : values) {
    if (x != 1 && x != -1) return false;
  }
  for (std::size_t p = 1; p < size; ++p) {
    if (!prefix_ok(values, p)) return false;
  }
  return values[size - 2] == values[size - 1];
}

ConservationSequence::ConservationSequence(Interval interval, SignPattern values)
    : interval_(interval), values_(std::move(values)) {
  if (!is_conservation_pattern(interval_, values_)) {
    throw std::domain_error("not a conservation sequence on I(" + std::to_string(interval_.k()) + "," +
                            std::to_string(interval_.l()) + "): " + pattern_to_string(values_));
  }
}

ConservationSequence ConservationSequence::parse(Interval interval, std::string_view text) {
  return ConservationSequence(interval, parse_pattern(text));
}

ConservationSequence ConservationSequence::constant(Interval interval, int sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("constant sequence sign must be +1 or -1");
  return ConservationSequence(interval,
                              SignPattern(static_cast<std::size_t>(interval.inner().size()), static_cast<std::int8_t>(sign)));
}

std::string ConservationSequence::to_string() const { return pattern_to_string(values_); }

std::string pattern_to_string(std::span<const std::int8_t> values) {
  std::string out;
  out.reserve(values.size());
  for (std::int8_t x : values) out += x > 0 ? '+' : '-';
  return out;
}

SignPattern parse_pattern(std::string_view text) {
  SignPattern out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      out.push_back(1);
    } else if (ch == '-') {
      out.push_back(-1);
    } else {
      throw std::domain_error("sign pattern may only contain '+' and '-'");
    }
  }
  return out;
}

ConservationSequence negate(const ConservationSequence& f) {
  SignPattern v = f.values();
  for (auto& x : v) x = static_cast<std::int8_t>(-x);
  return ConservationSequence(f.interval(), std::move(v));
}

std::vector<ConservationSequence> enumerate_sequences(int k, int l) {
  const Interval interval(k, l);
  std::vector<ConservationSequence> out;
  SignPattern prefix;
  prefix.reserve(static_cast<std::size_t>(interval.inner().size()));
  extend(interval, prefix, out);
  return out;
}

std::vector<ConservationSequence> enumerate_union(int p, int q) {
  if (p >= q) throw std::domain_error("union range requires p < q");
  std::vector<ConservationSequence> out;
  for (int k = p; k < q; ++k) {
    for (int l = k + 1; l <= q; ++l) {
      auto part = enumerate_sequences(k, l);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FermionMonomial charge_monomial(int first, std::span<const std::int8_t> values) {
  std::vector<Ladder> written;
  written.reserve(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) written.push_back({first + static_cast<int>(p), values[p] > 0});
  return FermionMonomial::written(1, std::move(written));
}

ChargeOperator build_charge(const ConservationSequence& f) {
  return ChargeOperator{f, charge_monomial(f.interval().inner().lo(), f.values())};
}

bool verify_annihilation(const FermionMonomial& charge, const Interval& support, const SiteWindow& window) {
  if (!window.contains(support.inner())) {
    throw std::domain_error("window " + to_string(window) + " does not contain " + to_string(support.inner()));
  }
  const SparseOperator c = build_matrix(charge, window);
  for (int i = window.lo() / 2 - 1; 2 * i + 1 <= window.hi(); ++i) {
    if (2 * i - 1 < window.lo()) continue;
    const FermionMonomial q = local_supercharge(i);
    const SparseOperator qm = build_matrix(q, window);
    const SparseOperator qd = build_matrix(adjoint(q), window);
    const bool overlaps = i >= support.k() && i <= support.l();
    if (overlaps) {
      if (!(c * qm).is_zero() || !(qm * c).is_zero() || !(c * qd).is_zero() || !(qd * c).is_zero()) return false;
    } else if (!anticommutator(c, qm).is_zero() || !anticommutator(c, qd).is_zero()) {
      return false;
    }
  }
  return true;
}

bool verify_annihilation(const ConservationSequence& f, const SiteWindow& window) {
  return verify_annihilation(build_charge(f).monomial, f.interval(), window);
}

bool verify_commutation(const ConservationSequence& f, const ModelOperators& m) {
  if (!m.window.contains(f.interval().inner())) {
    throw std::domain_error("sequence support outside the model window " + to_string(m.window));
  }
  const FermionMonomial charge = build_charge(f).monomial;
  const SparseOperator c = build_matrix(charge, m.window);
  const SparseOperator cd = build_matrix(adjoint(charge), m.window);
  return commutator(m.H, c).is_zero() && commutator(m.H, cd).is_zero() && anticommutator(m.Q, c).is_zero() &&
         anticommutator(m.Qdag, c).is_zero() && anticommutator(m.Q, cd).is_zero() &&
         anticommutator(m.Qdag, cd).is_zero();
}

}  // namespace nicolai
