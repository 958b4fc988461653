#pragma once

// Conservation sequences and the local fermion charges they define.
//
// A conservation sequence on I_{k,l} is a +-1 assignment f with
//   * no triplet {2i-1, 2i, 2i+1} carrying (-,+,-) or (+,-,+), and
//   * f(2k) = f(2k+1), f(2l-1) = f(2l).
// Its charge is Q(f) = zeta_{2k}(f(2k)) ... zeta_{2l}(f(2l)) written in
// increasing site order, with zeta_i(-1) = c_i and zeta_i(+1) = c*_i.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nicolai/fock.h"
#include "nicolai/model.h"

namespace nicolai {

using SignPattern = std::vector<std::int8_t>;

/// True if `values` (one entry per site of interval.inner()) satisfies the
/// triplet and edge constraints.
bool is_conservation_pattern(const Interval& interval, std::span<const std::int8_t> values);

class ConservationSequence {
 public:
  /// Throws std::domain_error if the pattern violates any constraint.
  ConservationSequence(Interval interval, SignPattern values);

  /// Parses "+--++" (one character per site, increasing order).
  static ConservationSequence parse(Interval interval, std::string_view text);
  /// Constant sequence r^{+} or r^{-} on I_{k,l}.
  static ConservationSequence constant(Interval interval, int sign);

  const Interval& interval() const { return interval_; }
  const SignPattern& values() const { return values_; }
  int value(int site) const { return values_.at(static_cast<std::size_t>(interval_.inner().position(site))); }

  std::string to_string() const;

  bool operator==(const ConservationSequence&) const = default;
  /// Orders by (k, l) and then lexicographically with -1 < +1.
  auto operator<=>(const ConservationSequence&) const = default;

 private:
  Interval interval_;
  SignPattern values_;
};

std::string pattern_to_string(std::span<const std::int8_t> values);
SignPattern parse_pattern(std::string_view text);

ConservationSequence negate(const ConservationSequence& f);

/// All of Xi_{k,l}, lexicographic with -1 < +1.
std::vector<ConservationSequence> enumerate_sequences(int k, int l);
/// Union of Xi_{k,l} over p <= k < l <= q, ordered by (k, l, values).
std::vector<ConservationSequence> enumerate_union(int p, int q);

/// Product of zeta_i over a raw pattern starting at site `first`, written in
/// increasing site order with coefficient +1. No constraint checks.
FermionMonomial charge_monomial(int first, std::span<const std::int8_t> values);

struct ChargeOperator {
  ConservationSequence sequence;
  FermionMonomial monomial;
};

ChargeOperator build_charge(const ConservationSequence& f);

/// True iff Q q_{2i}, q_{2i} Q, Q q*_{2i} and q*_{2i} Q all vanish for every
/// triplet {2i-1, 2i, 2i+1} inside `window` that meets support.inner(), and
/// Q anticommutes with q_{2i} and q*_{2i} for the remaining triplets inside
/// the window. Throws std::domain_error unless window contains support.inner().
bool verify_annihilation(const FermionMonomial& charge, const Interval& support, const SiteWindow& window);
bool verify_annihilation(const ConservationSequence& f, const SiteWindow& window);

/// [H, Q(f)] = [H, Q(f)*] = 0 and {Q, Q(f)} = {Q*, Q(f)} = {Q, Q(f)*} =
/// {Q*, Q(f)*} = 0 on the model's working window.
bool verify_commutation(const ConservationSequence& f, const ModelOperators& m);

}  // namespace nicolai
