#pragma once

// Finite CAR algebra on a window of lattice sites: occupation basis, ladder
// action with Jordan-Wigner signs, monomials and sparse vectors.
//
// Sign convention: a ladder operator at site s acting on a configuration
// picks up (-1)^(number of occupied sites with index < s inside the window).
// With this convention a product of creators written in increasing site
// order acts on the empty configuration with sign +1.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nicolai {

using BasisIndex = std::uint64_t;

/// Contiguous inclusive range of lattice sites [lo, hi].
class SiteWindow {
 public:
  static constexpr int kMaxSites = 62;

  SiteWindow(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int size() const { return hi_ - lo_ + 1; }
  BasisIndex dimension() const { return BasisIndex{1} << size(); }

  bool contains(int site) const { return site >= lo_ && site <= hi_; }
  bool contains(const SiteWindow& other) const {
    return other.lo_ >= lo_ && other.hi_ <= hi_;
  }
  /// Bit position of `site`; throws std::domain_error outside the window.
  int position(int site) const;
  BasisIndex mask(int site) const { return BasisIndex{1} << position(site); }

  bool operator==(const SiteWindow&) const = default;

 private:
  int lo_;
  int hi_;
};

std::string to_string(const SiteWindow& w);

/// A {0,1} assignment on every site of a window. Site lo + p is bit p.
class OccupationConfig {
 public:
  explicit OccupationConfig(SiteWindow window, BasisIndex bits = 0);

  static OccupationConfig empty(SiteWindow window) { return OccupationConfig(window, 0); }
  static OccupationConfig filled(SiteWindow window) {
    return OccupationConfig(window, window.dimension() - 1);
  }
  /// Parses "0011..." read from the lowest site upwards.
  static OccupationConfig parse(SiteWindow window, std::string_view text);
  /// Parses a bitstring onto the window starting at `lo`.
  static OccupationConfig parse(int lo, std::string_view text);

  const SiteWindow& window() const { return window_; }
  BasisIndex bits() const { return bits_; }

  bool occupied(int site) const { return (bits_ & window_.mask(site)) != 0; }
  OccupationConfig with(int site, bool value) const;
  OccupationConfig complement() const;
  int particle_count() const;
  /// Number of occupied sites strictly to the left of `site` in the window.
  int occupied_below(int site) const;

  std::string to_string() const;

  bool operator==(const OccupationConfig&) const = default;
  auto operator<=>(const OccupationConfig& o) const { return to_string() <=> o.to_string(); }

 private:
  SiteWindow window_;
  BasisIndex bits_;
};

struct Ladder {
  int site;
  bool dagger;

  bool operator==(const Ladder&) const = default;
};

struct LadderResult {
  OccupationConfig config;
  int sign;
};

/// c_site or c*_site on a basis configuration. Empty when the result is zero.
std::optional<LadderResult> apply_ladder(const OccupationConfig& config, int site, bool dagger);

/// Integer multiple of an ordered product of ladder operators.
///
/// Factors are held in application order: factors()[0] is the rightmost
/// operator of the written product and acts first. Use `written` to build
/// from the usual left-to-right notation.
class FermionMonomial {
 public:
  FermionMonomial() = default;
  FermionMonomial(std::int64_t coefficient, std::vector<Ladder> application_order)
      : coefficient_(coefficient), factors_(std::move(application_order)) {}

  /// Builds coefficient * (l_0 l_1 ... l_{m-1}) from the written order.
  static FermionMonomial written(std::int64_t coefficient, std::vector<Ladder> left_to_right);
  static FermionMonomial identity() { return FermionMonomial(1, {}); }

  std::int64_t coefficient() const { return coefficient_; }
  const std::vector<Ladder>& factors() const { return factors_; }
  /// Factors in left-to-right written order.
  std::vector<Ladder> written_factors() const;
  std::size_t degree() const { return factors_.size(); }
  bool odd() const { return factors_.size() % 2 == 1; }
  bool fits(const SiteWindow& window) const;

  /// Written form, e.g. "-1 c1 c*0 c-1"; the coefficient is omitted when 1.
  std::string to_string() const;

  bool operator==(const FermionMonomial&) const = default;

 private:
  std::int64_t coefficient_ = 1;
  std::vector<Ladder> factors_;
};

FermionMonomial adjoint(const FermionMonomial& m);
FermionMonomial operator*(const FermionMonomial& a, const FermionMonomial& b);

struct OperatorSum {
  std::vector<FermionMonomial> terms;

  OperatorSum& operator+=(FermionMonomial m) {
    terms.push_back(std::move(m));
    return *this;
  }
  OperatorSum& operator+=(const OperatorSum& other);
};

OperatorSum adjoint(const OperatorSum& op);

/// Vector on the Fock space of a window with exact integer amplitudes.
/// Zero amplitudes are never stored.
class FockVector {
 public:
  explicit FockVector(SiteWindow window) : window_(window) {}

  static FockVector basis(const OccupationConfig& config, std::int64_t amplitude = 1);

  const SiteWindow& window() const { return window_; }
  const std::map<BasisIndex, std::int64_t>& amplitudes() const { return amplitudes_; }
  std::int64_t amplitude(BasisIndex index) const;
  void add(BasisIndex index, std::int64_t amplitude);

  bool is_zero() const { return amplitudes_.empty(); }
  /// True for a single basis vector with amplitude +-1.
  bool is_classical() const;

  bool operator==(const FockVector&) const = default;

 private:
  SiteWindow window_;
  std::map<BasisIndex, std::int64_t> amplitudes_;
};

FockVector apply(const FermionMonomial& m, const FockVector& v);
FockVector apply(const OperatorSum& op, const FockVector& v);

/// c*_site c_site.
FermionMonomial number_term(int site);

}  // namespace nicolai
