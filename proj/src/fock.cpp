#include "nicolai/fock.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nicolai/checked.h"

namespace nicolai {

SiteWindow::SiteWindow(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw std::domain_error("site window requires lo <= hi");
  if (hi - lo + 1 > kMaxSites) throw std::domain_error("site window too large");
}

int SiteWindow::position(int site) const {
  if (!contains(site)) {
    throw std::domain_error("site " + std::to_string(site) + " outside window " + nicolai::to_string(*this));
  }
  return site - lo_;
}

std::string to_string(const SiteWindow& w) {
  return "[" + std::to_string(w.lo()) + ".." + std::to_string(w.hi()) + "]";
}

OccupationConfig::OccupationConfig(SiteWindow window, BasisIndex bits) : window_(window), bits_(bits) {
  if (bits >= window.dimension()) throw std::domain_error("configuration bits exceed window");
}

OccupationConfig OccupationConfig::parse(SiteWindow window, std::string_view text) {
  if (static_cast<int>(text.size()) != window.size()) {
    throw std::domain_error("bitstring length " + std::to_string(text.size()) + " does not match window " +
                            nicolai::to_string(window));
  }
  BasisIndex bits = 0;
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (text[p] == '1') {
      bits |= BasisIndex{1} << p;
    } else if (text[p] != '0') {
      throw std::domain_error("bitstring may only contain '0' and '1'");
    }
  }
  return OccupationConfig(window, bits);
}

OccupationConfig OccupationConfig::parse(int lo, std::string_view text) {
  if (text.empty()) throw std::domain_error("empty bitstring");
  return parse(SiteWindow(lo, lo + static_cast<int>(text.size()) - 1), text);
}

OccupationConfig OccupationConfig::with(int site, bool value) const {
  const BasisIndex m = window_.mask(site);
  return OccupationConfig(window_, value ? (bits_ | m) : (bits_ & ~m));
}

OccupationConfig OccupationConfig::complement() const {
  return OccupationConfig(window_, bits_ ^ (window_.dimension() - 1));
}

int OccupationConfig::particle_count() const { return std::popcount(bits_); }

int OccupationConfig::occupied_below(int site) const {
  const BasisIndex below = window_.mask(site) - 1;
  return std::popcount(bits_ & below);
}

std::string OccupationConfig::to_string() const {
  std::string out(static_cast<std::size_t>(window_.size()), '0');
  for (int p = 0; p < window_.size(); ++p) {
    if ((bits_ >> p) & 1U) out[static_cast<std::size_t>(p)] = '1';
  }
  return out;
}

std::optional<LadderResult> apply_ladder(const OccupationConfig& config, int site, bool dagger) {
  const bool bit = config.occupied(site);
  if (bit == dagger) return std::nullopt;
  const int sign = (config.occupied_below(site) % 2 == 0) ? 1 : -1;
  return LadderResult{config.with(site, dagger), sign};
}

FermionMonomial FermionMonomial::written(std::int64_t coefficient, std::vector<Ladder> left_to_right) {
  std::reverse(left_to_right.begin(), left_to_right.end());
  return FermionMonomial(coefficient, std::move(left_to_right));
}

std::vector<Ladder> FermionMonomial::written_factors() const {
  return std::vector<Ladder>(factors_.rbegin(), factors_.rend());
}

bool FermionMonomial::fits(const SiteWindow& window) const {
  return std::all_of(factors_.begin(), factors_.end(), [&](const Ladder& l) { return window.contains(l.site); });
}

std::string FermionMonomial::to_string() const {
  std::string out;
  if (coefficient_ != 1) out = std::to_string(coefficient_);
  for (const Ladder& l : written_factors()) {
    if (!out.empty()) out += ' ';
    out += l.dagger ? "c*" : "c";
    out += std::to_string(l.site);
  }
  return out.empty() ? "1" : out;
}

FermionMonomial adjoint(const FermionMonomial& m) {
  // (l_0 ... l_{m-1})* = l_{m-1}* ... l_0*: the application order becomes the
  // written order of the adjoint.
  std::vector<Ladder> written = m.factors();
  for (Ladder& l : written) l.dagger = !l.dagger;
  return FermionMonomial::written(m.coefficient(), std::move(written));
}

FermionMonomial operator*(const FermionMonomial& a, const FermionMonomial& b) {
  // b acts first.
  std::vector<Ladder> order = b.factors();
  order.insert(order.end(), a.factors().begin(), a.factors().end());
  return FermionMonomial(checked_mul(a.coefficient(), b.coefficient()), std::move(order));
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

OperatorSum adjoint(const OperatorSum& op) {
  OperatorSum out;
  out.terms.reserve(op.terms.size());
  for (const auto& t : op.terms) out.terms.push_back(adjoint(t));
  return out;
}

FockVector FockVector::basis(const OccupationConfig& config, std::int64_t amplitude) {
  FockVector v(config.window());
  v.add(config.bits(), amplitude);
  return v;
}

std::int64_t FockVector::amplitude(BasisIndex index) const {
  auto it = amplitudes_.find(index);
  return it == amplitudes_.end() ? 0 : it->second;
}

void FockVector::add(BasisIndex index, std::int64_t amplitude) {
  if (index >= window_.dimension()) throw std::domain_error("basis index outside window");
  if (amplitude == 0) return;
  auto [it, inserted] = amplitudes_.try_emplace(index, amplitude);
  if (!inserted) {
    it->second = checked_add(it->second, amplitude);
    if (it->second == 0) amplitudes_.erase(it);
  }
}

bool FockVector::is_classical() const {
  return amplitudes_.size() == 1 && (amplitudes_.begin()->second == 1 || amplitudes_.begin()->second == -1);
}

FockVector apply(const FermionMonomial& m, const FockVector& v) {
  if (!m.fits(v.window())) throw std::domain_error("monomial site outside window " + to_string(v.window()));
  FockVector out(v.window());
  if (m.coefficient() == 0) return out;
  for (const auto& [index, amp] : v.amplitudes()) {
    OccupationConfig cfg(v.window(), index);
    int sign = 1;
    bool alive = true;
    for (const Ladder& l : m.factors()) {
      auto r = apply_ladder(cfg, l.site, l.dagger);
      if (!r) {
        alive = false;
        break;
      }
      cfg = r->config;
      sign *= r->sign;
    }
    if (alive) out.add(cfg.bits(), checked_mul(checked_mul(amp, m.coefficient()), sign));
  }
  return out;
}

FockVector apply(const OperatorSum& op, const FockVector& v) {
  FockVector out(v.window());
  for (const auto& term : op.terms) {
    const FockVector image = apply(term, v);
    for (const auto& [index, amp] : image.amplitudes()) out.add(index, amp);
  }
  return out;
}

FermionMonomial number_term(int site) { return FermionMonomial::written(1, {{site, true}, {site, false}}); }

}  // namespace nicolai
