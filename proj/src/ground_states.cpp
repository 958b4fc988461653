#include "nicolai/ground_states.h"

#include <bit>
#include <deque>
#include <iostream>
#include <limits>

namespace nicolai {

namespace {

bool forbidden_triplet(bool left, bool centre, bool right) { return left == right && centre != left; }

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
int ceil_div2(int x) { return -floor_div2(-x); }

void require_inner_window(const SiteWindow& w, const Interval& interval) {
  if (!(w == interval.inner())) {
    throw std::domain_error("expected a vector on " + to_string(interval.inner()) + ", got " + to_string(w));
  }
}

void extend_ground(const Interval& interval, std::string& prefix, std::vector<OccupationConfig>& out) {
  const auto size = static_cast<std::size_t>(interval.inner().size());
  const std::size_t p = prefix.size();
  if (p == size) {
    if (prefix[size - 2] == prefix[size - 1]) out.push_back(OccupationConfig::parse(interval.inner(), prefix));
    return;
  }
  for (char bit : {'0', '1'}) {
    if (p == 1 && bit != prefix[0]) continue;
    // Odd positions close a triplet centred on an even site.
    if (p >= 3 && p % 2 == 1 && forbidden_triplet(prefix[p - 2] == '1', prefix[p - 1] == '1', bit == '1')) continue;
    prefix.push_back(bit);
    extend_ground(interval, prefix, out);
    prefix.pop_back();
  }
}

struct Move {
  std::size_t sequence;
  bool use_adjoint;
  BasisIndex support;
  BasisIndex required;  // bits that must be set inside `support`
};

struct SearchTree {
  Interval interval;
  StartVector start;
  std::vector<ConservationSequence> sequences;
  std::vector<Move> moves;
  // Per configuration: depth (or max) and the move/parent that reached it.
  std::vector<int> depth;
  std::vector<BasisIndex> parent;
  std::vector<std::size_t> via;
};

SearchTree breadth_first(const Interval& interval, StartVector start, std::optional<BasisIndex> stop_at) {
  const SiteWindow window = interval.inner();
  SearchTree tree{interval, start, enumerate_union(interval.k(), interval.l()), {}, {}, {}, {}};
  for (std::size_t s = 0; s < tree.sequences.size(); ++s) {
    const auto& f = tree.sequences[s];
    BasisIndex support = 0, plus = 0, minus = 0;
    for (int site = f.interval().inner().lo(); site <= f.interval().inner().hi(); ++site) {
      support |= window.mask(site);
      (f.value(site) > 0 ? plus : minus) |= window.mask(site);
    }
    // Q(f) creates on + sites and annihilates on - sites; Q(f)* the reverse.
    tree.moves.push_back({s, false, support, minus});
    tree.moves.push_back({s, true, support, plus});
  }

  const BasisIndex dim = window.dimension();
  tree.depth.assign(dim, std::numeric_limits<int>::max());
  tree.parent.assign(dim, 0);
  tree.via.assign(dim, 0);
  const BasisIndex root = start_config(interval, start).bits();
  tree.depth[root] = 0;
  std::deque<BasisIndex> frontier{root};
  while (!frontier.empty()) {
    const BasisIndex g = frontier.front();
    frontier.pop_front();
    if (stop_at && g == *stop_at) break;
    for (std::size_t m = 0; m < tree.moves.size(); ++m) {
      const Move& mv = tree.moves[m];
      if ((g & mv.support) != mv.required) continue;
      const BasisIndex h = g ^ mv.support;
      if (tree.depth[h] != std::numeric_limits<int>::max()) continue;
      tree.depth[h] = tree.depth[g] + 1;
      tree.parent[h] = g;
      tree.via[h] = m;
      frontier.push_back(h);
    }
  }
  return tree;
}

GenerationWord extract_word(const SearchTree& tree, const OccupationConfig& target) {
  const BasisIndex t = target.bits();
  if (tree.depth[t] == std::numeric_limits<int>::max()) {
    throw GenerationFailure("ground configuration " + target.to_string() + " is unreachable from the " +
                            to_string(tree.start) + " vector on I(" + std::to_string(tree.interval.k()) + "," +
                            std::to_string(tree.interval.l()) + ")");
  }
  const int cap = 2 * tree.interval.length() + 2;
  if (tree.depth[t] > cap) {
    std::clog << "warning: word for " << target.to_string() << " has length " << tree.depth[t]
              << ", above the depth cap " << cap << "; cap raised\n";
  }
  std::vector<WordStep> reversed;
  for (BasisIndex g = t; tree.depth[g] > 0; g = tree.parent[g]) {
    const Move& mv = tree.moves[tree.via[g]];
    reversed.push_back({tree.sequences[mv.sequence], mv.use_adjoint});
  }
  GenerationWord word{tree.interval, tree.start, {reversed.rbegin(), reversed.rend()}, target, 1};
  OccupationConfig cfg = start_config(tree.interval, tree.start);
  for (const auto& step : word.steps) {
    auto r = charge_action_on_config(step.sequence, cfg, step.use_adjoint);
    if (!r) throw std::logic_error("search tree edge does not act on its parent configuration");
    cfg = r->config;
    word.predicted_sign *= r->sign;
  }
  return word;
}

}  // namespace

bool is_ground_config(const OccupationConfig& g) {
  const SiteWindow& w = g.window();
  for (int c = w.lo() + 1; c + 1 <= w.hi(); ++c) {
    if (c % 2 != 0) continue;
    if (forbidden_triplet(g.occupied(c - 1), g.occupied(c), g.occupied(c + 1))) return false;
  }
  return true;
}

bool is_open_boundary_ground_config(const OccupationConfig& g, const Interval& interval) {
  if (!(g.window() == interval.inner())) return false;
  const int lo = interval.inner().lo(), hi = interval.inner().hi();
  return is_ground_config(g) && g.occupied(lo) == g.occupied(lo + 1) && g.occupied(hi - 1) == g.occupied(hi);
}

std::vector<OccupationConfig> enumerate_upsilon_hat(int k, int l) {
  const Interval interval(k, l);
  std::vector<OccupationConfig> out;
  std::string prefix;
  extend_ground(interval, prefix, out);
  return out;
}

TransferMatrix transfer_matrix() {
  TransferMatrix t;
  const int rows[4][4] = {{1, 1, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t[i][j] = rows[i][j];
  }
  return t;
}

TransferMatrix transfer_power(unsigned exponent) {
  TransferMatrix result;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) result[i][j] = (i == j) ? 1 : 0;
  }
  TransferMatrix base = transfer_matrix();
  auto multiply = [](const TransferMatrix& a, const TransferMatrix& b) {
    TransferMatrix c;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        BigInt s = 0;
        for (int m = 0; m < 4; ++m) s += a[i][m] * b[m][j];
        c[i][j] = s;
      }
    }
    return c;
  };
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1U) result = multiply(result, base);
    base = multiply(base, base);
  }
  return result;
}

BigInt count_transfer(int n) {
  if (n < 1) throw std::domain_error("count requires n >= 1");
  const TransferMatrix p = transfer_power(static_cast<unsigned>(n - 1));
  BigInt total = 0;
  for (int row = 0; row < 4; ++row) total += p[row][0] + p[row][3];
  return total;
}

bool is_open_edge_susy_vector(const FockVector& psi, int k, int l) {
  const Interval interval(k, l);
  require_inner_window(psi.window(), interval);
  const SiteWindow padded = interval.padded();
  const OperatorSum q = supercharge_sum(k, l);
  const OperatorSum qd = adjoint(q);
  const BasisIndex right_edge = padded.mask(padded.hi());
  for (BasisIndex edges : {BasisIndex{0}, BasisIndex{1}, right_edge, right_edge | 1U}) {
    FockVector embedded(padded);
    for (const auto& [index, amp] : psi.amplitudes()) embedded.add((index << 1) | edges, amp);
    if (!apply(q, embedded).is_zero() || !apply(qd, embedded).is_zero()) return false;
  }
  return true;
}

bool is_close_edge_susy_vector(const FockVector& psi, int k, int l) {
  const Interval interval(k, l);
  if (k + 1 >= l) throw std::domain_error("close-edge test needs k + 1 < l");
  require_inner_window(psi.window(), interval);
  const OperatorSum q = supercharge_sum(k + 1, l - 1);
  return apply(q, psi).is_zero() && apply(adjoint(q), psi).is_zero();
}

std::optional<LadderResult> charge_action_on_config(const ConservationSequence& f, const OccupationConfig& g,
                                                    bool use_adjoint) {
  const SiteWindow support = f.interval().inner();
  if (!g.window().contains(support)) {
    throw std::domain_error("sequence support " + to_string(support) + " outside " + to_string(g.window()));
  }
  BasisIndex flip = 0;
  for (int site = support.lo(); site <= support.hi(); ++site) {
    // Q(f) creates where f = +1; Q(f)* annihilates there.
    const bool creates = (f.value(site) > 0) != use_adjoint;
    if (g.occupied(site) == creates) return std::nullopt;
    flip |= g.window().mask(site);
  }
  const OccupationConfig h(g.window(), g.bits() ^ flip);
  // Q(f) acts from the highest site down, so every ladder sees the original
  // occupations to its left; Q(f)* acts upwards and sees the final ones.
  const OccupationConfig& seen = use_adjoint ? h : g;
  int exponent = 0;
  for (int site = support.lo(); site <= support.hi(); ++site) exponent += seen.occupied_below(site);
  return LadderResult{h, exponent % 2 == 0 ? 1 : -1};
}

std::string to_string(StartVector start) { return start == StartVector::fock ? "fock" : "occupied"; }

StartVector parse_start_vector(const std::string& text) {
  if (text == "fock") return StartVector::fock;
  if (text == "occupied") return StartVector::occupied;
  throw std::domain_error("start vector must be 'fock' or 'occupied'");
}

OccupationConfig start_config(const Interval& interval, StartVector start) {
  return start == StartVector::fock ? OccupationConfig::empty(interval.inner())
                                    : OccupationConfig::filled(interval.inner());
}

GenerationWord generate_word(const OccupationConfig& target, StartVector start, int k, int l) {
  const Interval interval(k, l);
  if (!is_open_boundary_ground_config(target, interval)) {
    throw std::domain_error(target.to_string() + " is not an open-boundary ground configuration on " +
                            to_string(interval.inner()));
  }
  return extract_word(breadth_first(interval, start, target.bits()), target);
}

std::vector<GenerationWord> generate_all_words(StartVector start, int k, int l) {
  const Interval interval(k, l);
  const SearchTree tree = breadth_first(interval, start, std::nullopt);
  std::vector<GenerationWord> out;
  for (const auto& target : enumerate_upsilon_hat(k, l)) out.push_back(extract_word(tree, target));
  return out;
}

FockVector replay_word(const GenerationWord& word) {
  FockVector v = FockVector::basis(start_config(word.interval, word.start));
  for (const auto& step : word.steps) {
    if (!word.interval.inner().contains(step.sequence.interval().inner())) {
      throw std::domain_error("word step outside the generating interval");
    }
    const FermionMonomial q = build_charge(step.sequence).monomial;
    v = apply(step.use_adjoint ? adjoint(q) : q, v);
  }
  return v;
}

bool replay_matches(const GenerationWord& word) {
  return replay_word(word) == FockVector::basis(word.target, word.predicted_sign);
}

GenerationWord particle_hole_dual(const GenerationWord& word) {
  GenerationWord dual{word.interval, word.start == StartVector::fock ? StartVector::occupied : StartVector::fock, {},
                      word.target.complement(), 1};
  OccupationConfig cfg = start_config(dual.interval, dual.start);
  for (const auto& step : word.steps) {
    dual.steps.push_back({negate(step.sequence), step.use_adjoint});
    auto r = charge_action_on_config(dual.steps.back().sequence, cfg, step.use_adjoint);
    if (!r) throw std::logic_error("negated word does not act on the complemented configuration");
    cfg = r->config;
    dual.predicted_sign *= r->sign;
  }
  return dual;
}

Extension extend_to_interval(const std::map<int, int>& partial) {
  if (partial.empty()) throw std::domain_error("partial configuration is empty");
  for (const auto& [site, bit] : partial) {
    if (bit != 0 && bit != 1) throw std::domain_error("partial configuration values must be 0 or 1");
    if (site % 2 != 0) continue;
    auto l = partial.find(site - 1), r = partial.find(site + 1);
    if (l != partial.end() && r != partial.end() && forbidden_triplet(l->second, bit, r->second)) {
      throw std::domain_error("partial configuration contains a forbidden triplet at " + std::to_string(site));
    }
  }
  const int lo = partial.begin()->first, hi = partial.rbegin()->first;
  const int k_max = floor_div2(lo), l_min = ceil_div2(hi);
  const int shortest = std::max(1, l_min - k_max);
  for (int length = shortest; length <= shortest + 4; ++length) {
    for (int k = l_min - length; k <= k_max; ++k) {
      for (const auto& g : enumerate_upsilon_hat(k, k + length)) {
        bool agrees = true;
        for (const auto& [site, bit] : partial) agrees = agrees && g.occupied(site) == (bit == 1);
        if (agrees) return Extension{Interval(k, k + length), g};
      }
    }
  }
  throw std::runtime_error("no open-boundary extension found");
}

}  // namespace nicolai
