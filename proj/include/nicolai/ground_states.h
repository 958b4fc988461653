#pragma once

// Classical supersymmetric ground states: the forbidden-triplet criterion,
// open/close-edge tests on finite intervals, transfer-matrix counting and
// charge words that generate every ground configuration from a reference
// vector.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nicolai/charges.h"
#include "nicolai/fock.h"
#include "nicolai/model.h"

namespace nicolai {

/// No triplet {2i-1, 2i, 2i+1} inside the window reads 0,1,0 or 1,0,1.
bool is_ground_config(const OccupationConfig& g);

/// g lives on I_{k,l}, is a ground configuration and is constant on both
/// two-site edges.
bool is_open_boundary_ground_config(const OccupationConfig& g, const Interval& interval);

/// All ground configurations on I_{k,l} with constant two-site edges, in
/// lexicographic bitstring order.
std::vector<OccupationConfig> enumerate_upsilon_hat(int k, int l);

using BigInt = boost::multiprecision::cpp_int;
using TransferMatrix = std::array<std::array<BigInt, 4>, 4>;

/// Pair-state transfer matrix; rows and columns ordered 00, 01, 10, 11.
TransferMatrix transfer_matrix();
TransferMatrix transfer_power(unsigned exponent);

/// Number of open-boundary ground configurations on I_{0,n}: the sum of the
/// (1,1),(1,4),(2,1),(2,4),(3,1),(3,4),(4,1),(4,4) entries of T^{n-1}.
BigInt count_transfer(int n);

/// ψ on I_{k,l} is open-edge supersymmetric iff every extension by the two
/// padding sites of J_{k,l} is annihilated by Q[k,l] and Q[k,l]*.
bool is_open_edge_susy_vector(const FockVector& psi, int k, int l);

/// ψ on I_{k,l} is annihilated by Q[k+1,l-1] and its adjoint.
/// Throws std::domain_error unless k + 1 < l.
bool is_close_edge_susy_vector(const FockVector& psi, int k, int l);

/// Config-level action of Q(f) (or Q(f)* when `use_adjoint`) with its exact
/// Jordan-Wigner sign, computed in closed form rather than by stepping
/// through ladder operators.
std::optional<LadderResult> charge_action_on_config(const ConservationSequence& f, const OccupationConfig& g,
                                                    bool use_adjoint);

enum class StartVector { fock, occupied };

std::string to_string(StartVector start);
StartVector parse_start_vector(const std::string& text);

struct WordStep {
  ConservationSequence sequence;
  bool use_adjoint;

  bool operator==(const WordStep&) const = default;
};

/// steps[0] acts first. Replaying the steps on the start vector of I_{k,l}
/// yields predicted_sign * |target>.
struct GenerationWord {
  Interval interval;
  StartVector start;
  std::vector<WordStep> steps;
  OccupationConfig target;
  int predicted_sign;
};

/// Raised when a ground configuration cannot be reached at all.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OccupationConfig start_config(const Interval& interval, StartVector start);

/// Shortest word (breadth-first, moves ordered by enumerate_union and then
/// Q(f) before Q(f)*) mapping the start vector of I_{k,l} to ± target.
/// Throws std::domain_error if target is not in Upsilon-hat(k,l) and
/// GenerationFailure if it is unreachable.
GenerationWord generate_word(const OccupationConfig& target, StartVector start, int k, int l);

/// generate_word for every member of Upsilon-hat(k,l) from one search.
std::vector<GenerationWord> generate_all_words(StartVector start, int k, int l);

/// Applies the word with apply() on Fock vectors; returns the final vector.
FockVector replay_word(const GenerationWord& word);
/// replay_word(word) == predicted_sign * |target>.
bool replay_matches(const GenerationWord& word);

/// Each step f -> -f, start swapped, target complemented; the sign is
/// recomputed by replay.
GenerationWord particle_hole_dual(const GenerationWord& word);

struct Extension {
  Interval interval;
  OccupationConfig config;
};

/// Smallest I_{k,l} covering the sites of `partial` (ties toward smaller k)
/// together with the first member of Upsilon-hat(k,l) agreeing with it.
/// Throws std::domain_error if `partial` already has a forbidden triplet.
Extension extend_to_interval(const std::map<int, int>& partial);

}  // namespace nicolai
