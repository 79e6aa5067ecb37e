#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "riskarg/kb.hpp"

namespace riskarg {

/// Ids of the knowledge-base items used by a derivation, sorted.
struct Grounds {
  std::vector<std::string> item_ids;

  friend bool operator==(const Grounds&, const Grounds&) = default;
  friend auto operator<=>(const Grounds&, const Grounds&) = default;
};

/// A subset-minimal derivation of `conclusion` with sign `sign`.
/// `weight` is the product of the weights of the grounds.
struct Argument {
  Grounds grounds;
  Proposition conclusion;
  SignTag sign;
  double weight = 1.0;

  friend bool operator==(const Argument&, const Argument&) = default;
};

/// Canonical argument order: conclusion, then sign, then grounds.
bool canonical_less(const Argument& a, const Argument& b);

/// One proposition that is derivable both as confirmed and as excluded.
struct ContradictionWitness {
  Proposition prop;
  Argument confirming;
  Argument excluding;

  friend bool operator==(const ContradictionWitness&, const ContradictionWitness&) = default;
};

struct EngineOptions {
  /// Upper bound on the number of arguments (and intermediate partial
  /// derivations) held for any single proposition.
  std::size_t max_arguments = 10'000;
};

class ArgumentCapExceeded : public std::runtime_error {
 public:
  ArgumentCapExceeded(const std::string& prop, std::size_t cap);
};

/// Weakest-link chaining: a strong rule sign survives only when every
/// antecedent was itself confirmed. Throws std::invalid_argument if an
/// antecedent sign has against-polarity.
SignTag propagate_sign(SignTag rule_sign, std::span<const SignTag> antecedent_signs);

/// All arguments for `p` (any sign), canonically ordered.
std::vector<Argument> arguments_concerning(const KnowledgeBase& kb, const Proposition& p,
                                           const EngineOptions& opts = {});

/// The signs with which at least one argument for `p` exists.
std::set<SignTag> derive_signs(const KnowledgeBase& kb, const Proposition& p,
                               const EngineOptions& opts = {});

/// False iff the grounds alone derive some proposition both `++` and `--`.
/// Throws std::invalid_argument if an id is not in `kb`.
bool is_consistent(const KnowledgeBase& kb, const Grounds& grounds);

/// One witness per contradictory proposition, ordered by proposition.
std::vector<ContradictionWitness> find_contradictions(const KnowledgeBase& kb,
                                                      const EngineOptions& opts = {});

/// Propositions used as rule antecedents anywhere in the argument's
/// derivation, excluding the conclusion itself. Sorted, unique.
std::vector<Proposition> premises_of(const KnowledgeBase& kb, const Argument& arg);

}  // namespace riskarg
