#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskarg {

/// Qualifier attached to a derived proposition: `+`, `-`, `++`, `--`.
/// Declaration order is the canonical sort order used in reports.
enum class SignTag : std::uint8_t { Support, Oppose, Confirm, Exclude };

enum class Polarity : std::uint8_t { For, Against };

constexpr Polarity polarity(SignTag s) noexcept {
  return (s == SignTag::Support || s == SignTag::Confirm) ? Polarity::For : Polarity::Against;
}

constexpr bool is_strong(SignTag s) noexcept {
  return s == SignTag::Confirm || s == SignTag::Exclude;
}

/// True when `a` has the same polarity as `b` and is at least as strong.
constexpr bool dominates(SignTag a, SignTag b) noexcept {
  return polarity(a) == polarity(b) && (is_strong(a) || !is_strong(b));
}

std::string_view to_token(SignTag s) noexcept;
std::string_view to_name(SignTag s) noexcept;
std::optional<SignTag> sign_from_token(std::string_view token) noexcept;
std::optional<SignTag> sign_from_name(std::string_view name) noexcept;

/// A propositional atom; the name matches `[a-z][a-zA-Z0-9_]*`.
class Proposition {
 public:
  explicit Proposition(std::string name);

  static bool is_valid_name(std::string_view name) noexcept;

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Proposition&, const Proposition&) = default;
  friend auto operator<=>(const Proposition&, const Proposition&) = default;

 private:
  std::string name_;
};

enum class ItemKind : std::uint8_t { Fact, Rule };

struct KbItem {
  std::string id;
  ItemKind kind = ItemKind::Fact;
  std::vector<Proposition> antecedents;  // empty iff kind == Fact
  Proposition consequent{"p"};
  SignTag sign = SignTag::Support;
  double weight = 1.0;
  bool axiomatic = false;

  friend bool operator==(const KbItem&, const KbItem&) = default;
};

bool is_valid_item_id(std::string_view id) noexcept;

/// Error raised while building or parsing a knowledge base. `line` and
/// `column` are 1-based; zero means the error has no single source location.
class KbError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,
    DuplicateId,
    WeightRange,
    AxiomWeight,
    SelfLoop,
    Cycle,
    Malformed,
  };

  KbError(Kind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0,
          std::string token = {});

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// Immutable set of facts and rules with derived lookup indexes.
///
/// Construction enforces every item invariant (unique ids, arity by kind,
/// weight range, axiom weight, no self-loops) and rejects cyclic rule
/// graphs. Items keep their insertion order.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<KbItem> items);

  std::span<const KbItem> items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const KbItem& item(std::size_t index) const { return items_.at(index); }

  std::optional<std::size_t> find(std::string_view id) const;

  /// Indexes of the items whose consequent is `p`, in insertion order.
  std::span<const std::size_t> concluding(const Proposition& p) const;

  /// Indexes of the items mentioning `p` as consequent or antecedent.
  std::span<const std::size_t> mentioning(const Proposition& p) const;

  /// Every proposition mentioned anywhere, sorted by name.
  std::vector<Proposition> propositions() const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<KbItem> items_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> concluders_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> mentions_;
};

/// Shortest decimal that round-trips `w` through the parser.
std::string format_weight(double w);

/// Canonical DSL statement for one item, e.g. `rule r1: a & b -> p : + weight 0.6 .`
std::string to_dsl(const KbItem& item);

/// Whole knowledge base, one statement per line.
std::string to_dsl(const KnowledgeBase& kb);

}  // namespace riskarg
