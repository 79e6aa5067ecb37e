#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riskarg/arguments.hpp"
#include "riskarg/kb.hpp"

namespace riskarg {

/// Every argument concerning one proposition, split by polarity.
struct Case {
  Proposition prop;
  std::vector<Argument> for_args;
  std::vector<Argument> against_args;

  friend bool operator==(const Case&, const Case&) = default;
};

enum class AggregationPolicy : std::uint8_t { Count, Sum, Max };

/// Case shapes, listed in matching priority (most severe conflict first).
enum class CasePattern : std::uint8_t {
  Contradictory,
  ConfirmedButOpposed,
  SupportedButExcluded,
  Equivocal,
  ConfirmedClean,
  SupportedClean,
  ExcludedClean,
  OpposedClean,
  OpenPattern,
};

inline constexpr std::size_t kCasePatternCount = 9;

enum class DominanceVerdict : std::uint8_t { ForDominates, AgainstDominates, Balanced };

std::string_view to_name(AggregationPolicy p) noexcept;
std::string_view to_name(CasePattern p) noexcept;
std::string_view to_name(DominanceVerdict v) noexcept;
std::optional<AggregationPolicy> policy_from_name(std::string_view name) noexcept;
std::optional<CasePattern> pattern_from_name(std::string_view name) noexcept;
std::optional<DominanceVerdict> verdict_from_name(std::string_view name) noexcept;

Case build_case(const KnowledgeBase& kb, const Proposition& p, const EngineOptions& opts = {});

/// Head count, weight sum or weight maximum; zero for an empty side.
double aggregate(std::span<const Argument> side, AggregationPolicy policy);

/// Absolute tolerance for treating SUM/MAX aggregates as tied.
inline constexpr double kBalanceTolerance = 1e-9;

DominanceVerdict dominance(const Case& c, AggregationPolicy policy);

CasePattern match_pattern(const Case& c);

/// Maps case patterns (and, for equivocal cases, the dominance verdict) to
/// report wording.
class Lexicon {
 public:
  /// Built-in wording.
  Lexicon();

  /// Parses `pattern_name = "term"` lines. Keys are pattern names or
  /// `suffix.<verdict>`; `#` starts a comment. Unknown keys throw
  /// std::invalid_argument. Patterns left unset keep the default term and
  /// are reported through `warnings`.
  static Lexicon parse(std::string_view text, std::vector<std::string>* warnings = nullptr);

  const std::string& term(CasePattern p) const { return terms_[static_cast<std::size_t>(p)]; }
  const std::string& suffix(DominanceVerdict v) const {
    return suffixes_[static_cast<std::size_t>(v)];
  }

  void set_term(CasePattern p, std::string term);
  void set_suffix(DominanceVerdict v, std::string suffix);

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::array<std::string, kCasePatternCount> terms_;
  std::array<std::string, 3> suffixes_;
};

/// Lexicon term for `pattern`; equivocal cases get `", " + suffix` when the
/// verdict's suffix is non-empty.
std::string linguistic_term(CasePattern pattern, DominanceVerdict verdict, const Lexicon& lexicon);

}  // namespace riskarg
