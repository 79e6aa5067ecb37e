#include "riskarg/cases.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace riskarg {

namespace {

constexpr std::array<std::string_view, 3> kPolicyNames{"count", "sum", "max"};

constexpr std::array<std::string_view, kCasePatternCount> kPatternNames{
    "contradictory",  "confirmed_but_opposed", "supported_but_excluded",
    "equivocal",      "confirmed_clean",       "supported_clean",
    "excluded_clean", "opposed_clean",         "open_pattern"};

constexpr std::array<std::string_view, kCasePatternCount> kDefaultTerms{
    "contradictory", "contested confirmation", "discounted", "equivocal", "confirmed",
    "supported",     "excluded",               "doubted",    "open"};

constexpr std::array<std::string_view, 3> kVerdictNames{"for_dominates", "against_dominates",
                                                        "balanced"};

constexpr std::array<std::string_view, 3> kDefaultSuffixes{"on balance supported",
                                                           "on balance opposed", ""};

template <class E, std::size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<E>(i);
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_sign(std::span<const Argument> args, SignTag s) {
  return std::any_of(args.begin(), args.end(), [s](const Argument& a) { return a.sign == s; });
}

}  // namespace

std::string_view to_name(AggregationPolicy p) noexcept { return kPolicyNames[static_cast<std::size_t>(p)]; }
std::string_view to_name(CasePattern p) noexcept { return kPatternNames[static_cast<std::size_t>(p)]; }
std::string_view to_name(DominanceVerdict v) noexcept { return kVerdictNames[static_cast<std::size_t>(v)]; }

std::optional<AggregationPolicy> policy_from_name(std::string_view name) noexcept {
  return lookup<AggregationPolicy>(kPolicyNames, name);
}
std::optional<CasePattern> pattern_from_name(std::string_view name) noexcept {
  return lookup<CasePattern>(kPatternNames, name);
}
std::optional<DominanceVerdict> verdict_from_name(std::string_view name) noexcept {
  return lookup<DominanceVerdict>(kVerdictNames, name);
}

Case build_case(const KnowledgeBase& kb, const Proposition& p, const EngineOptions& opts) {
  Case c{p, {}, {}};
  for (auto& arg : arguments_concerning(kb, p, opts)) {
    (polarity(arg.sign) == Polarity::For ? c.for_args : c.against_args).push_back(std::move(arg));
  }
  return c;
}

double aggregate(std::span<const Argument> side, AggregationPolicy policy) {
  switch (policy) {
    case AggregationPolicy::Count:
      return static_cast<double>(side.size());
    case AggregationPolicy::Sum:
      return std::accumulate(side.begin(), side.end(), 0.0,
                             [](double acc, const Argument& a) { return acc + a.weight; });
    case AggregationPolicy::Max: {
      double best = 0.0;
      for (const auto& a : side) best = std::max(best, a.weight);
      return best;
    }
  }
  return 0.0;
}

DominanceVerdict dominance(const Case& c, AggregationPolicy policy) {
  if (policy == AggregationPolicy::Count) {
    if (c.for_args.size() == c.against_args.size()) return DominanceVerdict::Balanced;
    return c.for_args.size() > c.against_args.size() ? DominanceVerdict::ForDominates
                                                     : DominanceVerdict::AgainstDominates;
  }
  const double pro = aggregate(c.for_args, policy);
  const double con = aggregate(c.against_args, policy);
  if (std::abs(pro - con) <= kBalanceTolerance) return DominanceVerdict::Balanced;
  return pro > con ? DominanceVerdict::ForDominates : DominanceVerdict::AgainstDominates;
}

CasePattern match_pattern(const Case& c) {
  const bool confirm = has_sign(c.for_args, SignTag::Confirm);
  const bool exclude = has_sign(c.against_args, SignTag::Exclude);
  const bool any_for = !c.for_args.empty();
  const bool any_against = !c.against_args.empty();

  if (confirm && exclude) return CasePattern::Contradictory;
  if (confirm && any_against) return CasePattern::ConfirmedButOpposed;
  if (any_for && exclude) return CasePattern::SupportedButExcluded;
  if (any_for && any_against) return CasePattern::Equivocal;
  if (confirm) return CasePattern::ConfirmedClean;
  if (any_for) return CasePattern::SupportedClean;
  if (exclude) return CasePattern::ExcludedClean;
  if (any_against) return CasePattern::OpposedClean;
  return CasePattern::OpenPattern;
}

Lexicon::Lexicon() {
  for (std::size_t i = 0; i < kCasePatternCount; ++i) terms_[i] = kDefaultTerms[i];
  for (std::size_t i = 0; i < suffixes_.size(); ++i) suffixes_[i] = kDefaultSuffixes[i];
}

void Lexicon::set_term(CasePattern p, std::string term) {
  if (term.empty()) throw std::invalid_argument("empty term for pattern " + std::string(to_name(p)));
  terms_[static_cast<std::size_t>(p)] = std::move(term);
}

void Lexicon::set_suffix(DominanceVerdict v, std::string suffix) {
  suffixes_[static_cast<std::size_t>(v)] = std::move(suffix);
}

Lexicon Lexicon::parse(std::string_view text, std::vector<std::string>* warnings) {
  Lexicon lex;
  std::array<bool, kCasePatternCount> seen{};
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    // '#' starts a comment unless it sits inside the quoted term.
    for (std::size_t i = 0, in_quote = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_quote ^= 1;
      if (line[i] == '#' && !in_quote) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("lexicon line " + std::to_string(line_no) + ": " + what);
    };

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = \"term\"");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
      fail("term must be a double-quoted string");
    }
    std::string term(value.substr(1, value.size() - 2));

    if (key.starts_with("suffix.")) {
      auto v = verdict_from_name(key.substr(7));
      if (!v) fail("unknown verdict '" + std::string(key.substr(7)) + "'");
      lex.set_suffix(*v, std::move(term));
    } else if (auto p = pattern_from_name(key)) {
      if (term.empty()) fail("empty term for '" + std::string(key) + "'");
      lex.set_term(*p, std::move(term));
      seen[static_cast<std::size_t>(*p)] = true;
    } else {
      fail("unknown pattern '" + std::string(key) + "'");
    }
  }

  if (warnings) {
    for (std::size_t i = 0; i < kCasePatternCount; ++i) {
      if (!seen[i]) {
        warnings->push_back("lexicon does not set '" + std::string(kPatternNames[i]) +
                            "'; using default \"" + std::string(kDefaultTerms[i]) + "\"");
      }
    }
  }
  return lex;
}

std::string linguistic_term(CasePattern pattern, DominanceVerdict verdict, const Lexicon& lexicon) {
  std::string out = lexicon.term(pattern);
  if (pattern == CasePattern::Equivocal && !lexicon.suffix(verdict).empty()) {
    out += ", ";
    out += lexicon.suffix(verdict);
  }
  return out;
}

}  // namespace riskarg
