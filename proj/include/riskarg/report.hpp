#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riskarg/acceptability.hpp"
#include "riskarg/cases.hpp"
#include "riskarg/kb.hpp"

namespace riskarg {

/// One item of an argument's derivation, in pre-order from the concluding
/// item. `depth` is the distance from the conclusion.
struct GroundLine {
  std::string id;
  std::string statement;
  std::size_t depth = 0;

  friend bool operator==(const GroundLine&, const GroundLine&) = default;
};

struct RenderedArgument {
  SignTag sign = SignTag::Support;
  double weight = 1.0;  // rounded to 12 significant digits
  std::vector<GroundLine> grounds;

  friend bool operator==(const RenderedArgument&, const RenderedArgument&) = default;
};

struct ContradictionSummary {
  std::string prop;
  std::vector<std::string> confirming;  // grounds ids
  std::vector<std::string> excluding;

  friend bool operator==(const ContradictionSummary&, const ContradictionSummary&) = default;
};

struct RiskReport {
  Proposition prop{"p"};
  EvidenceClass evidence_class = EvidenceClass::Open;
  CasePattern pattern = CasePattern::OpenPattern;
  std::string term;            // lexicon term for the pattern
  std::string qualified_term;  // term with the dominance qualifier, if any
  DominanceVerdict verdict = DominanceVerdict::Balanced;
  AggregationPolicy policy = AggregationPolicy::Count;
  double for_aggregate = 0.0;  // rounded to 12 significant digits
  double against_aggregate = 0.0;
  std::vector<RenderedArgument> for_args;
  std::vector<RenderedArgument> against_args;
  std::vector<ContradictionSummary> contradictions;
  std::string kb_digest;  // lowercase hex SHA-256 of the KB source bytes

  friend bool operator==(const RiskReport&, const RiskReport&) = default;
};

/// Missing or unreadable input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view bytes);

/// Rounds to 12 significant decimal digits.
double round_significant(double x);

/// Full pipeline over in-memory inputs. `kb_source` is hashed as given.
RiskReport build_report(std::string_view kb_source, const Proposition& prop,
                        AggregationPolicy policy, const Lexicon& lexicon,
                        const ClassifyOptions& opts = {});

/// Loads the KB (and optional lexicon) from disk and builds the report.
/// Lexicon fallback warnings are appended to `warnings` when given.
RiskReport run_query(const std::filesystem::path& kb_path, std::string_view prop_name,
                     AggregationPolicy policy,
                     const std::optional<std::filesystem::path>& lexicon_path,
                     std::vector<std::string>* warnings = nullptr,
                     const ClassifyOptions& opts = {});

std::string read_file(const std::filesystem::path& path);

/// Line-oriented human-readable report.
std::string render_text(const RiskReport& report);

/// JSON report with a fixed key order (see docs/report-schema.md).
std::string render_structured(const RiskReport& report);

/// Inverse of render_structured. Throws std::invalid_argument on malformed input.
RiskReport parse_structured(std::string_view json_text);

}  // namespace riskarg
