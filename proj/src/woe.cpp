#include "riskarg/woe.hpp"

namespace riskarg {

namespace {

constexpr std::array<std::string_view, 5> kLevelNames{"sufficient", "limited", "inadequate",
                                                      "no_data", "no_evidence"};

constexpr std::array<std::string_view, 5> kCategoryNames{
    "non_carcinogenic", "not_classifiable", "possible", "probable_human_carcinogen",
    "known_human_carcinogen"};

using S = StudyEvidence;

struct Row {
  bool (*matches)(S human, S animal);
  OverallCategory category;
};

// Checked top to bottom; the residual row is NotClassifiable.
constexpr std::array<Row, 5> kTable{{
    {[](S h, S) { return h == S::Sufficient; }, OverallCategory::Known},
    {[](S h, S a) { return a == S::Sufficient && h == S::Limited; },
     OverallCategory::ProbableCarcinogen},
    {[](S h, S a) { return a == S::Sufficient && (h == S::Inadequate || h == S::NoData); },
     OverallCategory::Possible},
    {[](S h, S a) { return h == S::Limited && a != S::Sufficient; }, OverallCategory::Possible},
    {[](S h, S a) { return h == S::NoEvidence && a == S::NoEvidence; },
     OverallCategory::NonCarcinogenic},
}};

}  // namespace

std::string_view to_name(StudyEvidence e) noexcept { return kLevelNames[static_cast<std::size_t>(e)]; }

std::string_view to_name(OverallCategory c) noexcept {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

std::optional<StudyEvidence> study_evidence_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kLevelNames.size(); ++i) {
    if (kLevelNames[i] == name) return static_cast<StudyEvidence>(i);
  }
  return std::nullopt;
}

OverallCategory classify_woe(StudyEvidence human, StudyEvidence animal) noexcept {
  for (const auto& row : kTable) {
    if (row.matches(human, animal)) return row.category;
  }
  return OverallCategory::NotClassifiable;
}

}  // namespace riskarg
