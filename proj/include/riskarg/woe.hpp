#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace riskarg {

/// Strength of carcinogenicity evidence from one kind of study.
enum class StudyEvidence : std::uint8_t { Sufficient, Limited, Inadequate, NoData, NoEvidence };

/// Overall weight-of-evidence category, declared weakest first.
enum class OverallCategory : std::uint8_t {
  NonCarcinogenic,
  NotClassifiable,
  Possible,
  ProbableCarcinogen,
  Known,
};

inline constexpr std::array<StudyEvidence, 5> kStudyLevels{
    StudyEvidence::Sufficient, StudyEvidence::Limited, StudyEvidence::Inadequate,
    StudyEvidence::NoData, StudyEvidence::NoEvidence};

std::string_view to_name(StudyEvidence e) noexcept;
std::string_view to_name(OverallCategory c) noexcept;
std::optional<StudyEvidence> study_evidence_from_name(std::string_view name) noexcept;

/// Combines human and animal evidence into an overall category.
OverallCategory classify_woe(StudyEvidence human, StudyEvidence animal) noexcept;

}  // namespace riskarg
