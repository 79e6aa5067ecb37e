#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

#include "riskarg/arguments.hpp"
#include "riskarg/kb.hpp"

namespace riskarg {

/// Qualitative acceptability of a proposition, ordered by decreasing tension
/// between the arguments for and against it.
enum class EvidenceClass : std::uint8_t { Open, Supported, Plausible, Probable, Confirmed, Certain };

std::strong_ordering class_order(EvidenceClass a, EvidenceClass b) noexcept;

std::string_view to_name(EvidenceClass c) noexcept;
std::optional<EvidenceClass> evidence_class_from_name(std::string_view name) noexcept;

/// How the "confirmed" premise check quantifies over supporting arguments.
enum class ConfirmedMode : std::uint8_t {
  Existential,  // one clean consistent supporting argument suffices
  Universal,    // every consistent supporting argument must be clean
};

struct ClassifyOptions {
  ConfirmedMode confirmed_mode = ConfirmedMode::Existential;
  EngineOptions engine;
};

/// The defining condition of each class, evaluated independently.
///
/// `certain` additionally requires `confirmed`, so the conditions always
/// form a chain: certain => confirmed => probable => plausible => supported.
struct ClassConditions {
  bool supported = false;  // some argument for p
  bool plausible = false;  // some consistent argument for p
  bool probable = false;   // ... and no consistent argument against p
  bool confirmed = false;  // ... and no premise of a witness is consistently opposed
  bool certain = false;    // ... and some confirming argument rests on axioms only

  bool holds(EvidenceClass c) const noexcept;
  EvidenceClass highest() const noexcept;
};

ClassConditions evaluate_conditions(const KnowledgeBase& kb, const Proposition& p,
                                    const ClassifyOptions& opts = {});

EvidenceClass classify(const KnowledgeBase& kb, const Proposition& p,
                       const ClassifyOptions& opts = {});

}  // namespace riskarg
