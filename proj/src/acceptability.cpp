#include "riskarg/acceptability.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace riskarg {

namespace {

constexpr std::array<std::string_view, 6> kClassNames{"open",     "supported", "plausible",
                                                      "probable", "confirmed", "certain"};

bool axioms_only(const KnowledgeBase& kb, const Argument& arg) {
  return std::all_of(arg.grounds.item_ids.begin(), arg.grounds.item_ids.end(),
                     [&](const std::string& id) { return kb.item(*kb.find(id)).axiomatic; });
}

// Caches "is there a consistent against-argument for r" across premises.
class OppositionCache {
 public:
  OppositionCache(const KnowledgeBase& kb, const EngineOptions& opts) : kb_(kb), opts_(opts) {}

  bool consistently_opposed(const Proposition& r) {
    if (auto it = cache_.find(r.name()); it != cache_.end()) return it->second;
    bool opposed = false;
    for (const auto& arg : arguments_concerning(kb_, r, opts_)) {
      if (polarity(arg.sign) == Polarity::Against && is_consistent(kb_, arg.grounds)) {
        opposed = true;
        break;
      }
    }
    cache_.emplace(r.name(), opposed);
    return opposed;
  }

 private:
  const KnowledgeBase& kb_;
  const EngineOptions& opts_;
  std::map<std::string, bool, std::less<>> cache_;
};

}  // namespace

std::strong_ordering class_order(EvidenceClass a, EvidenceClass b) noexcept {
  return static_cast<int>(a) <=> static_cast<int>(b);
}

std::string_view to_name(EvidenceClass c) noexcept {
  return kClassNames[static_cast<std::size_t>(c)];
}

std::optional<EvidenceClass> evidence_class_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == name) return static_cast<EvidenceClass>(i);
  }
  return std::nullopt;
}

bool ClassConditions::holds(EvidenceClass c) const noexcept {
  switch (c) {
    case EvidenceClass::Open: return true;
    case EvidenceClass::Supported: return supported;
    case EvidenceClass::Plausible: return plausible;
    case EvidenceClass::Probable: return probable;
    case EvidenceClass::Confirmed: return confirmed;
    case EvidenceClass::Certain: return certain;
  }
  return false;
}

EvidenceClass ClassConditions::highest() const noexcept {
  for (int c = static_cast<int>(EvidenceClass::Certain); c > 0; --c) {
    if (holds(static_cast<EvidenceClass>(c))) return static_cast<EvidenceClass>(c);
  }
  return EvidenceClass::Open;
}

ClassConditions evaluate_conditions(const KnowledgeBase& kb, const Proposition& p,
                                    const ClassifyOptions& opts) {
  ClassConditions out;
  const auto args = arguments_concerning(kb, p, opts.engine);

  std::vector<const Argument*> consistent_for;
  bool consistent_against = false;
  for (const auto& arg : args) {
    const bool consistent = is_consistent(kb, arg.grounds);
    if (polarity(arg.sign) == Polarity::For) {
      out.supported = true;
      if (consistent) consistent_for.push_back(&arg);
    } else if (consistent) {
      consistent_against = true;
    }
  }

  out.plausible = !consistent_for.empty();
  out.probable = out.plausible && !consistent_against;
  if (!out.probable) return out;

  OppositionCache opposition(kb, opts.engine);
  auto clean = [&](const Argument* arg) {
    const auto premises = premises_of(kb, *arg);
    return std::none_of(premises.begin(), premises.end(),
                        [&](const Proposition& r) { return opposition.consistently_opposed(r); });
  };
  out.confirmed = opts.confirmed_mode == ConfirmedMode::Existential
                      ? std::any_of(consistent_for.begin(), consistent_for.end(), clean)
                      : std::all_of(consistent_for.begin(), consistent_for.end(), clean);

  out.certain = out.confirmed && std::any_of(args.begin(), args.end(), [&](const Argument& a) {
                  return a.sign == SignTag::Confirm && axioms_only(kb, a);
                });
  return out;
}

EvidenceClass classify(const KnowledgeBase& kb, const Proposition& p, const ClassifyOptions& opts) {
  return evaluate_conditions(kb, p, opts).highest();
}

}  // namespace riskarg
