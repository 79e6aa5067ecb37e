#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "riskarg/kb.hpp"

namespace riskarg {

/// Parses knowledge-base source text.
///
///     fact <id>: <prop> : <sign> [weight <w>] [axiom] .
///     rule <id>: <prop> { & <prop> } -> <prop> : <sign> [weight <w>] [axiom] .
///
/// `#` starts a comment running to end of line. A fact may omit its id
/// (`fact ames_positive : + .`), in which case the proposition name is used.
/// Throws KbError carrying the 1-based line/column and offending token.
KnowledgeBase parse_kb(std::string_view source);

struct KbWarning {
  enum class Kind {
    UnderivableAntecedent,  // used as an antecedent, concluded by nothing
    UnusableAntecedent,     // used as an antecedent, concluded only by against-items
    DuplicateFact,          // same content as an earlier fact under another id
  };

  Kind kind;
  std::string subject;  // proposition name or item id the warning is about
  std::string message;

  friend bool operator==(const KbWarning&, const KbWarning&) = default;
};

std::vector<KbWarning> validate_kb(const KnowledgeBase& kb);

}  // namespace riskarg
