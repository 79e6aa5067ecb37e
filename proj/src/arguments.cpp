#include "riskarg/arguments.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

namespace riskarg {

namespace {

using ItemSet = std::vector<std::uint32_t>;  // sorted item indexes

struct Derivation {
  ItemSet items;
  SignTag sign;
};

bool proper_subset(const ItemSet& a, const ItemSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ItemSet merge(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Drops exact duplicates and every entry `b` for which some other entry `a`
// has a strictly smaller item set and `stronger(a, b)`.
template <class T, class Stronger>
void keep_minimal(std::vector<T>& xs, Stronger stronger) {
  std::sort(xs.begin(), xs.end(), [](const T& a, const T& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
  });
  std::vector<T> kept;
  for (auto& x : xs) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.items == x.items ? stronger(k, x) : (proper_subset(k.items, x.items) && stronger(k, x))) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(x));
  }
  xs = std::move(kept);
}

// Backward chaining over the (acyclic) rule graph, memoised per proposition.
// The derivations kept for a proposition are exactly its subset-minimal
// grounds within each (polarity, strength) class.
class Deriver {
 public:
  Deriver(const KnowledgeBase& kb, std::vector<bool> allowed, std::size_t cap)
      : kb_(kb), allowed_(std::move(allowed)), cap_(cap) {}

  const std::vector<Derivation>& derivations(const Proposition& p) {
    if (auto it = memo_.find(p.name()); it != memo_.end()) return it->second;

    std::vector<Derivation> found;
    for (std::size_t idx : kb_.concluding(p)) {
      if (!allowed_[idx]) continue;
      const KbItem& item = kb_.item(idx);
      const auto self = static_cast<std::uint32_t>(idx);
      if (item.kind == ItemKind::Fact) {
        found.push_back({{self}, item.sign});
        continue;
      }
      for (auto& partial : combine(item, self, p)) {
        const SignTag ante = partial.strong ? SignTag::Confirm : SignTag::Support;
        found.push_back({std::move(partial.items), propagate_sign(item.sign, std::span(&ante, 1))});
      }
    }

    keep_minimal(found, [](const Derivation& a, const Derivation& b) { return dominates(a.sign, b.sign); });
    if (found.size() > cap_) throw ArgumentCapExceeded(p.name(), cap_);
    return memo_.emplace(p.name(), std::move(found)).first->second;
  }

 private:
  struct Partial {
    ItemSet items;
    bool strong;  // every antecedent so far was confirmed
  };

  std::vector<Partial> combine(const KbItem& rule, std::uint32_t self, const Proposition& head) {
    std::vector<Partial> partials{{{self}, true}};
    for (const auto& ante : rule.antecedents) {
      std::vector<Partial> next;
      for (const auto& d : derivations(ante)) {
        if (polarity(d.sign) != Polarity::For) continue;
        for (const auto& part : partials) {
          next.push_back({merge(part.items, d.items), part.strong && d.sign == SignTag::Confirm});
        }
      }
      keep_minimal(next, [](const Partial& a, const Partial& b) { return a.strong || !b.strong; });
      if (next.size() > cap_) throw ArgumentCapExceeded(head.name(), cap_);
      partials = std::move(next);
      if (partials.empty()) break;
    }
    return partials;
  }

  const KnowledgeBase& kb_;
  std::vector<bool> allowed_;
  std::size_t cap_;
  std::map<std::string, std::vector<Derivation>, std::less<>> memo_;
};

Argument to_argument(const KnowledgeBase& kb, const Proposition& p, const Derivation& d) {
  Argument arg{{}, p, d.sign, 1.0};
  arg.grounds.item_ids.reserve(d.items.size());
  for (auto idx : d.items) {
    const KbItem& item = kb.item(idx);
    arg.grounds.item_ids.push_back(item.id);
    arg.weight *= item.weight;
  }
  std::sort(arg.grounds.item_ids.begin(), arg.grounds.item_ids.end());
  return arg;
}

std::vector<Argument> collect(const KnowledgeBase& kb, Deriver& deriver, const Proposition& p) {
  std::vector<Argument> out;
  for (const auto& d : deriver.derivations(p)) out.push_back(to_argument(kb, p, d));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

ArgumentCapExceeded::ArgumentCapExceeded(const std::string& prop, std::size_t cap)
    : std::runtime_error("argument cap of " + std::to_string(cap) + " exceeded while deriving '" +
                         prop + "'") {}

bool canonical_less(const Argument& a, const Argument& b) {
  return std::tie(a.conclusion, a.sign, a.grounds) < std::tie(b.conclusion, b.sign, b.grounds);
}

SignTag propagate_sign(SignTag rule_sign, std::span<const SignTag> antecedent_signs) {
  bool all_confirmed = true;
  for (SignTag s : antecedent_signs) {
    if (polarity(s) != Polarity::For) {
      throw std::invalid_argument("antecedent sign '" + std::string(to_token(s)) +
                                  "' does not satisfy a positive condition");
    }
    all_confirmed = all_confirmed && s == SignTag::Confirm;
  }
  switch (rule_sign) {
    case SignTag::Confirm: return all_confirmed ? SignTag::Confirm : SignTag::Support;
    case SignTag::Exclude: return all_confirmed ? SignTag::Exclude : SignTag::Oppose;
    default: return rule_sign;
  }
}

std::vector<Argument> arguments_concerning(const KnowledgeBase& kb, const Proposition& p,
                                           const EngineOptions& opts) {
  Deriver deriver(kb, std::vector<bool>(kb.size(), true), opts.max_arguments);
  return collect(kb, deriver, p);
}

std::set<SignTag> derive_signs(const KnowledgeBase& kb, const Proposition& p,
                               const EngineOptions& opts) {
  std::set<SignTag> out;
  for (const auto& arg : arguments_concerning(kb, p, opts)) out.insert(arg.sign);
  return out;
}

bool is_consistent(const KnowledgeBase& kb, const Grounds& grounds) {
  std::vector<bool> allowed(kb.size(), false);
  std::vector<Proposition> heads;
  for (const auto& id : grounds.item_ids) {
    auto idx = kb.find(id);
    if (!idx) throw std::invalid_argument("grounds cite unknown item '" + id + "'");
    allowed[*idx] = true;
    heads.push_back(kb.item(*idx).consequent);
  }

  // Grounds are a subset of the knowledge base; the default cap is ample.
  Deriver deriver(kb, std::move(allowed), EngineOptions{}.max_arguments);
  for (const auto& h : heads) {
    bool confirmed = false, excluded = false;
    for (const auto& d : deriver.derivations(h)) {
      confirmed = confirmed || d.sign == SignTag::Confirm;
      excluded = excluded || d.sign == SignTag::Exclude;
    }
    if (confirmed && excluded) return false;
  }
  return true;
}

std::vector<ContradictionWitness> find_contradictions(const KnowledgeBase& kb,
                                                      const EngineOptions& opts) {
  Deriver deriver(kb, std::vector<bool>(kb.size(), true), opts.max_arguments);
  std::vector<ContradictionWitness> out;
  for (const auto& p : kb.propositions()) {
    std::optional<Argument> confirming, excluding;
    for (auto& arg : collect(kb, deriver, p)) {
      if (arg.sign == SignTag::Confirm && !confirming) confirming = std::move(arg);
      else if (arg.sign == SignTag::Exclude && !excluding) excluding = std::move(arg);
    }
    if (confirming && excluding) out.push_back({p, std::move(*confirming), std::move(*excluding)});
  }
  return out;
}

std::vector<Proposition> premises_of(const KnowledgeBase& kb, const Argument& arg) {
  std::vector<Proposition> out;
  for (const auto& id : arg.grounds.item_ids) {
    auto idx = kb.find(id);
    if (!idx) throw std::invalid_argument("grounds cite unknown item '" + id + "'");
    for (const auto& a : kb.item(*idx).antecedents) {
      if (a != arg.conclusion) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace riskarg
