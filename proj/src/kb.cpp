#include "riskarg/kb.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

namespace riskarg {

namespace {

constexpr bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
constexpr bool is_alpha(char c) { return is_lower(c) || (c >= 'A' && c <= 'Z'); }
constexpr bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool tail_ok(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return is_alpha(c) || is_digit(c) || c == '_'; });
}

struct SignNames {
  SignTag tag;
  std::string_view token;
  std::string_view name;
};

constexpr std::array<SignNames, 4> kSigns{{
    {SignTag::Support, "+", "support"},
    {SignTag::Oppose, "-", "oppose"},
    {SignTag::Confirm, "++", "confirm"},
    {SignTag::Exclude, "--", "exclude"},
}};

// Finds one cycle in the proposition graph, or returns an empty vector.
std::vector<std::string> find_cycle(const std::map<std::string, std::set<std::string>>& edges) {
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  for (const auto& [from, tos] : edges) {
    mark.emplace(from, Mark::White);
    for (const auto& to : tos) mark.emplace(to, Mark::White);
  }

  std::vector<std::string> stack;
  std::vector<std::string> cycle;

  auto visit = [&](auto&& self, const std::string& node) -> bool {
    mark[node] = Mark::Grey;
    stack.push_back(node);
    if (auto it = edges.find(node); it != edges.end()) {
      for (const auto& next : it->second) {
        if (mark[next] == Mark::Grey) {
          auto start = std::find(stack.begin(), stack.end(), next);
          cycle.assign(start, stack.end());
          cycle.push_back(next);
          return true;
        }
        if (mark[next] == Mark::White && self(self, next)) return true;
      }
    }
    stack.pop_back();
    mark[node] = Mark::Black;
    return false;
  };

  for (const auto& [node, m] : mark) {
    if (m == Mark::White && visit(visit, node)) break;
  }
  return cycle;
}

}  // namespace

std::string_view to_token(SignTag s) noexcept { return kSigns[static_cast<std::size_t>(s)].token; }

std::string_view to_name(SignTag s) noexcept { return kSigns[static_cast<std::size_t>(s)].name; }

std::optional<SignTag> sign_from_token(std::string_view token) noexcept {
  for (const auto& s : kSigns) {
    if (s.token == token) return s.tag;
  }
  return std::nullopt;
}

std::optional<SignTag> sign_from_name(std::string_view name) noexcept {
  for (const auto& s : kSigns) {
    if (s.name == name) return s.tag;
  }
  return std::nullopt;
}

Proposition::Proposition(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw std::invalid_argument("invalid proposition name '" + name_ + "'");
  }
}

bool Proposition::is_valid_name(std::string_view name) noexcept {
  return !name.empty() && is_lower(name.front()) && tail_ok(name.substr(1));
}

bool is_valid_item_id(std::string_view id) noexcept {
  return !id.empty() && is_alpha(id.front()) && tail_ok(id.substr(1));
}

KbError::KbError(Kind kind, const std::string& message, std::size_t line, std::size_t column,
                 std::string token)
    : std::runtime_error(line == 0 ? message
                                   : std::to_string(line) + ":" + std::to_string(column) + ": " +
                                         message),
      kind_(kind),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

KnowledgeBase::KnowledgeBase(std::vector<KbItem> items) : items_(std::move(items)) {
  std::map<std::string, std::set<std::string>> edges;

  for (std::size_t i = 0; i < items_.size(); ++i) {
    const KbItem& it = items_[i];
    if (!is_valid_item_id(it.id)) {
      throw KbError(KbError::Kind::Malformed, "invalid item id '" + it.id + "'");
    }
    if (!by_id_.emplace(it.id, i).second) {
      throw KbError(KbError::Kind::DuplicateId, "duplicate item id '" + it.id + "'");
    }
    if ((it.kind == ItemKind::Fact) != it.antecedents.empty()) {
      throw KbError(KbError::Kind::Malformed,
                    "item '" + it.id + "': facts take no antecedents, rules need at least one");
    }
    if (!(it.weight > 0.0 && it.weight <= 1.0)) {
      throw KbError(KbError::Kind::WeightRange, "item '" + it.id + "': weight must lie in (0, 1]");
    }
    if (it.axiomatic && it.weight != 1.0) {
      throw KbError(KbError::Kind::AxiomWeight,
                    "item '" + it.id + "': axiomatic items must have weight 1");
    }

    const std::string& head = it.consequent.name();
    concluders_[head].push_back(i);
    mentions_[head].push_back(i);
    for (const auto& a : it.antecedents) {
      if (a == it.consequent) {
        throw KbError(KbError::Kind::SelfLoop,
                      "rule '" + it.id + "': '" + head + "' is both antecedent and consequent");
      }
      auto& m = mentions_[a.name()];
      if (m.empty() || m.back() != i) m.push_back(i);
      edges[a.name()].insert(head);
    }
  }

  if (auto cycle = find_cycle(edges); !cycle.empty()) {
    std::string path;
    for (const auto& p : cycle) path += (path.empty() ? "" : " -> ") + p;
    throw KbError(KbError::Kind::Cycle, "cyclic rule graph: " + path);
  }
}

std::optional<std::size_t> KnowledgeBase::find(std::string_view id) const {
  if (auto it = by_id_.find(id); it != by_id_.end()) return it->second;
  return std::nullopt;
}

std::span<const std::size_t> KnowledgeBase::concluding(const Proposition& p) const {
  if (auto it = concluders_.find(p.name()); it != concluders_.end()) return it->second;
  return {};
}

std::span<const std::size_t> KnowledgeBase::mentioning(const Proposition& p) const {
  if (auto it = mentions_.find(p.name()); it != mentions_.end()) return it->second;
  return {};
}

std::vector<Proposition> KnowledgeBase::propositions() const {
  std::vector<Proposition> out;
  out.reserve(mentions_.size());
  for (const auto& [name, _] : mentions_) out.emplace_back(name);
  return out;
}

std::string format_weight(double w) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w);
  return std::string(buf.data(), end);
}

std::string to_dsl(const KbItem& item) {
  std::ostringstream os;
  if (item.kind == ItemKind::Fact) {
    os << "fact " << item.id << ": " << item.consequent.name();
  } else {
    os << "rule " << item.id << ": ";
    for (std::size_t i = 0; i < item.antecedents.size(); ++i) {
      os << (i ? " & " : "") << item.antecedents[i].name();
    }
    os << " -> " << item.consequent.name();
  }
  os << " : " << to_token(item.sign);
  if (item.weight != 1.0) os << " weight " << format_weight(item.weight);
  if (item.axiomatic) os << " axiom";
  os << " .";
  return os.str();
}

std::string to_dsl(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& item : kb.items()) {
    out += to_dsl(item);
    out += '\n';
  }
  return out;
}

}  // namespace riskarg
