#include "riskarg/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "riskarg/arguments.hpp"
#include "riskarg/parse.hpp"

namespace riskarg {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "riskarg-report/1";

std::string format_number(double x) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", x);
  return buf.data();
}

// Derivation tree of a minimal argument, pre-order. Each proposition has a
// single concluding item inside minimal grounds, so the walk is well defined.
std::vector<GroundLine> derivation_lines(const KnowledgeBase& kb, const Argument& arg) {
  std::map<std::string, std::size_t> concluder;
  for (const auto& id : arg.grounds.item_ids) {
    const std::size_t idx = *kb.find(id);
    concluder.emplace(kb.item(idx).consequent.name(), idx);
  }

  std::vector<GroundLine> out;
  std::set<std::size_t> visited;
  auto walk = [&](auto&& self, const std::string& prop, std::size_t depth) -> void {
    auto it = concluder.find(prop);
    if (it == concluder.end() || !visited.insert(it->second).second) return;
    const KbItem& item = kb.item(it->second);
    out.push_back({item.id, to_dsl(item), depth});
    for (const auto& a : item.antecedents) self(self, a.name(), depth + 1);
  };
  walk(walk, arg.conclusion.name(), 0);
  return out;
}

RenderedArgument render_argument(const KnowledgeBase& kb, const Argument& arg) {
  return {arg.sign, round_significant(arg.weight), derivation_lines(kb, arg)};
}

Json to_json(const RenderedArgument& a) {
  Json grounds = Json::array();
  for (const auto& g : a.grounds) {
    grounds.push_back(Json{{"id", g.id}, {"depth", g.depth}, {"statement", g.statement}});
  }
  return Json{{"sign", std::string(to_token(a.sign))}, {"weight", a.weight}, {"grounds", std::move(grounds)}};
}

template <class T, class F>
T required_enum(const Json& j, const char* key, F from_name) {
  const auto name = j.at(key).get<std::string>();
  auto v = from_name(name);
  if (!v) throw std::invalid_argument(std::string("bad value for '") + key + "': " + name);
  return *v;
}

RenderedArgument argument_from_json(const Json& j) {
  RenderedArgument a;
  a.sign = required_enum<SignTag>(j, "sign", sign_from_token);
  a.weight = j.at("weight").get<double>();
  for (const auto& g : j.at("grounds")) {
    a.grounds.push_back(
        {g.at("id").get<std::string>(), g.at("statement").get<std::string>(), g.at("depth").get<std::size_t>()});
  }
  return a;
}

void render_side(std::ostringstream& os, std::string_view label,
                 const std::vector<RenderedArgument>& args, std::size_t& number) {
  os << "case " << label << ": " << args.size() << (args.size() == 1 ? " argument\n" : " arguments\n");
  for (const auto& a : args) {
    os << "  argument " << number++ << ": " << to_token(a.sign) << " weight "
       << format_number(a.weight) << "\n";
    for (const auto& g : a.grounds) {
      os << "    " << std::string(2 * g.depth, ' ') << g.statement << "\n";
    }
  }
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

double round_significant(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

RiskReport build_report(std::string_view kb_source, const Proposition& prop,
                        AggregationPolicy policy, const Lexicon& lexicon,
                        const ClassifyOptions& opts) {
  const KnowledgeBase kb = parse_kb(kb_source);
  const Case c = build_case(kb, prop, opts.engine);

  RiskReport r;
  r.prop = prop;
  r.evidence_class = classify(kb, prop, opts);
  r.pattern = match_pattern(c);
  r.verdict = dominance(c, policy);
  r.term = lexicon.term(r.pattern);
  r.qualified_term = linguistic_term(r.pattern, r.verdict, lexicon);
  r.policy = policy;
  r.for_aggregate = round_significant(aggregate(c.for_args, policy));
  r.against_aggregate = round_significant(aggregate(c.against_args, policy));
  for (const auto& a : c.for_args) r.for_args.push_back(render_argument(kb, a));
  for (const auto& a : c.against_args) r.against_args.push_back(render_argument(kb, a));
  for (const auto& w : find_contradictions(kb, opts.engine)) {
    r.contradictions.push_back(
        {w.prop.name(), w.confirming.grounds.item_ids, w.excluding.grounds.item_ids});
  }
  r.kb_digest = sha256_hex(kb_source);
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InputError("cannot read '" + path.string() + "'");
  return ss.str();
}

RiskReport run_query(const std::filesystem::path& kb_path, std::string_view prop_name,
                     AggregationPolicy policy,
                     const std::optional<std::filesystem::path>& lexicon_path,
                     std::vector<std::string>* warnings, const ClassifyOptions& opts) {
  if (!Proposition::is_valid_name(prop_name)) {
    throw std::invalid_argument("invalid proposition name '" + std::string(prop_name) + "'");
  }
  const std::string source = read_file(kb_path);
  const Lexicon lexicon = lexicon_path ? Lexicon::parse(read_file(*lexicon_path), warnings) : Lexicon{};
  return build_report(source, Proposition(std::string(prop_name)), policy, lexicon, opts);
}

std::string render_text(const RiskReport& r) {
  std::ostringstream os;
  os << "proposition: " << r.prop.name() << "\n";
  os << "class: " << to_name(r.evidence_class) << "\n";

  if (r.for_args.empty() && r.against_args.empty()) {
    os << "no arguments\n";
  } else {
    os << "term: " << r.qualified_term << "\n";
    os << "pattern: " << to_name(r.pattern) << "\n";
    os << "verdict: " << to_name(r.verdict) << " (" << to_name(r.policy) << " "
       << format_number(r.for_aggregate) << " for, " << format_number(r.against_aggregate)
       << " against)\n";
    os << "kb_digest: " << r.kb_digest << "\n";
    std::size_t number = 1;
    render_side(os, "for", r.for_args, number);
    render_side(os, "against", r.against_args, number);
  }

  if (!r.contradictions.empty()) {
    os << "contradictions: " << r.contradictions.size() << "\n";
    for (const auto& c : r.contradictions) {
      os << "  " << c.prop << ": confirmed by {" << join(c.confirming) << "}, excluded by {"
         << join(c.excluding) << "}\n";
    }
  }
  return os.str();
}

std::string render_structured(const RiskReport& r) {
  Json for_args = Json::array();
  for (const auto& a : r.for_args) for_args.push_back(to_json(a));
  Json against_args = Json::array();
  for (const auto& a : r.against_args) against_args.push_back(to_json(a));
  Json contradictions = Json::array();
  for (const auto& c : r.contradictions) {
    contradictions.push_back(
        Json{{"prop", c.prop}, {"confirming", c.confirming}, {"excluding", c.excluding}});
  }

  Json j{
      {"schema", std::string(kSchema)},
      {"prop", r.prop.name()},
      {"evidence_class", std::string(to_name(r.evidence_class))},
      {"pattern", std::string(to_name(r.pattern))},
      {"term", r.term},
      {"qualified_term", r.qualified_term},
      {"verdict", std::string(to_name(r.verdict))},
      {"policy", std::string(to_name(r.policy))},
      {"for_aggregate", round_significant(r.for_aggregate)},
      {"against_aggregate", round_significant(r.against_aggregate)},
      {"for_args", std::move(for_args)},
      {"against_args", std::move(against_args)},
      {"contradictions", std::move(contradictions)},
      {"kb_digest", r.kb_digest},
  };
  return j.dump(2) + "\n";
}

RiskReport parse_structured(std::string_view json_text) {
  try {
    const Json j = Json::parse(json_text);
    if (j.at("schema").get<std::string>() != kSchema) {
      throw std::invalid_argument("unsupported report schema");
    }
    RiskReport r;
    r.prop = Proposition(j.at("prop").get<std::string>());
    r.evidence_class = required_enum<EvidenceClass>(j, "evidence_class", evidence_class_from_name);
    r.pattern = required_enum<CasePattern>(j, "pattern", pattern_from_name);
    r.term = j.at("term").get<std::string>();
    r.qualified_term = j.at("qualified_term").get<std::string>();
    r.verdict = required_enum<DominanceVerdict>(j, "verdict", verdict_from_name);
    r.policy = required_enum<AggregationPolicy>(j, "policy", policy_from_name);
    r.for_aggregate = j.at("for_aggregate").get<double>();
    r.against_aggregate = j.at("against_aggregate").get<double>();
    for (const auto& a : j.at("for_args")) r.for_args.push_back(argument_from_json(a));
    for (const auto& a : j.at("against_args")) r.against_args.push_back(argument_from_json(a));
    for (const auto& c : j.at("contradictions")) {
      r.contradictions.push_back({c.at("prop").get<std::string>(),
                                  c.at("confirming").get<std::vector<std::string>>(),
                                  c.at("excluding").get<std::vector<std::string>>()});
    }
    r.kb_digest = j.at("kb_digest").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace riskarg
