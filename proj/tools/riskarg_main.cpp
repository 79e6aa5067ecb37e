// Command-line front end: query a knowledge base, check it, or look up a
// weight-of-evidence category.
//
// Exit status: 0 report produced, 1 usage error, 2 parse/validation error,
// 3 argument cap exceeded.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "riskarg/parse.hpp"
#include "riskarg/report.hpp"
#include "riskarg/version.hpp"
#include "riskarg/woe.hpp"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInvalid = 2, kCapExceeded = 3 };

int run_query_cmd(const std::string& kb_path, const std::string& prop, const std::string& policy_name,
                  const std::optional<std::string>& lexicon, const std::string& format,
                  std::size_t cap) {
  auto policy = riskarg::policy_from_name(policy_name);
  if (!policy) {
    std::cerr << "error: unknown policy '" << policy_name << "'\n";
    return kUsage;
  }
  if (!riskarg::Proposition::is_valid_name(prop)) {
    std::cerr << "error: invalid proposition name '" << prop << "'\n";
    return kUsage;
  }

  std::vector<std::string> warnings;
  riskarg::ClassifyOptions opts;
  opts.engine.max_arguments = cap;
  const auto report =
      riskarg::run_query(kb_path, prop, *policy,
                         lexicon ? std::optional<std::filesystem::path>(*lexicon) : std::nullopt,
                         &warnings, opts);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  std::cout << (format == "structured" ? riskarg::render_structured(report)
                                       : riskarg::render_text(report));
  return kOk;
}

int run_check_cmd(const std::string& kb_path) {
  const auto kb = riskarg::parse_kb(riskarg::read_file(kb_path));
  const auto warnings = riskarg::validate_kb(kb);
  std::cout << kb_path << ": " << kb.size() << (kb.size() == 1 ? " item" : " items") << ", "
            << warnings.size() << (warnings.size() == 1 ? " warning" : " warnings") << "\n";
  for (const auto& w : warnings) std::cout << "warning: " << w.message << "\n";
  return kOk;
}

int run_woe_cmd(const std::string& human, const std::string& animal) {
  const auto h = riskarg::study_evidence_from_name(human);
  const auto a = riskarg::study_evidence_from_name(animal);
  if (!h || !a) {
    std::cerr << "error: unknown evidence level '" << (h ? animal : human)
              << "' (expected sufficient, limited, inadequate, no_data or no_evidence)\n";
    return kUsage;
  }
  std::cout << riskarg::to_name(riskarg::classify_woe(*h, *a)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qualitative risk assessment by argumentation", "riskarg"};
  app.set_version_flag("--version", std::string(riskarg::kVersion));
  app.require_subcommand(1);

  std::string kb_path, prop, policy = "count", format = "text";
  std::optional<std::string> lexicon;
  std::size_t cap = riskarg::EngineOptions{}.max_arguments;
  auto* query = app.add_subcommand("query", "Build the argument report for one proposition");
  query->add_option("kb-file", kb_path, "Knowledge base file")->required();
  query->add_option("proposition", prop, "Proposition to assess")->required();
  query->add_option("--policy", policy, "Aggregation policy")
      ->check(CLI::IsMember({"count", "sum", "max"}));
  query->add_option("--lexicon", lexicon, "Lexicon file mapping case patterns to terms");
  query->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  query->add_option("--max-arguments", cap, "Per-proposition argument cap")
      ->check(CLI::PositiveNumber);

  std::string human, animal;
  auto* woe = app.add_subcommand("woe", "Weight-of-evidence category from study evidence levels");
  woe->add_option("human-level", human, "Human-study evidence level")->required();
  woe->add_option("animal-level", animal, "Animal-study evidence level")->required();

  std::string check_path;
  auto* check = app.add_subcommand("check", "Parse and validate a knowledge base");
  check->add_option("kb-file", check_path, "Knowledge base file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*query) return run_query_cmd(kb_path, prop, policy, lexicon, format, cap);
    if (*woe) return run_woe_cmd(human, animal);
    if (*check) return run_check_cmd(check_path);
  } catch (const riskarg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const riskarg::KbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const riskarg::ArgumentCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    // Lexicon errors.
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
