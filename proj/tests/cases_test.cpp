#include <gtest/gtest.h>

#include <random>

#include "riskarg/acceptability.hpp"
#include "riskarg/cases.hpp"
#include "riskarg/parse.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace riskarg {
namespace {

using P = CasePattern;
using V = DominanceVerdict;

Argument arg(SignTag sign, double weight = 1.0, std::string id = "x") {
  return Argument{Grounds{{std::move(id)}}, Proposition("p"), sign, weight};
}

Case make_case(std::vector<Argument> pro, std::vector<Argument> con) {
  return Case{Proposition("p"), std::move(pro), std::move(con)};
}

TEST(BuildCaseTest, OneEachSide) {
  const auto c = build_case(parse_kb("fact f1: p : + .\nfact f2: p : - ."), Proposition("p"));
  EXPECT_EQ(c.for_args.size(), 1u);
  EXPECT_EQ(c.against_args.size(), 1u);
}

TEST(BuildCaseTest, EmptyKb) {
  const auto c = build_case(KnowledgeBase{}, Proposition("p"));
  EXPECT_TRUE(c.for_args.empty());
  EXPECT_TRUE(c.against_args.empty());
}

TEST(BuildCaseTest, PartitionMatchesOracle) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto kb = testing::random_kb(rng, 8);
    for (const auto& prop : testing::kAlphabet) {
      const auto c = build_case(kb, Proposition(prop));
      std::size_t ref_for = 0, ref_against = 0;
      for (const auto& a : oracle::arguments(kb, prop)) {
        (polarity(a.sign) == Polarity::For ? ref_for : ref_against)++;
      }
      ASSERT_EQ(c.for_args.size(), ref_for);
      ASSERT_EQ(c.against_args.size(), ref_against);
      for (const auto& a : c.for_args) EXPECT_EQ(polarity(a.sign), Polarity::For);
      for (const auto& a : c.against_args) EXPECT_EQ(polarity(a.sign), Polarity::Against);
      // Union identity under head count.
      EXPECT_EQ(aggregate(c.for_args, AggregationPolicy::Count) +
                    aggregate(c.against_args, AggregationPolicy::Count),
                static_cast<double>(arguments_concerning(kb, Proposition(prop)).size()));
    }
  }
}

TEST(AggregateTest, Policies) {
  const std::vector<Argument> three{arg(SignTag::Support), arg(SignTag::Support), arg(SignTag::Confirm)};
  EXPECT_EQ(aggregate(three, AggregationPolicy::Count), 3.0);

  const std::vector<Argument> weighted{arg(SignTag::Support, 0.5), arg(SignTag::Support, 0.25)};
  EXPECT_EQ(aggregate(weighted, AggregationPolicy::Sum), 0.75);
  EXPECT_EQ(aggregate(weighted, AggregationPolicy::Max), 0.5);

  for (auto p : {AggregationPolicy::Count, AggregationPolicy::Sum, AggregationPolicy::Max}) {
    EXPECT_EQ(aggregate({}, p), 0.0);
  }
}

TEST(DominanceTest, Examples) {
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support), arg(SignTag::Support)}, {arg(SignTag::Oppose)}),
                      AggregationPolicy::Count),
            V::ForDominates);
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support)}, {arg(SignTag::Oppose)}), AggregationPolicy::Count),
            V::Balanced);
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support, 0.9)},
                                {arg(SignTag::Oppose, 0.5), arg(SignTag::Oppose, 0.5)}),
                      AggregationPolicy::Sum),
            V::AgainstDominates);
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support, 0.9)},
                                {arg(SignTag::Oppose, 0.5), arg(SignTag::Oppose, 0.5)}),
                      AggregationPolicy::Max),
            V::ForDominates);
}

TEST(DominanceTest, SumTieWithinTolerance) {
  // 0.1 + 0.2 != 0.3 in binary floating point.
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support, 0.1), arg(SignTag::Support, 0.2)},
                                {arg(SignTag::Oppose, 0.3)}),
                      AggregationPolicy::Sum),
            V::Balanced);
}

TEST(DominanceTest, SingleArgumentWeightComparison) {
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support, 0.4)}, {arg(SignTag::Oppose, 0.4)}),
                      AggregationPolicy::Max),
            V::Balanced);
  EXPECT_EQ(dominance(make_case({arg(SignTag::Support, 0.6)}, {arg(SignTag::Oppose, 0.4)}),
                      AggregationPolicy::Max),
            V::ForDominates);
}

TEST(DominanceTest, CountInvariantUnderWeightRescaling) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto kb = testing::random_kb(rng, 10);
    std::vector<KbItem> items(kb.items().begin(), kb.items().end());
    for (auto& it : items) {
      it.weight *= 0.5;
      it.axiomatic = false;
    }
    const KnowledgeBase scaled(items);
    for (const auto& prop : testing::kAlphabet) {
      EXPECT_EQ(dominance(build_case(kb, Proposition(prop)), AggregationPolicy::Count),
                dominance(build_case(scaled, Proposition(prop)), AggregationPolicy::Count));
    }
  }
}

TEST(MatchPatternTest, Examples) {
  EXPECT_EQ(match_pattern(make_case({arg(SignTag::Support)}, {arg(SignTag::Oppose)})), P::Equivocal);
  EXPECT_EQ(match_pattern(make_case({arg(SignTag::Confirm)}, {arg(SignTag::Exclude)})),
            P::Contradictory);
  EXPECT_EQ(match_pattern(make_case({}, {})), P::OpenPattern);
}

// All 16 presence combinations of the four argument kinds; each must map to
// the same pattern as the head-count formulation.
TEST(MatchPatternTest, TotalOverPresenceCombinations) {
  std::set<P> seen;
  for (int bits = 0; bits < 16; ++bits) {
    const bool confirm = bits & 1, support = bits & 2, exclude = bits & 4, oppose = bits & 8;
    std::vector<Argument> pro, con;
    if (confirm) pro.push_back(arg(SignTag::Confirm, 1.0, "c"));
    if (support) pro.push_back(arg(SignTag::Support, 1.0, "s"));
    if (exclude) con.push_back(arg(SignTag::Exclude, 1.0, "e"));
    if (oppose) con.push_back(arg(SignTag::Oppose, 1.0, "o"));
    const P got = match_pattern(make_case(pro, con));
    EXPECT_EQ(got, oracle::pattern(confirm, support, exclude, oppose)) << "bits " << bits;
    seen.insert(got);
  }
  EXPECT_EQ(seen.size(), kCasePatternCount);
}

TEST(MatchPatternTest, AgreesWithOracleOnRandomKbs) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto kb = testing::random_kb(rng, 8);
    for (const auto& prop : testing::kAlphabet) {
      ASSERT_EQ(match_pattern(build_case(kb, Proposition(prop))), oracle::pattern(kb, prop))
          << to_dsl(kb);
    }
  }
}

TEST(MatchPatternTest, CoherentWithAcceptability) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const auto kb = testing::random_kb(rng, 10);
    for (const auto& prop : testing::kAlphabet) {
      const auto pattern = match_pattern(build_case(kb, Proposition(prop)));
      const auto cls = classify(kb, Proposition(prop));
      if (pattern == P::ConfirmedClean) {
        EXPECT_GE(cls, EvidenceClass::Plausible);
      }
      if (pattern == P::OpenPattern) {
        EXPECT_EQ(cls, EvidenceClass::Open);
      }
    }
  }
}

TEST(LinguisticTermTest, DefaultLexicon) {
  const Lexicon lex;
  EXPECT_EQ(linguistic_term(P::Equivocal, V::Balanced, lex), "equivocal");
  EXPECT_EQ(linguistic_term(P::OpenPattern, V::Balanced, lex), "open");
  EXPECT_EQ(linguistic_term(P::Equivocal, V::ForDominates, lex), "equivocal, on balance supported");
  EXPECT_EQ(linguistic_term(P::Equivocal, V::AgainstDominates, lex), "equivocal, on balance opposed");
  // Only equivocal cases are qualified.
  EXPECT_EQ(linguistic_term(P::SupportedClean, V::ForDominates, lex), "supported");
  EXPECT_EQ(linguistic_term(P::Contradictory, V::AgainstDominates, lex), "contradictory");
}

TEST(LexiconTest, ParseOverridesAndWarnsOnMissing) {
  std::vector<std::string> warnings;
  const auto lex = Lexicon::parse(
      "# custom wording\n"
      "equivocal = \"mixed evidence\"  # trailing\n"
      "open_pattern=\"no view #1\"\n"
      "suffix.for_dominates = \"leaning yes\"\n",
      &warnings);
  EXPECT_EQ(lex.term(P::Equivocal), "mixed evidence");
  EXPECT_EQ(lex.term(P::OpenPattern), "no view #1");
  EXPECT_EQ(lex.term(P::Contradictory), "contradictory");
  EXPECT_EQ(linguistic_term(P::Equivocal, V::ForDominates, lex), "mixed evidence, leaning yes");
  EXPECT_EQ(warnings.size(), kCasePatternCount - 2);
}

TEST(LexiconTest, FullFileHasNoWarnings) {
  std::string text;
  for (std::size_t i = 0; i < kCasePatternCount; ++i) {
    text += std::string(to_name(static_cast<P>(i))) + " = \"t" + std::to_string(i) + "\"\n";
  }
  std::vector<std::string> warnings;
  const auto lex = Lexicon::parse(text, &warnings);
  EXPECT_TRUE(warnings.empty());
  EXPECT_EQ(lex.term(P::OpposedClean), "t7");
}

TEST(LexiconTest, Errors) {
  EXPECT_THROW(Lexicon::parse("ambivalent = \"x\"\n"), std::invalid_argument);
  EXPECT_THROW(Lexicon::parse("equivocal = x\n"), std::invalid_argument);
  EXPECT_THROW(Lexicon::parse("equivocal \"x\"\n"), std::invalid_argument);
  EXPECT_THROW(Lexicon::parse("equivocal = \"\"\n"), std::invalid_argument);
  EXPECT_THROW(Lexicon::parse("suffix.maybe = \"x\"\n"), std::invalid_argument);
}

TEST(NamesTest, RoundTrip) {
  for (std::size_t i = 0; i < kCasePatternCount; ++i) {
    EXPECT_EQ(pattern_from_name(to_name(static_cast<P>(i))), static_cast<P>(i));
  }
  for (auto v : {V::ForDominates, V::AgainstDominates, V::Balanced}) {
    EXPECT_EQ(verdict_from_name(to_name(v)), v);
  }
  for (auto p : {AggregationPolicy::Count, AggregationPolicy::Sum, AggregationPolicy::Max}) {
    EXPECT_EQ(policy_from_name(to_name(p)), p);
  }
}

}  // namespace
}  // namespace riskarg
