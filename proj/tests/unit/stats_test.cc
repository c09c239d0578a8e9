// Copyright 2026 The cto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cto/error.h"
#include "cto/stats/association.h"
#include "cto/stats/contingency.h"
#include "cto/stats/descriptives.h"
#include "cto/stats/variables.h"
#include "support/oracles.h"

namespace cto::stats {
namespace {

using Counts = std::vector<std::vector<std::int64_t>>;

AnalysisRecord Rec(std::string id, std::string cause, std::string party) {
  AnalysisRecord r;
  r.id = std::move(id);
  r.Set(Variable::kCause, std::move(cause));
  if (!party.empty()) r.Set(Variable::kPcoParty, std::move(party));
  return r;
}

TEST(ContingencyTest, SixEventsTwoByTwo) {
  const std::vector<AnalysisRecord> records = {
      Rec("e1", "ITO", "SPD"), Rec("e2", "ITO", "SPD"), Rec("e3", "ITO", "AfD"),
      Rec("e4", "GI", "AfD"),  Rec("e5", "GI", "AfD"),  Rec("e6", "GI", "SPD"),
  };
  const auto t = BuildTable(records, Variable::kCause, Variable::kPcoParty);
  EXPECT_EQ(t.row_labels(), (std::vector<std::string>{"GI", "ITO"}));
  EXPECT_EQ(t.col_labels(), (std::vector<std::string>{"AfD", "SPD"}));
  EXPECT_EQ(t.counts(), (Counts{{2, 1}, {1, 2}}));
  EXPECT_EQ(t.n(), 6);
  EXPECT_EQ(t.RowTotals(), (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(t.ColTotals(), (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(t.record_ids().size(), 6u);
  EXPECT_EQ(t.row_variable(), Variable::kCause);
}

TEST(ContingencyTest, MissingValuesAreSkipped) {
  const std::vector<AnalysisRecord> records = {
      Rec("e1", "ITO", "SPD"), Rec("e2", "GI", "AfD"), Rec("e3", "GI", ""),
      Rec("e4", "NV", "SPD")};
  const auto t = BuildTable(records, Variable::kCause, Variable::kPcoParty);
  EXPECT_EQ(t.n(), 3);
  EXPECT_EQ(t.record_ids(), (std::vector<std::string>{"e1", "e2", "e4"}));
}

TEST(ContingencyTest, ConstantVariableIsDegenerate) {
  const std::vector<AnalysisRecord> records = {
      Rec("e1", "ITO", "SPD"), Rec("e2", "ITO", "AfD"), Rec("e3", "ITO", "SPD")};
  EXPECT_THROW(BuildTable(records, Variable::kCause, Variable::kPcoParty),
               DegenerateTableError);
}

TEST(ContingencyTest, NoResolvedPersonIsDegenerate) {
  const std::vector<AnalysisRecord> records = {
      Rec("e1", "ITO", ""), Rec("e2", "GI", ""), Rec("e3", "NV", "")};
  EXPECT_THROW(BuildTable(records, Variable::kCause, Variable::kPcoParty),
               DegenerateTableError);
}

TEST(ContingencyTest, NumericLabelsSortNumerically) {
  std::vector<AnalysisRecord> records;
  for (const char* lp : {"10", "9", "19", "9", "2"}) {
    AnalysisRecord r;
    r.id = std::string("e") + lp;
    r.Set(Variable::kLp, lp).Set(Variable::kCause, records.size() % 2 ? "GI" : "ITO");
    records.push_back(r);
  }
  const auto t = BuildTable(records, Variable::kLp, Variable::kCause);
  EXPECT_EQ(t.row_labels(), (std::vector<std::string>{"2", "9", "10", "19"}));
}

TEST(ContingencyTest, FromCountsDropsZeroLines) {
  const auto t = ContingencyTable::FromCounts({{1, 0, 2}, {0, 0, 0}, {3, 0, 4}});
  EXPECT_EQ(t.counts(), (Counts{{1, 2}, {3, 4}}));
  EXPECT_EQ(t.row_labels(), (std::vector<std::string>{"r0", "r2"}));
  EXPECT_EQ(t.col_labels(), (std::vector<std::string>{"c0", "c2"}));
  EXPECT_THROW(ContingencyTable::FromCounts({{1, 2}, {0, 0}}), DegenerateTableError);
  EXPECT_THROW(ContingencyTable::FromCounts({{1, 2}, {3}}), ValidationError);
  EXPECT_THROW(ContingencyTable::FromCounts({{1, -2}, {3, 4}}), ValidationError);
  EXPECT_THROW(ContingencyTable::FromCounts({}), Error);
}

TEST(PearsonTest, Examples) {
  const auto a = PearsonChi2(ContingencyTable::FromCounts({{10, 10}, {10, 10}}));
  EXPECT_EQ(a.statistic, 0.0);
  EXPECT_EQ(a.df, 1);
  const auto b = PearsonChi2(ContingencyTable::FromCounts({{10, 0}, {0, 10}}));
  EXPECT_EQ(b.statistic, 20.0);
  const auto c = PearsonChi2(ContingencyTable::FromCounts({{3, 1}, {1, 3}}));
  EXPECT_EQ(c.statistic, 2.0);
  EXPECT_EQ(PearsonChi2(ContingencyTable::FromCounts({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})).df, 4);
}

TEST(PearsonTest, MatchesOracleOnRandomTables) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
    Counts counts(r, std::vector<std::int64_t>(c));
    for (auto& row : counts) {
      for (auto& x : row) x = 1 + static_cast<std::int64_t>(rng() % 30);
    }
    const auto t = ContingencyTable::FromCounts(counts);
    EXPECT_NEAR(PearsonChi2(t).statistic, oracle::Chi2(counts),
                1e-9 * std::max(1.0, oracle::Chi2(counts)));
  }
}

TEST(CramersVTest, Examples) {
  EXPECT_EQ(CramersV(0.0, 40, 2, 2), 0.0);
  EXPECT_EQ(CramersV(20.0, 20, 2, 2), 1.0);
  EXPECT_EQ(CramersV(2.0, 8, 2, 2), 0.5);
  EXPECT_NEAR(CramersV(30.0, 100, 3, 5), std::sqrt(0.3 / 2), 1e-15);
}

TEST(CramersVTest, DomainErrors) {
  EXPECT_THROW(CramersV(1.0, 0, 2, 2), DomainError);
  EXPECT_THROW(CramersV(1.0, 10, 1, 2), DomainError);
  EXPECT_THROW(CramersV(-1.0, 10, 2, 2), DomainError);
}

TEST(CramersVTest, MonotoneInChi2) {
  double last = -1;
  for (double chi2 = 0; chi2 <= 50; chi2 += 0.25) {
    const double v = CramersV(chi2, 50, 3, 4);
    EXPECT_GE(v, last);
    last = v;
  }
}

TEST(CramersVTest, ScaleInvariance) {
  for (const Counts& base : {Counts{{3, 1}, {1, 3}}, Counts{{5, 2, 1}, {1, 4, 6}},
                             Counts{{7, 1}, {2, 2}, {1, 9}}}) {
    const auto t = ContingencyTable::FromCounts(base);
    const double v = CramersV(PearsonChi2(t).statistic, t.n(), t.rows(), t.cols());
    for (std::int64_t k : {2, 3, 7, 100}) {
      Counts scaled = base;
      for (auto& row : scaled) {
        for (auto& x : row) x *= k;
      }
      const auto s = ContingencyTable::FromCounts(scaled);
      EXPECT_DOUBLE_EQ(CramersV(PearsonChi2(s).statistic, s.n(), s.rows(), s.cols()), v);
    }
  }
}

TEST(EffectTest, Thresholds) {
  EXPECT_EQ(EffectLabel(0.0), Effect::kNegligible);
  EXPECT_EQ(EffectLabel(0.0999), Effect::kNegligible);
  EXPECT_EQ(EffectLabel(0.1), Effect::kSmall);
  EXPECT_EQ(EffectLabel(0.2999), Effect::kSmall);
  EXPECT_EQ(EffectLabel(0.3), Effect::kMedium);
  EXPECT_EQ(EffectLabel(0.4999), Effect::kMedium);
  EXPECT_EQ(EffectLabel(0.5), Effect::kLarge);
  EXPECT_EQ(EffectLabel(1.0), Effect::kLarge);
  EXPECT_THROW(EffectLabel(-0.01), DomainError);
  EXPECT_THROW(EffectLabel(1.01), DomainError);
  EXPECT_THROW(EffectLabel(std::nan("")), DomainError);
}

TEST(EffectTest, ReferenceValues) {
  for (double v : {0.795, 0.713, 0.524}) EXPECT_EQ(EffectLabel(v), Effect::kLarge) << v;
  for (double v : {0.464, 0.462, 0.400, 0.326}) {
    EXPECT_EQ(EffectLabel(v), Effect::kMedium) << v;
  }
  for (double v : {0.280, 0.267, 0.130, 0.109}) EXPECT_EQ(EffectLabel(v), Effect::kSmall) << v;
  for (double v : {0.035, 0.028, 0.020, 0.038}) {
    EXPECT_EQ(EffectLabel(v), Effect::kNegligible) << v;
  }
}

TEST(EffectTest, Names) {
  for (Effect e : {Effect::kNegligible, Effect::kSmall, Effect::kMedium, Effect::kLarge}) {
    EXPECT_EQ(ParseEffect(EffectName(e)), e);
  }
  EXPECT_EQ(ParseVSource("replicate_mean"), VSource::kReplicateMean);
  EXPECT_EQ(ParseVSource(VSourceName(VSource::kObserved)), VSource::kObserved);
  EXPECT_EQ(ParseVSource("mean"), std::nullopt);
}

TEST(MonteCarloTest, IndependentTableHasLargeP) {
  const auto t = ContingencyTable::FromCounts({{10, 10}, {10, 10}});
  EXPECT_GE(MonteCarloP(t, 9999, 1), 0.99);
}

TEST(MonteCarloTest, EightObservationsAgainstExactOracle) {
  const Counts counts = {{4, 0}, {1, 3}};
  const double exact = oracle::ExactPermutationP(counts);
  const double p = MonteCarloP(ContingencyTable::FromCounts(counts), 9999, 77);
  EXPECT_NEAR(p, exact, 0.03);
}

TEST(MonteCarloTest, SmallTablesAgainstExactOracle) {
  for (const Counts& counts : {Counts{{3, 1}, {1, 3}}, Counts{{5, 0}, {0, 5}},
                               Counts{{2, 3}, {4, 1}}, Counts{{1, 2}, {2, 1}, {1, 3}}}) {
    const double exact = oracle::ExactPermutationP(counts);
    const double p = MonteCarloP(ContingencyTable::FromCounts(counts), 99999, 11);
    EXPECT_NEAR(p, exact, 0.01);
  }
}

TEST(MonteCarloTest, DeterministicAndThreadIndependent) {
  const auto t = ContingencyTable::FromCounts({{12, 5, 3}, {4, 9, 8}});
  const auto a = MonteCarlo(t, 20000, 123, 1);
  const auto b = MonteCarlo(t, 20000, 123, 1);
  const auto c = MonteCarlo(t, 20000, 123, 4);
  EXPECT_EQ(a.exceed, b.exceed);
  EXPECT_EQ(a.p_value, b.p_value);
  EXPECT_EQ(a.exceed, c.exceed);
  EXPECT_EQ(a.mean_chi2, c.mean_chi2);
  EXPECT_EQ(a.iterations, 20000);
  EXPECT_EQ(a.seed, 123u);
  EXPECT_NE(MonteCarlo(t, 20000, 124).exceed, a.exceed);
}

TEST(MonteCarloTest, PValueBounds) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Counts counts(2 + rng() % 2, std::vector<std::int64_t>(2 + rng() % 2));
    for (auto& row : counts) {
      for (auto& x : row) x = 1 + static_cast<std::int64_t>(rng() % 15);
    }
    const int iterations = 999 + static_cast<int>(rng() % 2000);
    const auto r = MonteCarlo(ContingencyTable::FromCounts(counts), iterations, rng());
    EXPECT_GE(r.p_value, 1.0 / (iterations + 1));
    EXPECT_LE(r.p_value, 1.0);
    EXPECT_DOUBLE_EQ(r.p_value, (1.0 + r.exceed) / (iterations + 1));
  }
  // Perfect separation over many observations: nothing reaches it.
  const auto extreme = MonteCarlo(ContingencyTable::FromCounts({{40, 0}, {0, 40}}), 999, 5);
  EXPECT_EQ(extreme.exceed, 0);
  EXPECT_DOUBLE_EQ(extreme.p_value, 1.0 / 1000);
}

TEST(MonteCarloTest, RejectsTooFewIterations) {
  const auto t = ContingencyTable::FromCounts({{3, 1}, {1, 3}});
  EXPECT_THROW(MonteCarlo(t, 998, 1), ValidationError);
}

TEST(MonteCarloTest, ReplicateMeanNearExpectation) {
  const Counts counts = {{4, 1}, {2, 3}};
  double sum = 0;
  std::uint64_t arrangements = 0;
  {
    // Exact mean over all label arrangements.
    std::vector<int> row_of, labels;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (int k = 0; k < counts[i][j]; ++k) {
          row_of.push_back(static_cast<int>(i));
          labels.push_back(static_cast<int>(j));
        }
      }
    }
    std::sort(labels.begin(), labels.end());
    do {
      Counts arranged(2, std::vector<std::int64_t>(2, 0));
      for (std::size_t k = 0; k < labels.size(); ++k) ++arranged[row_of[k]][labels[k]];
      sum += oracle::Chi2(arranged);
      ++arrangements;
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  const auto r = MonteCarlo(ContingencyTable::FromCounts(counts), 99999, 8);
  EXPECT_NEAR(r.mean_chi2, sum / arrangements, 0.02);
}

TEST(MonteCarloTest, ScalingKeepsPOrdering) {
  const Counts strong = {{8, 2}, {2, 8}};
  const Counts weak = {{6, 4}, {4, 6}};
  for (std::int64_t k : {1, 2, 3}) {
    Counts s = strong, w = weak;
    for (auto* t : {&s, &w}) {
      for (auto& row : *t) {
        for (auto& x : row) x *= k;
      }
    }
    EXPECT_LT(MonteCarloP(ContingencyTable::FromCounts(s), 49999, 9),
              MonteCarloP(ContingencyTable::FromCounts(w), 49999, 9))
        << "k=" << k;
  }
}

TEST(AssociateTest, FillsEveryField) {
  const auto t = ContingencyTable::FromCounts({{3, 1}, {1, 3}});
  AssociationOptions opts;
  opts.iterations = 9999;
  opts.seed = 42;
  const auto r = Associate(t, opts);
  EXPECT_EQ(r.rows, 2u);
  EXPECT_EQ(r.cols, 2u);
  EXPECT_EQ(r.n, 8);
  EXPECT_EQ(r.chi2, 2.0);
  EXPECT_EQ(r.df, 1);
  EXPECT_EQ(r.cramers_v, 0.5);
  EXPECT_EQ(r.effect, Effect::kLarge);
  EXPECT_EQ(r.iterations, 9999);
  EXPECT_EQ(r.seed, 42u);
  EXPECT_EQ(r.v_source, VSource::kObserved);
  EXPECT_NEAR(r.asymptotic_p, 0.1572992, 1e-6);  // upper tail of chi2(1) at 2
  EXPECT_EQ(r.p_value, MonteCarloP(t, 9999, 42));
}

TEST(AssociateTest, ReplicateMeanSource) {
  const auto t = ContingencyTable::FromCounts({{3, 1}, {1, 3}});
  AssociationOptions opts;
  opts.seed = 42;
  opts.v_source = VSource::kReplicateMean;
  const auto r = Associate(t, opts);
  const auto mc = MonteCarlo(t, opts.iterations, 42);
  EXPECT_EQ(r.v_source, VSource::kReplicateMean);
  EXPECT_DOUBLE_EQ(r.cramers_v, CramersV(mc.mean_chi2, 8, 2, 2));
}

TEST(AssociationIoTest, JsonRoundTripAndCsv) {
  AssociationOptions opts;
  opts.seed = 7;
  AssociationEntry ok;
  ok.row_variable = Variable::kCause;
  ok.col_variable = Variable::kPcoParty;
  ok.result = Associate(ContingencyTable::FromCounts({{5, 1}, {2, 6}}), opts);
  ok.result->row_variable = Variable::kCause;
  ok.result->col_variable = Variable::kPcoParty;
  ok.record_ids = {"19-10-2-0", "19-12-3-0"};
  AssociationEntry degenerate;
  degenerate.row_variable = Variable::kHasCto;
  degenerate.col_variable = Variable::kTopic;
  degenerate.note = "degenerate: fewer than two labels";
  std::stringstream ss;
  WriteAssociationsJson(ss, {ok, degenerate});
  const auto back = ReadAssociationsJson(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], ok);
  EXPECT_EQ(back[1], degenerate);

  std::ostringstream csv;
  WriteAssociationsCsv(csv, {ok, degenerate});
  std::istringstream lines(csv.str());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header.rfind("variable1,variable2,n,chi2,df,p_value,cramers_v,effect", 0), 0u);
  EXPECT_EQ(first.rfind("cause,pco_party,14,", 0), 0u) << first;
  EXPECT_EQ(second.rfind("has_cto,topic,", 0), 0u) << second;
}

TEST(DescriptivesTest, MedianAndDeviation) {
  EXPECT_EQ(Median({5, 5, 5, 5}), 5.0);
  EXPECT_EQ(PopulationStdDev({5, 5, 5, 5}), 0.0);
  EXPECT_EQ(Median({17, 6, 3, 2, 1}), 3.0);
  EXPECT_EQ(Median({1, 2, 3, 4}), 2.5);
  EXPECT_NEAR(PopulationStdDev({1, 2, 3, 4}), 1.118, 5e-4);
  EXPECT_DOUBLE_EQ(PopulationStdDev({1, 2, 3, 4}), std::sqrt(1.25));
  EXPECT_THROW(Median({}), DomainError);
  EXPECT_THROW(PopulationStdDev({}), DomainError);
}

TEST(DescriptivesTest, GroupsIncludeZeroCounts) {
  std::vector<AnalysisRecord> records;
  auto add = [&](std::string lp, std::string cause) {
    AnalysisRecord r;
    r.id = "e" + std::to_string(records.size());
    r.Set(Variable::kLp, std::move(lp)).Set(Variable::kCause, std::move(cause));
    records.push_back(r);
  };
  add("18", "ITO");
  add("18", "ITO");
  add("19", "GI");
  add("9", "ITO");
  const CountingRule is_ito = [](const AnalysisRecord& r) {
    return r.Get(Variable::kCause) == "ITO";
  };
  const auto d = GroupDescriptives(records, Variable::kLp, is_ito);
  EXPECT_EQ(d.per_group, (std::vector<std::pair<std::string, std::int64_t>>{
                             {"9", 1}, {"18", 2}, {"19", 0}}));
  EXPECT_EQ(d.total, 3);
  EXPECT_EQ(d.median, 1.0);
  EXPECT_DOUBLE_EQ(d.std_dev, std::sqrt(2.0 / 3.0));

  const auto u = GroupDescriptives(records, Variable::kLp, is_ito, {"17", "18", "19", "9"});
  EXPECT_EQ(u.per_group.size(), 4u);
  EXPECT_EQ(u.median, 0.5);
  EXPECT_THROW(GroupDescriptives({}, Variable::kLp, is_ito), DomainError);
}

TEST(VariablesTest, Names) {
  for (std::size_t i = 0; i < kVariableCount; ++i) {
    const auto v = static_cast<Variable>(i);
    EXPECT_EQ(ParseVariable(VariableName(v)), v);
  }
  EXPECT_EQ(VariableName(Variable::kPcoAffiliation), "pco_affiliation");
  EXPECT_TRUE(IsPcoVariable(Variable::kPcoGender));
  EXPECT_FALSE(IsPcoVariable(Variable::kPresidentGender));
  EXPECT_EQ(ParseVariable("shoe_size"), std::nullopt);
}

}  // namespace
}  // namespace cto::stats
