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

#include "report.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "common/csv.h"
#include "common/format.h"
#include "cto/annotation/types.h"
#include "cto/pipeline/stages.h"
#include "cto/registry/registry.h"
#include "cto/stats/descriptives.h"
#include "inputs.h"

namespace cto::pipeline::internal {

using stats::AnalysisRecord;
using stats::Variable;

namespace {

std::string Ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return fmt::Join(ids, ";");
}

std::string ContributionId(int lp, int session, std::size_t index) {
  return std::to_string(lp) + "-" + std::to_string(session) + "-" +
         std::to_string(index);
}

std::vector<std::string> CorpusLps(const std::vector<corpus::Protocol>& corpus) {
  std::set<int> lps;
  for (const auto& p : corpus) lps.insert(p.ref.legislative_period);
  std::vector<std::string> out;
  for (int lp : lps) out.push_back(std::to_string(lp));
  return out;
}

std::vector<std::string> IdsWhere(const std::vector<AnalysisRecord>& records,
                                  const stats::CountingRule& rule) {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (rule(r)) out.push_back(r.id);
  }
  return out;
}

stats::CountingRule Equals(Variable v, std::string value) {
  return [v, value = std::move(value)](const AnalysisRecord& r) {
    const auto& x = r.Get(v);
    return x && *x == value;
  };
}

void CorpusCounts(std::ostream& out, const ReportInputs& in) {
  const auto& store = *in.analysis_inputs->store;
  std::map<detect::EventRef, std::optional<std::string>> auto_member;
  for (const auto& r : *in.analysis_inputs->resolutions) {
    auto_member[r.event] = r.member_id();
  }

  std::size_t contributions = 0, president = 0;
  for (const auto& p : *in.corpus) {
    contributions += p.contributions.size();
    for (const auto& c : p.contributions) president += c.is_president();
  }
  std::vector<std::string> all, rule1, rule2, rejected, unannotated;
  std::map<std::string, bool> cto_contribution;  // id -> any event resolved
  for (const auto& e : *in.events) {
    const auto ref = e.ref();
    const std::string id = ref.ToString();
    all.push_back(id);
    (e.matched_rule == detect::MatchedRule::kRule1 ? rule1 : rule2).push_back(id);
    const auto st = store.StateOf(ref);
    if (st.rejected()) {
      rejected.push_back(id);
      continue;
    }
    if (!st.cause) unannotated.push_back(id);
    bool resolved = st.resolved_member.has_value();
    if (auto it = auto_member.find(ref); it != auto_member.end() && it->second) {
      resolved = true;
    }
    const std::string cid =
        ContributionId(ref.legislative_period, ref.session_number, ref.contribution);
    cto_contribution[cid] = cto_contribution[cid] || resolved;
  }
  std::vector<std::string> with_cto, with_resolved, with_unresolved;
  for (const auto& [cid, resolved] : cto_contribution) {
    with_cto.push_back(cid);
    (resolved ? with_resolved : with_unresolved).push_back(cid);
  }
  std::vector<std::string> analysed;
  for (const auto& r : in.analysis->events) analysed.push_back(r.id);

  out << "metric,count,record_ids\n";
  out << "protocols," << in.corpus->size() << ",\n";
  out << "contributions," << contributions << ",\n";
  out << "presidency_actions," << president << ",\n";
  const auto row = [&](const char* name, const std::vector<std::string>& ids) {
    out << name << ',' << ids.size() << ',' << Ids(ids) << '\n';
  };
  row("contributions_with_cto", with_cto);
  row("contributions_with_resolved_pco", with_resolved);
  row("contributions_with_unresolved_pco", with_unresolved);
  row("events_detected", all);
  row("events_rule1", rule1);
  row("events_rule2", rule2);
  row("events_rejected", rejected);
  row("events_unannotated", unannotated);
  row("events_analysed", analysed);
}

void CauseTotals(std::ostream& out, const ReportInputs& in) {
  const auto lps = CorpusLps(*in.corpus);
  const auto& events = in.analysis->events;
  out << "group,label,total,median_per_lp,std_dev,record_ids\n";
  const auto row = [&](const char* group, const std::string& label,
                       Variable v) {
    const auto rule = Equals(v, label);
    const auto d = stats::GroupDescriptives(events, Variable::kLp, rule, lps);
    out << group << ',' << csv::Escape(label) << ',' << d.total << ','
        << fmt::Fixed(d.median, 2) << ',' << fmt::Fixed(d.std_dev, 2) << ','
        << Ids(IdsWhere(events, rule)) << '\n';
  };
  if (lps.empty()) return;
  for (auto cause : annotation::kAllCauses) {
    row("cause", std::string(annotation::CauseName(cause)), Variable::kCause);
  }
  for (const char* label : {"opposition", "coalition"}) {
    row("pco_affiliation", label, Variable::kPcoAffiliation);
  }
}

void GenderTable(std::ostream& out, const ReportInputs& in) {
  const auto& members = in.analysis_inputs->registry->members();
  const auto lps = CorpusLps(*in.corpus);
  const auto& events = in.analysis->events;
  out << "gender,pco_events,members_called,members_in_parliament,pct_called,"
         "median_called_per_lp,std_dev_called,median_pct_per_lp,std_dev_pct,"
         "record_ids\n";
  for (auto g : {registry::Gender::kMale, registry::Gender::kFemale}) {
    const std::string name(registry::GenderName(g));
    std::set<std::string> called;
    std::map<std::string, std::set<std::string>> called_in;
    std::vector<std::string> ids;
    for (const auto& r : events) {
      if (r.Get(Variable::kPcoGender) != name) continue;
      ids.push_back(r.id);
      called.insert(*r.Get(Variable::kPcoName));
      called_in[*r.Get(Variable::kLp)].insert(*r.Get(Variable::kPcoName));
    }
    std::size_t in_parliament = 0;
    std::map<std::string, std::size_t> serving_in;
    for (const auto& m : members) {
      if (m.gender != g) continue;
      bool any = false;
      for (const auto& lp : lps) {
        if (m.served_in(std::stoi(lp))) {
          ++serving_in[lp];
          any = true;
        }
      }
      in_parliament += any;
    }
    std::vector<double> per_lp, pct_per_lp;
    for (const auto& lp : lps) {
      const double n = static_cast<double>(called_in[lp].size());
      per_lp.push_back(n);
      const double serving = static_cast<double>(serving_in[lp]);
      pct_per_lp.push_back(serving > 0 ? 100.0 * n / serving : 0.0);
    }
    const double pct =
        in_parliament ? 100.0 * called.size() / in_parliament : 0.0;
    out << name << ',' << ids.size() << ',' << called.size() << ','
        << in_parliament << ',' << fmt::Fixed(pct, 2) << ',';
    if (lps.empty()) {
      out << ",,,,";
    } else {
      out << fmt::Fixed(stats::Median(per_lp), 2) << ','
          << fmt::Fixed(stats::PopulationStdDev(per_lp), 2) << ','
          << fmt::Fixed(stats::Median(pct_per_lp), 2) << ','
          << fmt::Fixed(stats::PopulationStdDev(pct_per_lp), 2) << ',';
    }
    out << Ids(ids) << '\n';
  }
}

void AssociationMatrix(std::ostream& out, const ReportInputs& in) {
  out << "variable1,variable2,n,chi2,df,p_value,cramers_v,effect,iterations,"
         "seed,note,record_ids\n";
  for (const auto& e : *in.associations) {
    out << stats::VariableName(e.row_variable) << ','
        << stats::VariableName(e.col_variable) << ',';
    if (e.result) {
      const auto& r = *e.result;
      out << r.n << ',' << fmt::Fixed(r.chi2, 3) << ',' << r.df << ','
          << fmt::Fixed(r.p_value, 4) << ',' << fmt::Fixed(r.cramers_v, 3)
          << ',' << stats::EffectName(r.effect) << ',' << r.iterations << ','
          << r.seed << ',';
    } else {
      out << ",,,,,,,,";
    }
    out << csv::Escape(e.note) << ',' << Ids(e.record_ids) << '\n';
  }
}

void PerLpSeries(std::ostream& out, const ReportInputs& in) {
  const auto lps = CorpusLps(*in.corpus);
  const auto& events = in.analysis->events;
  out << "lp,dimension,label,count,record_ids\n";
  const auto series = [&](Variable v, std::vector<std::string> labels) {
    if (labels.empty()) {
      std::set<std::string> seen;
      for (const auto& r : events) {
        if (r.Get(v)) seen.insert(*r.Get(v));
      }
      labels.assign(seen.begin(), seen.end());
    }
    for (const auto& lp : lps) {
      for (const auto& label : labels) {
        std::vector<std::string> ids;
        for (const auto& r : events) {
          if (r.Get(Variable::kLp) == lp && r.Get(v) == label) ids.push_back(r.id);
        }
        out << lp << ',' << stats::VariableName(v) << ',' << csv::Escape(label)
            << ',' << ids.size() << ',' << Ids(ids) << '\n';
      }
    }
  };
  std::vector<std::string> causes;
  for (auto c : annotation::kAllCauses) {
    causes.emplace_back(annotation::CauseName(c));
  }
  series(Variable::kCause, causes);
  series(Variable::kPcoGender, {"male", "female"});
  series(Variable::kPcoAffiliation, {"coalition", "opposition"});
  series(Variable::kPcoParty, {});
}

void TopicSeries(std::ostream& out, const ReportInputs& in) {
  const auto lps = CorpusLps(*in.corpus);
  const auto& contributions = in.analysis->contributions;
  std::map<std::string, std::size_t> with_cto;
  for (const auto& r : contributions) {
    if (r.Get(Variable::kHasCto) == "yes" && r.Get(Variable::kTopic)) {
      ++with_cto[*r.Get(Variable::kTopic)];
    }
  }
  // Rank by CtO count, then by topic declaration order.
  std::vector<std::pair<std::string, std::size_t>> ranked(with_cto.begin(),
                                                          with_cto.end());
  const auto order = [](const std::string& code) {
    return static_cast<int>(*topics::ParseTopic(code));
  };
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second
                                : order(a.first) < order(b.first);
  });
  if (ranked.size() > 10) ranked.resize(10);

  out << "rank,topic,lp,contributions,contributions_with_cto,record_ids\n";
  for (std::size_t rank = 0; rank < ranked.size(); ++rank) {
    const auto& topic = ranked[rank].first;
    for (const auto& lp : lps) {
      std::size_t total = 0;
      std::vector<std::string> ids;
      for (const auto& r : contributions) {
        if (r.Get(Variable::kLp) != lp || r.Get(Variable::kTopic) != topic) continue;
        ++total;
        if (r.Get(Variable::kHasCto) == "yes") ids.push_back(r.id);
      }
      out << rank + 1 << ',' << topic << ',' << lp << ',' << total << ','
          << ids.size() << ',' << Ids(ids) << '\n';
    }
  }
}

}  // namespace

std::vector<std::string> WriteReports(const PipelineConfig& config,
                                      const ReportInputs& in) {
  const std::vector<std::pair<const char*, void (*)(std::ostream&, const ReportInputs&)>>
      reports = {
          {artifact::kCorpusCounts, &CorpusCounts},
          {artifact::kCauseTotals, &CauseTotals},
          {artifact::kGender, &GenderTable},
          {artifact::kAssociationMatrix, &AssociationMatrix},
          {artifact::kPerLpSeries, &PerLpSeries},
          {artifact::kTopicSeries, &TopicSeries},
      };
  std::vector<std::string> written;
  for (const auto& [name, render] : reports) {
    WriteArtifact(config, name, [&](std::ostream& out) { render(out, in); });
    written.emplace_back(name);
  }
  return written;
}

}  // namespace cto::pipeline::internal
