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

#include "cto/stats/association.h"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "common/csv.h"
#include "common/format.h"
#include "common/json_util.h"
#include "cto/error.h"

namespace cto::stats {

using jsonutil::Json;

namespace {

constexpr int kBlock = 1024;

// Replicate statistics are compared with a small relative slack so that
// tables equal to the observed one are not lost to rounding.
constexpr double kTieSlack = 1.0 - 64 * std::numeric_limits<double>::epsilon();

// Uniform integer in [0, bound) without modulo bias (Lemire).
std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::mt19937_64 BlockStream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

struct BlockTally {
  std::int64_t exceed = 0;
  double chi2_sum = 0.0;
};

}  // namespace

MonteCarloResult MonteCarlo(const ContingencyTable& table, int iterations,
                            std::uint64_t seed, unsigned threads) {
  if (iterations < kMinIterations) {
    throw ValidationError("monte carlo needs at least " +
                          std::to_string(kMinIterations) + " iterations, got " +
                          std::to_string(iterations));
  }
  const double observed = PearsonChi2(table).statistic;
  const auto row_totals = table.RowTotals();
  const auto col_totals = table.ColTotals();
  const std::size_t cols = table.cols();
  const std::size_t cells = table.rows() * cols;

  // Observations as (row, col) codes in row-major order.
  std::vector<std::uint32_t> row_of, col_of;
  row_of.reserve(table.n());
  col_of.reserve(table.n());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::int64_t k = 0; k < table.at(r, c); ++k) {
        row_of.push_back(static_cast<std::uint32_t>(r));
        col_of.push_back(static_cast<std::uint32_t>(c));
      }
    }
  }

  const int blocks = (iterations + kBlock - 1) / kBlock;
  std::vector<BlockTally> tallies(blocks);
  const auto run_block = [&](int b) {
    auto rng = BlockStream(seed, static_cast<std::uint64_t>(b));
    std::vector<std::uint32_t> perm;
    std::vector<std::int64_t> counts(cells);
    const int first = b * kBlock;
    const int last = std::min(iterations, first + kBlock);
    BlockTally tally;
    for (int i = first; i < last; ++i) {
      perm = col_of;
      for (std::size_t k = perm.size(); k > 1; --k) {
        std::swap(perm[k - 1], perm[Bounded(rng, k)]);
      }
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t k = 0; k < perm.size(); ++k) {
        ++counts[row_of[k] * cols + perm[k]];
      }
      const double chi2 =
          PearsonStatistic(counts, row_totals, col_totals, table.n());
      tally.chi2_sum += chi2;
      if (chi2 >= observed * kTieSlack) ++tally.exceed;
    }
    tallies[b] = tally;
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  if (workers == 1) {
    for (int b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int b = static_cast<int>(w); b < blocks;
             b += static_cast<int>(workers)) {
          run_block(b);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  MonteCarloResult out;
  double sum = 0.0;
  for (const auto& t : tallies) {
    out.exceed += t.exceed;
    sum += t.chi2_sum;
  }
  out.iterations = iterations;
  out.seed = seed;
  out.mean_chi2 = sum / iterations;
  out.p_value = static_cast<double>(1 + out.exceed) / (iterations + 1.0);
  return out;
}

double CramersV(double chi2, std::int64_t n, std::size_t rows,
                std::size_t cols) {
  if (n <= 0) throw DomainError("cramers_v: n must be positive");
  if (std::min(rows, cols) < 2) {
    throw DomainError("cramers_v: table needs at least 2 rows and 2 columns");
  }
  if (!(chi2 >= 0.0)) throw DomainError("cramers_v: chi2 must be >= 0");
  const double k = static_cast<double>(std::min(rows, cols) - 1);
  const double v = std::sqrt(chi2 / static_cast<double>(n) / k);
  return std::min(v, 1.0);
}

Effect EffectLabel(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("effect_label: V outside [0, 1]");
  }
  if (v < 0.1) return Effect::kNegligible;
  if (v < 0.3) return Effect::kSmall;
  if (v < 0.5) return Effect::kMedium;
  return Effect::kLarge;
}

namespace {
constexpr std::array<std::string_view, 4> kEffectNames = {"negligible", "small",
                                                          "medium", "large"};
constexpr std::array<std::string_view, 2> kVSourceNames = {"observed",
                                                           "replicate_mean"};
}  // namespace

std::string_view EffectName(Effect e) {
  return kEffectNames[static_cast<std::size_t>(e)];
}

std::optional<Effect> ParseEffect(std::string_view name) {
  for (std::size_t i = 0; i < kEffectNames.size(); ++i) {
    if (kEffectNames[i] == name) return static_cast<Effect>(i);
  }
  return std::nullopt;
}

std::string_view VSourceName(VSource s) {
  return kVSourceNames[static_cast<std::size_t>(s)];
}

std::optional<VSource> ParseVSource(std::string_view name) {
  for (std::size_t i = 0; i < kVSourceNames.size(); ++i) {
    if (kVSourceNames[i] == name) return static_cast<VSource>(i);
  }
  return std::nullopt;
}

AssociationResult Associate(const ContingencyTable& table,
                            const AssociationOptions& options) {
  const ChiSquare chi = PearsonChi2(table);
  const MonteCarloResult mc =
      MonteCarlo(table, options.iterations, options.seed, options.threads);
  AssociationResult r;
  r.row_variable = table.row_variable();
  r.col_variable = table.col_variable();
  r.rows = table.rows();
  r.cols = table.cols();
  r.n = table.n();
  r.chi2 = chi.statistic;
  r.df = chi.df;
  r.p_value = mc.p_value;
  r.iterations = mc.iterations;
  r.seed = mc.seed;
  r.v_source = options.v_source;
  const double v_chi2 =
      options.v_source == VSource::kObserved ? chi.statistic : mc.mean_chi2;
  r.cramers_v = CramersV(v_chi2, r.n, r.rows, r.cols);
  r.effect = EffectLabel(r.cramers_v);
  boost::math::chi_squared dist(static_cast<double>(chi.df));
  r.asymptotic_p = boost::math::cdf(boost::math::complement(dist, chi.statistic));
  return r;
}

void WriteAssociationsJson(std::ostream& out,
                           const std::vector<AssociationEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries) {
    Json j;
    j["variable1"] = VariableName(e.row_variable);
    j["variable2"] = VariableName(e.col_variable);
    if (e.result) {
      const auto& r = *e.result;
      j["rows"] = r.rows;
      j["cols"] = r.cols;
      j["n"] = r.n;
      j["chi2"] = r.chi2;
      j["df"] = r.df;
      j["p_value"] = r.p_value;
      j["iterations"] = r.iterations;
      j["seed"] = r.seed;
      j["cramers_v"] = r.cramers_v;
      j["effect"] = EffectName(r.effect);
      j["v_source"] = VSourceName(r.v_source);
      j["asymptotic_p"] = r.asymptotic_p;
    }
    j["note"] = e.note;
    j["record_ids"] = e.record_ids;
    list.push_back(std::move(j));
  }
  Json doc;
  doc["associations"] = std::move(list);
  out << doc.dump(2) << '\n';
}

std::vector<AssociationEntry> ReadAssociationsJson(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed associations: ") + e.what(), 0,
                     e.byte);
  }
  if (!doc.is_object() || !doc.contains("associations") ||
      !doc["associations"].is_array()) {
    throw SchemaError("associations");
  }
  std::vector<AssociationEntry> out;
  for (const auto& j : doc["associations"]) {
    AssociationEntry e;
    auto var = [&](const char* key) {
      auto v = ParseVariable(jsonutil::Get<std::string>(j, key));
      if (!v) throw SchemaError(key, "unknown variable");
      return *v;
    };
    e.row_variable = var("variable1");
    e.col_variable = var("variable2");
    e.note = jsonutil::GetOptional<std::string>(j, "note").value_or("");
    e.record_ids = jsonutil::GetOptional<std::vector<std::string>>(j, "record_ids")
                       .value_or(std::vector<std::string>{});
    if (j.contains("chi2")) {
      AssociationResult r;
      r.row_variable = e.row_variable;
      r.col_variable = e.col_variable;
      r.rows = jsonutil::Get<std::size_t>(j, "rows");
      r.cols = jsonutil::Get<std::size_t>(j, "cols");
      r.n = jsonutil::Get<std::int64_t>(j, "n");
      r.chi2 = jsonutil::Get<double>(j, "chi2");
      r.df = jsonutil::Get<int>(j, "df");
      r.p_value = jsonutil::Get<double>(j, "p_value");
      r.iterations = jsonutil::Get<int>(j, "iterations");
      r.seed = jsonutil::Get<std::uint64_t>(j, "seed");
      r.cramers_v = jsonutil::Get<double>(j, "cramers_v");
      auto effect = ParseEffect(jsonutil::Get<std::string>(j, "effect"));
      if (!effect) throw SchemaError("effect");
      r.effect = *effect;
      auto source = ParseVSource(jsonutil::Get<std::string>(j, "v_source"));
      if (!source) throw SchemaError("v_source");
      r.v_source = *source;
      r.asymptotic_p = jsonutil::Get<double>(j, "asymptotic_p");
      e.result = r;
    }
    out.push_back(std::move(e));
  }
  return out;
}

void WriteAssociationsCsv(std::ostream& out,
                          const std::vector<AssociationEntry>& entries) {
  out << "variable1,variable2,n,chi2,df,p_value,cramers_v,effect,iterations,"
         "seed,asymptotic_p,note\n";
  for (const auto& e : entries) {
    out << VariableName(e.row_variable) << ',' << VariableName(e.col_variable)
        << ',';
    if (e.result) {
      const auto& r = *e.result;
      out << r.n << ',' << fmt::Fixed(r.chi2, 3) << ',' << r.df << ','
          << fmt::Fixed(r.p_value, 4) << ',' << fmt::Fixed(r.cramers_v, 3) << ','
          << EffectName(r.effect) << ',' << r.iterations << ',' << r.seed
          << ',' << fmt::Fixed(r.asymptotic_p, 4) << ',';
    } else {
      out << ",,,,,,,,,";
    }
    out << csv::Escape(e.note) << '\n';
  }
}

}  // namespace cto::stats
