// objectives/codebook-stats.cc

// Copyright 2026  The M2DS2 Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "m2ds2/objectives/codebook-stats.h"

#include <cmath>

#include "json.hpp"
#include "m2ds2/base/error.h"
#include "m2ds2/objectives/diversity-loss.h"

namespace m2ds2 {
namespace objectives {

double CodebookStats::MeanEffectiveUsage() const {
  if (effective_usage.empty()) return 0.0;
  double s = 0.0;
  for (double e : effective_usage) s += e;
  return s / static_cast<double>(effective_usage.size());
}

std::string CodebookStats::ToJson() const {
  nlohmann::json j;
  j["num_codebooks"] = num_codebooks;
  j["codebook_size"] = codebook_size;
  j["entropy"] = entropy;
  j["effective_usage"] = effective_usage;
  j["mean_effective_usage"] = MeanEffectiveUsage();
  j["usage"] = usage;
  return j.dump();
}

namespace {
void Finish(CodebookStats *s) {
  for (const auto &u : s->usage) {
    Eigen::Map<const Eigen::RowVectorXd> p(u.data(), static_cast<Eigen::Index>(u.size()));
    double h = Entropy(p);
    s->entropy.push_back(h);
    s->effective_usage.push_back(std::exp(h));
  }
}
}  // namespace

CodebookStats CodebookStatsFromIndices(const std::vector<std::vector<int>> &indices, int G, int V) {
  if (indices.empty()) throw DataError("no code indices");
  if (G < 1 || V < 1) throw ConfigError("bad codebook shape");
  CodebookStats s;
  s.num_codebooks = G;
  s.codebook_size = V;
  std::vector<std::vector<long long>> counts(G, std::vector<long long>(V, 0));
  for (const auto &tuple : indices) {
    if (static_cast<int>(tuple.size()) != G) throw DataError("index tuple size != G");
    for (int g = 0; g < G; ++g) {
      if (tuple[g] < 0 || tuple[g] >= V) throw DataError("code index out of range");
      ++counts[g][tuple[g]];
    }
  }
  const double n = static_cast<double>(indices.size());
  for (int g = 0; g < G; ++g) {
    std::vector<double> u(V);
    for (int v = 0; v < V; ++v) u[v] = static_cast<double>(counts[g][v]) / n;
    s.usage.push_back(std::move(u));
  }
  Finish(&s);
  return s;
}

CodebookStats CodebookStatsFromDistribution(const acoustic::Matrix &pbar, int G) {
  if (G < 1 || pbar.rows() != 1 || pbar.cols() % G != 0)
    throw ConfigError("pbar must be one row of G blocks");
  CodebookStats s;
  s.num_codebooks = G;
  s.codebook_size = static_cast<int>(pbar.cols() / G);
  for (int g = 0; g < G; ++g) {
    std::vector<double> u(s.codebook_size);
    for (int v = 0; v < s.codebook_size; ++v) u[v] = pbar(0, g * s.codebook_size + v);
    s.usage.push_back(std::move(u));
  }
  Finish(&s);
  return s;
}

}  // namespace objectives
}  // namespace m2ds2
