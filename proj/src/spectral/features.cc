// spectral/features.cc

// Copyright 2026  Clearwave Authors

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

#include "spectral/features.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "base/matrix-io.h"

namespace clearwave {

Eigen::MatrixXd ComputeDeltas(const Eigen::MatrixXd &features, int window) {
  CLEARWAVE_CHECK_ARG(window >= 1, "ComputeDeltas: window >= 1");
  CLEARWAVE_CHECK_ARG(features.cols() >= 1, "ComputeDeltas: empty input");
  const int T = static_cast<int>(features.cols());
  double denom = 0.0;
  for (int w = 1; w <= window; ++w) denom += 2.0 * w * w;

  Eigen::MatrixXd deltas(features.rows(), T);
  for (int t = 0; t < T; ++t) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(features.rows());
    for (int w = 1; w <= window; ++w) {
      const int hi = std::min(t + w, T - 1);
      const int lo = std::max(t - w, 0);
      acc += w * (features.col(hi) - features.col(lo));
    }
    deltas.col(t) = acc / denom;
  }
  return deltas;
}

FeatureStats FitStats(const std::vector<Eigen::MatrixXd> &features) {
  CLEARWAVE_CHECK_ARG(!features.empty(), "FitStats: no feature matrices");
  const int dim = static_cast<int>(features.front().rows());
  double count = 0.0;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sum_sq = Eigen::VectorXd::Zero(dim);
  for (const auto &m : features) {
    CLEARWAVE_CHECK_ARG(m.rows() == dim, "FitStats: inconsistent dims");
    count += static_cast<double>(m.cols());
    sum += m.rowwise().sum();
    sum_sq += m.cwiseProduct(m).rowwise().sum();
  }
  CLEARWAVE_CHECK_ARG(count > 0, "FitStats: no frames");

  FeatureStats stats;
  stats.mean = sum / count;
  Eigen::VectorXd var = sum_sq / count - stats.mean.cwiseProduct(stats.mean);
  stats.std = var.cwiseMax(0.0).cwiseSqrt();
  for (int i = 0; i < dim; ++i)
    if (stats.std(i) <= 0.0) stats.std(i) = 1.0;
  return stats;
}

Eigen::MatrixXd Standardize(const Eigen::MatrixXd &features,
                            const FeatureStats &stats) {
  CLEARWAVE_CHECK_ARG(features.rows() == stats.mean.size(),
                      "Standardize: dimension mismatch");
  return (features.colwise() - stats.mean).array().colwise() /
         stats.std.array();
}

Eigen::MatrixXd Unstandardize(const Eigen::MatrixXd &features,
                              const FeatureStats &stats) {
  CLEARWAVE_CHECK_ARG(features.rows() == stats.mean.size(),
                      "Unstandardize: dimension mismatch");
  return (features.array().colwise() * stats.std.array()).matrix().colwise() +
         stats.mean;
}

void DumpFeatures(const std::string &path, const Eigen::MatrixXd &features,
                  const FeatureConfig &config, const FeatureStats *stats) {
  WriteMatrix(path, features);

  nlohmann::json j;
  j["frame_size"] = config.frame_size;
  j["hop"] = config.hop;
  j["sample_rate"] = config.sample_rate;
  j["bands"] = config.bands;
  j["log_floor"] = config.log_floor;
  j["delta_window"] = config.delta_window;
  if (stats != nullptr) {
    j["mean"] = std::vector<double>(stats->mean.data(),
                                    stats->mean.data() + stats->mean.size());
    j["std"] = std::vector<double>(stats->std.data(),
                                   stats->std.data() + stats->std.size());
  }
  std::ofstream os(path + ".json");
  if (!os) throw DataError("cannot write sidecar: " + path + ".json");
  os << j.dump(2) << "\n";
}

}  // namespace clearwave
