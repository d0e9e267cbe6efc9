// spectral/features.h

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

#ifndef CLEARWAVE_SPECTRAL_FEATURES_H_
#define CLEARWAVE_SPECTRAL_FEATURES_H_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "base/error.h"

namespace clearwave {

// Per-dimension standardization parameters (population statistics).
struct FeatureStats {
  Eigen::VectorXd mean;
  Eigen::VectorXd std;
};

// Analysis parameters shared by the feature extractors and dumped to the
// JSON sidecar next to feature matrices.
struct FeatureConfig {
  int frame_size = 1024;
  int hop = 160;  // 10 ms at 16 kHz
  int sample_rate = 16000;
  int bands = 40;
  double log_floor = 1e-10;
  int delta_window = 2;
};

// Regression deltas with window W: d_t = sum_{w=1..W} w*(x_{t+w} - x_{t-w})
// / (2*sum w^2), edges replicated.
Eigen::MatrixXd ComputeDeltas(const Eigen::MatrixXd &features, int window = 2);

// Fits population mean/std per dimension over the concatenated frames of all
// matrices. Dimensions with zero variance get std = 1.
FeatureStats FitStats(const std::vector<Eigen::MatrixXd> &features);

Eigen::MatrixXd Standardize(const Eigen::MatrixXd &features,
                            const FeatureStats &stats);
Eigen::MatrixXd Unstandardize(const Eigen::MatrixXd &features,
                              const FeatureStats &stats);

// Binary matrix dump plus a JSON sidecar (<path>.json) recording the analysis
// configuration and, when given, the standardization statistics.
void DumpFeatures(const std::string &path, const Eigen::MatrixXd &features,
                  const FeatureConfig &config,
                  const FeatureStats *stats = nullptr);

}  // namespace clearwave

#endif  // CLEARWAVE_SPECTRAL_FEATURES_H_
