// spectral/mel.cc

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

#include "spectral/mel.h"

#include <algorithm>
#include <cmath>

namespace clearwave {

MelFilterbank::MelFilterbank(int bands, int bins, int sample_rate) {
  CLEARWAVE_CHECK_ARG(bands >= 1 && bins >= 2, "MelFilterbank: bad dims");
  CLEARWAVE_CHECK_ARG(sample_rate > 0, "MelFilterbank: bad sample rate");

  const int fft_size = (bins - 1) * 2;
  const double bin_hz = static_cast<double>(sample_rate) / fft_size;
  const double mel_hi = HzToMel(sample_rate / 2.0);

  // bands + 2 edge points, equally spaced in Mel; band b spans
  // [edge_b, edge_{b+2}] with its peak at edge_{b+1}.
  std::vector<double> edge_hz(bands + 2);
  for (int i = 0; i < bands + 2; ++i)
    edge_hz[i] = MelToHz(mel_hi * i / (bands + 1));

  weights_ = Eigen::MatrixXd::Zero(bands, bins);
  for (int b = 0; b < bands; ++b) {
    const double lo = edge_hz[b], center = edge_hz[b + 1], hi = edge_hz[b + 2];
    for (int k = 0; k < bins; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f < hi)
        w = f <= center ? (f - lo) / (center - lo) : (hi - f) / (hi - center);
      weights_(b, k) = std::max(w, 0.0);
    }
  }
  Finish();
}

MelFilterbank::MelFilterbank(Eigen::MatrixXd weights)
    : weights_(std::move(weights)) {
  CLEARWAVE_CHECK_ARG(weights_.rows() >= 1 && weights_.cols() >= 1,
                      "MelFilterbank: empty weight matrix");
  CLEARWAVE_CHECK_ARG(weights_.minCoeff() >= 0.0,
                      "MelFilterbank: weights must be nonnegative");
  Finish();
}

void MelFilterbank::Finish() {
  for (int b = 0; b < bands(); ++b) {
    if (weights_.row(b).maxCoeff() <= 0.0)
      throw ConfigError("MelFilterbank: band " + std::to_string(b) +
                        " has no positive weight; too many bands for this "
                        "resolution");
  }
  // Computed once per filterbank; harmless numerically since the triangles
  // give a well-conditioned, full-row-rank matrix.
  pseudo_inverse_ = weights_.completeOrthogonalDecomposition().pseudoInverse();
}

Eigen::MatrixXd MelApply(const Eigen::MatrixXd &magnitudes,
                         const MelFilterbank &fb) {
  CLEARWAVE_CHECK_ARG(magnitudes.rows() == fb.bins(),
                      "MelApply: magnitude rows != filterbank bins");
  return fb.weights() * magnitudes;
}

Eigen::MatrixXd MelForwardLog(const Eigen::MatrixXd &magnitudes,
                              const MelFilterbank &fb, double floor) {
  return MelApply(magnitudes, fb)
      .cwiseMax(floor)
      .unaryExpr([](double v) { return std::log(v); });
}

Eigen::MatrixXd MelBackward(const Eigen::MatrixXd &band_energies,
                            const MelFilterbank &fb) {
  CLEARWAVE_CHECK_ARG(band_energies.rows() == fb.bands(),
                      "MelBackward: band rows != filterbank bands");
  return (fb.pseudo_inverse() * band_energies).cwiseMax(0.0);
}

}  // namespace clearwave
