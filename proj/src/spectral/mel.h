// spectral/mel.h

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

#ifndef CLEARWAVE_SPECTRAL_MEL_H_
#define CLEARWAVE_SPECTRAL_MEL_H_

#include <Eigen/Dense>

#include "base/error.h"

namespace clearwave {

inline double HzToMel(double hz) { return 1127.0 * std::log1p(hz / 700.0); }
inline double MelToHz(double mel) { return 700.0 * std::expm1(mel / 1127.0); }

// Triangular band-integration matrix (bands x bins) with band centers equally
// spaced on the Mel scale from 0 to Nyquist, plus its Moore-Penrose
// pseudo-inverse for mapping band energies back to magnitude spectra.
class MelFilterbank {
 public:
  MelFilterbank(int bands, int bins, int sample_rate);

  // For tests and degenerate configurations: wrap an explicit weight matrix.
  explicit MelFilterbank(Eigen::MatrixXd weights);

  int bands() const { return static_cast<int>(weights_.rows()); }
  int bins() const { return static_cast<int>(weights_.cols()); }

  const Eigen::MatrixXd &weights() const { return weights_; }
  const Eigen::MatrixXd &pseudo_inverse() const { return pseudo_inverse_; }

 private:
  void Finish();

  Eigen::MatrixXd weights_;         // bands x bins, nonnegative
  Eigen::MatrixXd pseudo_inverse_;  // bins x bands
};

// Band energies: weights * magnitudes, per frame. Inputs must be >= 0.
Eigen::MatrixXd MelApply(const Eigen::MatrixXd &magnitudes,
                         const MelFilterbank &fb);

// Log band energies with flooring: log(max(M * |X|, floor)).
Eigen::MatrixXd MelForwardLog(const Eigen::MatrixXd &magnitudes,
                              const MelFilterbank &fb, double floor = 1e-10);

// Least-squares back-transformation clamped to nonnegative magnitudes:
// max(pinv(M) * bands, 0).
Eigen::MatrixXd MelBackward(const Eigen::MatrixXd &band_energies,
                            const MelFilterbank &fb);

}  // namespace clearwave

#endif  // CLEARWAVE_SPECTRAL_MEL_H_
