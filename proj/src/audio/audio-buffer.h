// audio/audio-buffer.h

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

#ifndef CLEARWAVE_AUDIO_AUDIO_BUFFER_H_
#define CLEARWAVE_AUDIO_AUDIO_BUFFER_H_

#include <cstddef>
#include <vector>

#include "base/error.h"

namespace clearwave {

// Multi-channel time-domain samples, nominally in [-1, 1]. Channels always
// have equal length. Treated as immutable once filled.
struct AudioBuffer {
  int sample_rate = 0;
  std::vector<std::vector<double>> channels;

  AudioBuffer() = default;
  AudioBuffer(int num_channels, std::size_t length, int rate)
      : sample_rate(rate),
        channels(num_channels, std::vector<double>(length, 0.0)) {
    CLEARWAVE_CHECK_ARG(num_channels >= 1, "AudioBuffer: channels >= 1");
    CLEARWAVE_CHECK_ARG(rate > 0, "AudioBuffer: sample_rate > 0");
  }

  int num_channels() const { return static_cast<int>(channels.size()); }
  std::size_t length() const {
    return channels.empty() ? 0 : channels.front().size();
  }

  const std::vector<double> &channel(int c) const {
    CLEARWAVE_CHECK_ARG(c >= 0 && c < num_channels(),
                        "AudioBuffer: channel out of range");
    return channels[c];
  }
  std::vector<double> &channel(int c) {
    CLEARWAVE_CHECK_ARG(c >= 0 && c < num_channels(),
                        "AudioBuffer: channel out of range");
    return channels[c];
  }

  void CheckConsistent() const {
    CLEARWAVE_CHECK_ARG(!channels.empty(), "AudioBuffer: no channels");
    for (const auto &ch : channels)
      CLEARWAVE_CHECK_ARG(ch.size() == channels.front().size(),
                          "AudioBuffer: channel lengths differ");
    CLEARWAVE_CHECK_ARG(sample_rate > 0, "AudioBuffer: sample_rate > 0");
  }
};

// Shifts one channel by `delay` samples (positive = later in time), zero
// padding the vacated end. Other channels are untouched.
AudioBuffer ShiftChannel(const AudioBuffer &buffer, int channel, long delay);

inline AudioBuffer ShiftChannel(const AudioBuffer &buffer, int channel,
                                long delay) {
  buffer.CheckConsistent();
  CLEARWAVE_CHECK_ARG(channel >= 0 && channel < buffer.num_channels(),
                      "ShiftChannel: channel out of range");
  const long n = static_cast<long>(buffer.length());
  CLEARWAVE_CHECK_ARG(delay > -n && delay < n,
                      "ShiftChannel: |delay| must be < length");
  AudioBuffer out = buffer;
  std::vector<double> &ch = out.channels[channel];
  const std::vector<double> &src = buffer.channels[channel];
  for (long i = 0; i < n; ++i) {
    const long j = i - delay;
    ch[i] = (j >= 0 && j < n) ? src[j] : 0.0;
  }
  return out;
}

}  // namespace clearwave

#endif  // CLEARWAVE_AUDIO_AUDIO_BUFFER_H_
