// audio/wav-io.h

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

#ifndef CLEARWAVE_AUDIO_WAV_IO_H_
#define CLEARWAVE_AUDIO_WAV_IO_H_

#include <string>

#include "audio/audio-buffer.h"

namespace clearwave {

enum class WavEncoding { kPcm16, kFloat32 };

// Reads RIFF/WAVE files holding 16-bit PCM or 32-bit IEEE float samples,
// interleaved multi-channel. Integer PCM is scaled by 1/32768 so that -32768
// maps to -1.0. Throws FormatError on malformed headers and UnsupportedError
// on other encodings.
AudioBuffer ReadWav(const std::string &path);

// Writes `buffer` as RIFF/WAVE. Samples outside [-1, 1] are clamped; when
// that happens and `clipped` is non-null it is set to true. PCM16 writing
// quantizes with round(x * 32768) clamped to int16, giving a round-trip
// error of at most 2^-15.
void WriteWav(const AudioBuffer &buffer, const std::string &path,
              WavEncoding encoding = WavEncoding::kFloat32,
              bool *clipped = nullptr);

}  // namespace clearwave

#endif  // CLEARWAVE_AUDIO_WAV_IO_H_
