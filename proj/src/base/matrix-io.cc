// base/matrix-io.cc

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

#include "base/matrix-io.h"

#include <cstdint>
#include <fstream>
#include <vector>

#include "base/error.h"

namespace clearwave {

// This code assumes a little-endian host, which holds for every platform the
// toolkit targets.

void WriteBytes(std::ostream &os, const void *data, std::size_t n) {
  os.write(static_cast<const char *>(data), static_cast<std::streamsize>(n));
  if (!os) throw DataError("write failed");
}

void ReadBytes(std::istream &is, void *data, std::size_t n,
               const std::string &what) {
  is.read(static_cast<char *>(data), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n)
    throw FormatError("truncated input while reading " + what);
}

void WriteMatrix(const std::string &path, const Eigen::MatrixXd &m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open for writing: " + path);
  const std::uint32_t rows = static_cast<std::uint32_t>(m.rows());
  const std::uint32_t cols = static_cast<std::uint32_t>(m.cols());
  WriteBytes(os, &rows, sizeof rows);
  WriteBytes(os, &cols, sizeof cols);
  std::vector<double> row(cols);
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) row[c] = m(r, c);
    WriteBytes(os, row.data(), sizeof(double) * cols);
  }
}

Eigen::MatrixXd ReadMatrix(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open: " + path);
  std::uint32_t rows = 0, cols = 0;
  ReadBytes(is, &rows, sizeof rows, "matrix header");
  ReadBytes(is, &cols, sizeof cols, "matrix header");
  Eigen::MatrixXd m(rows, cols);
  std::vector<double> row(cols);
  for (std::uint32_t r = 0; r < rows; ++r) {
    ReadBytes(is, row.data(), sizeof(double) * cols, "matrix data");
    for (std::uint32_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

}  // namespace clearwave
