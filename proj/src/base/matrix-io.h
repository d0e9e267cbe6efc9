// base/matrix-io.h

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

#ifndef CLEARWAVE_BASE_MATRIX_IO_H_
#define CLEARWAVE_BASE_MATRIX_IO_H_

#include <Eigen/Dense>
#include <string>

namespace clearwave {

// Binary matrix file: uint32 rows, uint32 cols (little-endian), then
// rows*cols float64 little-endian values in row-major order.
void WriteMatrix(const std::string &path, const Eigen::MatrixXd &m);
Eigen::MatrixXd ReadMatrix(const std::string &path);

// Little-endian scalar I/O helpers shared by the binary formats.
void WriteBytes(std::ostream &os, const void *data, std::size_t n);
void ReadBytes(std::istream &is, void *data, std::size_t n,
               const std::string &what);

}  // namespace clearwave

#endif  // CLEARWAVE_BASE_MATRIX_IO_H_
