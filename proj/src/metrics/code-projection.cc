// metrics/code-projection.cc

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

#include "m2ds2/metrics/code-projection.h"

#include <fstream>
#include <sstream>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace metrics {

Eigen::MatrixXd ProjectCodes(const Eigen::MatrixXd &vectors, int dims) {
  if (vectors.rows() < 2) throw DataError("projection needs at least 2 vectors");
  if (dims < 1 || dims > vectors.cols())
    throw ConfigError("projection dims must be in [1, " + std::to_string(vectors.cols()) + "]");
  Eigen::RowVectorXd mean = vectors.colwise().mean();
  Eigen::MatrixXd centered = vectors.rowwise() - mean;
  Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(vectors.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  // Eigen sorts eigenvalues ascending.
  Eigen::MatrixXd axes(vectors.cols(), dims);
  for (int k = 0; k < dims; ++k) {
    Eigen::VectorXd v = es.eigenvectors().col(vectors.cols() - 1 - k);
    Eigen::Index arg;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0) v = -v;
    axes.col(k) = v;
  }
  return centered * axes;
}

std::string ProjectionCsv(const Eigen::MatrixXd &points, const std::vector<std::string> &labels) {
  if (static_cast<size_t>(points.rows()) != labels.size())
    throw ConfigError("one domain label per point is required");
  std::ostringstream os;
  for (Eigen::Index c = 0; c < points.cols(); ++c)
    os << (c == 0 ? "x" : c == 1 ? "y" : "x" + std::to_string(c + 1)) << ",";
  os << "domain\n";
  for (Eigen::Index r = 0; r < points.rows(); ++r) {
    for (Eigen::Index c = 0; c < points.cols(); ++c) os << FormatShortest(points(r, c)) << ",";
    os << labels[r] << "\n";
  }
  return os.str();
}

void WriteProjectionCsv(const Eigen::MatrixXd &points, const std::vector<std::string> &labels,
                        const std::string &path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << ProjectionCsv(points, labels);
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace metrics
}  // namespace m2ds2
