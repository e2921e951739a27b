// metrics/code-projection.h

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

#ifndef M2DS2_METRICS_CODE_PROJECTION_H_
#define M2DS2_METRICS_CODE_PROJECTION_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace m2ds2 {
namespace metrics {

// Centered PCA: rows of `vectors` projected onto the top `dims` principal
// axes, largest variance first.  Each axis is signed so that its largest
// absolute component is positive.  Throws DataError for fewer than 2 rows,
// ConfigError when dims is not in [1, cols].
Eigen::MatrixXd ProjectCodes(const Eigen::MatrixXd &vectors, int dims = 2);

// CSV with header "x,y,domain" (further columns named x3, x4, ...).
void WriteProjectionCsv(const Eigen::MatrixXd &points, const std::vector<std::string> &labels,
                        const std::string &path);
std::string ProjectionCsv(const Eigen::MatrixXd &points, const std::vector<std::string> &labels);

}  // namespace metrics
}  // namespace m2ds2

#endif  // M2DS2_METRICS_CODE_PROJECTION_H_
