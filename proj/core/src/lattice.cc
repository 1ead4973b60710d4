// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>

#include "rydgate/error.h"
#include "rydgate/fidelity.h"

namespace rydgate {

namespace {

constexpr double kQuarterTurn = kPi / 2;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::vector<MapMaximum> find_local_maxima(const FidelityMap &map, double threshold) {
    std::vector<MapMaximum> maxima;
    const std::size_t rows = map.rows();
    const std::size_t cols = map.cols();
    if (rows < 3 || cols < 3) {
        return maxima;
    }
    for (std::size_t i = 1; i + 1 < rows; ++i) {
        for (std::size_t j = 1; j + 1 < cols; ++j) {
            double f = map.at(i, j);
            if (f < threshold) {
                continue;
            }
            bool strict = true;
            for (int di = -1; di <= 1 && strict; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if ((di != 0 || dj != 0) && map.at(i + di, j + dj) >= f) {
                        strict = false;
                        break;
                    }
                }
            }
            if (strict) {
                maxima.push_back({map.axis_odd[i], map.axis_even[j], f});
            }
        }
    }
    std::stable_sort(maxima.begin(), maxima.end(),
                     [](const MapMaximum &x, const MapMaximum &y) { return x.fidelity > y.fidelity; });
    return maxima;
}

double lattice_angle_distance(double alpha, double beta) {
    return std::abs(std::remainder(alpha - beta, kQuarterTurn));
}

LatticeReport lattice_analysis(const FidelityMap &map, double threshold) {
    if (map.values.empty()) {
        throw Error(ErrorCode::kEmptyGrid, "empty fidelity map");
    }
    LatticeReport report{find_local_maxima(map, threshold), 0.0, 0.0};
    const std::size_t n = report.maxima.size();
    if (n < 2) {
        throw Error(ErrorCode::kNoMaximaFound, "fewer than two local maxima above the threshold");
    }
    std::vector<double> distances;
    std::vector<double> angles;
    for (std::size_t p = 0; p < n; ++p) {
        double best = std::numeric_limits<double>::infinity();
        double dx = 0, dy = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) {
                continue;
            }
            double x = report.maxima[q].a_odd - report.maxima[p].a_odd;
            double y = report.maxima[q].a_even - report.maxima[p].a_even;
            double d = std::hypot(x, y);
            if (d < best) {
                best = d;
                dx = x;
                dy = y;
            }
        }
        distances.push_back(best);
        angles.push_back(std::atan2(dy, dx));
    }
    // Displacements of a square lattice point along four directions a quarter
    // turn apart; fold them around their fourfold circular mean.
    double s = 0, c = 0;
    for (double a : angles) {
        s += std::sin(4 * a);
        c += std::cos(4 * a);
    }
    double centre = std::atan2(s, c) / 4;
    for (double &a : angles) {
        a = centre + std::remainder(a - centre, kQuarterTurn);
    }
    double rotation = std::remainder(-median(angles), kQuarterTurn);
    if (rotation <= -kQuarterTurn / 2) {
        rotation += kQuarterTurn;
    }
    report.rotation_angle = rotation;
    report.nn_spacing = median(distances);
    return report;
}

}  // namespace rydgate
