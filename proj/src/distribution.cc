// Copyright 2026 The qtransport Authors
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

#include "qtransport/distribution.h"

#include <algorithm>
#include <cmath>

namespace qtransport {

double PathDistribution::total() const {
    double s = 0;
    for (double p : probabilities) {
        s += p;
    }
    return s;
}

double PathDistribution::mean() const {
    double s = 0;
    for (std::size_t x = 0; x < probabilities.size(); x++) {
        s += static_cast<double>(x) * probabilities[x];
    }
    return s;
}

double PathDistribution::max_abs_diff(const PathDistribution &other) const {
    std::size_t n = std::max(size(), other.size());
    double worst = 0;
    for (std::size_t x = 0; x < n; x++) {
        double a = x < size() ? probabilities[x] : 0.0;
        double b = x < other.size() ? other.probabilities[x] : 0.0;
        worst = std::max(worst, std::abs(a - b));
    }
    return worst;
}

}  // namespace qtransport
