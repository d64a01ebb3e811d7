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

#ifndef QTRANSPORT_DISTRIBUTION_H
#define QTRANSPORT_DISTRIBUTION_H

#include <cstddef>
#include <vector>

namespace qtransport {

/// Probability per final position. Shared by the quantum marginal, the exact
/// classical oracle and Monte Carlo tallies.
struct PathDistribution {
    std::vector<double> probabilities;

    std::size_t size() const { return probabilities.size(); }
    double operator[](std::size_t x) const { return probabilities[x]; }

    double total() const;
    double mean() const;

    /// Largest absolute per-position difference; shorter vectors are zero-padded.
    double max_abs_diff(const PathDistribution &other) const;
};

}  // namespace qtransport

#endif
