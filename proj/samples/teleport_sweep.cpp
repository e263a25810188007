// Copyright 2026 The qrac Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Teleportation with a restricted number of measurement outcomes: exact and
// simulated fidelities, plus a Haar-average estimate for one setting.

#include <iostream>

#include "qrac/report.hpp"

int main(int argc, char **argv) {
    const int d = argc > 1 ? std::stoi(argv[1]) : 2;
    for (int k = 1; k <= d * d; ++k) {
        std::cout << "k=" << k << "  " << qrac::to_table(qrac::constrained_teleport_fidelity(d, k));
    }
    const auto mc = qrac::transmission_fidelity_mc(qrac::constrained_teleport_channel(d, d * d - 1),
                                                   d, 2000, 1, 2);
    std::cout << "Haar estimate of f at k=" << d * d - 1 << ": " << qrac::fixed6(mc.mean)
              << " +/- " << qrac::fixed6(mc.std_error) << '\n';
    return 0;
}
