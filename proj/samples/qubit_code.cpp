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
// Evaluates the two-strings code for d = 2..4 and prints it next to the
// dense-coding baseline.

#include <iostream>

#include "qrac/report.hpp"

int main() {
    for (int d = 2; d <= 4; ++d) {
        const qrac::ComparisonRow row{
            qrac::ProtocolEvaluator(d).evaluate(qrac::builtin_table(d)),
            qrac::trivial_strategy(d, qrac::Variant::two_strings)};
        std::cout << qrac::to_table(row) << '\n';
    }
    return 0;
}
