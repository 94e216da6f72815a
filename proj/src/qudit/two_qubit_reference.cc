// Copyright 2026 The qudit5 Authors
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

// Deliberately self-contained: this simulator cross-checks the pulse pipeline,
// so it only uses std::array and the boolean truth tables.

#include <array>
#include <cmath>
#include <complex>

#include "qudit/deutsch.h"
#include "qudit/oracle.h"

namespace qudit {

namespace {

using Amp = std::complex<double>;
using State4 = std::array<Amp, 4>;

// Index 2a + b for qubit values a (first) and b (second).
State4 hadamard_on(const State4 &s, int qubit) {
    const double r = 1.0 / std::sqrt(2.0);
    State4 out{};
    for (int i = 0; i < 4; i++) {
        int bit = qubit == 0 ? (i >> 1) & 1 : i & 1;
        int partner = qubit == 0 ? i ^ 2 : i ^ 1;
        // out[i] = sum_{bit'} H[bit][bit'] s[...]
        int i0 = bit == 0 ? i : partner;
        int i1 = bit == 0 ? partner : i;
        out[i] = r * (s[i0] + (bit == 0 ? 1.0 : -1.0) * s[i1]);
    }
    return out;
}

State4 x_on_second(const State4 &s) {
    return {s[1], s[0], s[3], s[2]};
}

State4 query(const State4 &s, const BooleanOracle &f) {
    State4 out{};
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            out[2 * x + (y ^ f(x))] += s[2 * x + y];
        }
    }
    return out;
}

}  // namespace

std::array<std::complex<double>, 4> two_qubit_reference_run(int oracle_id) {
    BooleanOracle f = boolean_oracle(oracle_id);
    State4 s{1.0, 0.0, 0.0, 0.0};
    s = x_on_second(s);
    s = hadamard_on(s, 0);
    s = hadamard_on(s, 1);
    s = query(s, f);
    s = hadamard_on(s, 0);
    return s;
}

}  // namespace qudit
