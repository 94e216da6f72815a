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

#ifndef QUDIT_JSON_IO_H
#define QUDIT_JSON_IO_H

#include <json.hpp>

#include "qudit/deutsch.h"
#include "qudit/gates.h"
#include "qudit/matrix.h"
#include "qudit/pulse.h"
#include "qudit/search.h"

namespace qudit {

using Json = nlohmann::json;

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
Json matrix_to_json(const CMatrix &m);
/// Throws BadFormat on shape or type problems.
CMatrix matrix_from_json(const Json &j);

/// {"dim": n, "re": [...], "im": [...]}.
Json state_to_json(const StateVector &s);
StateVector state_from_json(const Json &j);

/// {"dim": 5, "pulses": [{"axis": "x"|"y", "levels": [j, k], "theta_over_pi": t}, ...]}
/// in chronological order. Writers emit canonical angles.
Json schedule_to_json(const PulseSequence &seq);
/// Accepts any finite angle. Throws BadFormat or InvalidLevels.
PulseSequence schedule_from_json(const Json &j);

Json complex_to_json(Complex c);

Json verification_to_json(const VerificationReport &r);
Json gate_to_json(const GateSpec &spec, const VerificationReport &r);
Json deutsch_to_json(const DeutschResult &r);
Json search_result_to_json(const SearchResult &r);

}  // namespace qudit

#endif
