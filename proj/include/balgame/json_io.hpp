/*
 * Copyright 2026 The balgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BALGAME_JSON_IO_HPP
#define BALGAME_JSON_IO_HPP

#include <json.hpp>

#include "balgame/balance.hpp"
#include "balgame/coloring.hpp"
#include "balgame/game.hpp"
#include "balgame/threshold.hpp"
#include "balgame/witness.hpp"

namespace balgame {

using Json = nlohmann::json;

Json to_json(const LatticeVector& v);
Json to_json(const RationalVector& v);
Json to_json(const VectorFamily& f);
Json to_json(const ThresholdReport& r);
Json to_json(const CrossValidation& cv);
Json to_json(const VerdictResult& v);
Json to_json(const WitnessCertificate& c);
Json to_json(const MiddleBalance& b);
Json to_json(const SignAssignment& a);
Json to_json(const ChooserPlan& p);
Json to_json(const ColoringReport& r);
Json to_json(const Transcript& t);

LatticeVector lattice_from_json(const Json& j);
/// Rebuilds a witness certificate as written by to_json; replay() re-checks it.
WitnessCertificate witness_from_json(const Json& j);

} // namespace balgame

#endif
