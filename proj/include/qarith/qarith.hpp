// Copyright 2026 The qarith authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qarith/bennett.hpp"
#include "qarith/circuit.hpp"
#include "qarith/clifford_t.hpp"
#include "qarith/ctrl_add.hpp"
#include "qarith/gate.hpp"
#include "qarith/multiplier.hpp"
#include "qarith/resources.hpp"
#include "qarith/serialize.hpp"
#include "qarith/simulate.hpp"
