// Copyright 2026 The spinmap Authors
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

#include "spinmap/circuit.hpp"
#include "spinmap/commands.hpp"
#include "spinmap/errors.hpp"
#include "spinmap/linalg.hpp"
#include "spinmap/mappings.hpp"
#include "spinmap/measurement.hpp"
#include "spinmap/model.hpp"
#include "spinmap/pauli.hpp"
#include "spinmap/simulator.hpp"
#include "spinmap/stateprep.hpp"
#include "spinmap/synthesis.hpp"
