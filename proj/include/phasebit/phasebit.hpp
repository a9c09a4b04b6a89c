// Copyright 2026 The phasebit Authors
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

#pragma once

// Umbrella header for the simulation library (the CLI headers live under
// phasebit/cli/ and are not pulled in here).

#include "phasebit/angle.hpp"
#include "phasebit/error.hpp"
#include "phasebit/parallel.hpp"
#include "phasebit/phase.hpp"
#include "phasebit/philox.hpp"
#include "phasebit/quantum.hpp"
#include "phasebit/register.hpp"
#include "phasebit/signal.hpp"
#include "phasebit/stats.hpp"
