// Copyright 2026 The vcgpac Authors.
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

// Library modules. The experiment drivers and the CLI live in
// vcgpac/experiments/ and vcgpac/cli/.

#include "vcgpac/core/errors.hpp"
#include "vcgpac/core/parallel.hpp"
#include "vcgpac/core/rng.hpp"
#include "vcgpac/core/summation.hpp"
#include "vcgpac/env/type_profile.hpp"
#include "vcgpac/env/prior.hpp"
#include "vcgpac/env/value_model.hpp"
#include "vcgpac/env/double_auction.hpp"
#include "vcgpac/env/finite_decision_model.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/evaluation_cache.hpp"
#include "vcgpac/env/efficient.hpp"
#include "vcgpac/env/generate.hpp"
#include "vcgpac/env/io.hpp"
#include "vcgpac/mechanism/design_params.hpp"
#include "vcgpac/mechanism/exact.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"
#include "vcgpac/mechanism/vcg.hpp"
#include "vcgpac/mechanism/properties.hpp"
#include "vcgpac/mechanism/io.hpp"
#include "vcgpac/bandit/arms.hpp"
#include "vcgpac/bandit/scaler.hpp"
#include "vcgpac/bandit/successive_elimination.hpp"
#include "vcgpac/bandit/best_mean.hpp"
#include "vcgpac/bandit/trace_csv.hpp"
#include "vcgpac/learn/learn_params.hpp"
#include "vcgpac/learn/estimators.hpp"
#include "vcgpac/learn/learned_rule.hpp"
#include "vcgpac/learn/learn_mechanism.hpp"
#include "vcgpac/learn/io.hpp"
