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

#include <ostream>
#include <span>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "vcgpac/bandit/successive_elimination.hpp"

namespace vcgpac {

inline void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows) {
  out << "round,arm,pulls,sample_mean,alpha,eliminated_flag\n";
  for (const TraceRow& r : rows) {
    out << fmt::format("{},{},{},{},{},{}\n", r.round, r.arm, r.pulls, r.sample_mean,
                       r.alpha, r.eliminated ? 1 : 0);
  }
}

}  // namespace vcgpac
