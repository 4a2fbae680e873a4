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

#include <stdexcept>
#include <string>

namespace vcgpac {

/// Conditioning on a type that has zero prior probability.
class ZeroProbabilityError : public std::domain_error {
 public:
  explicit ZeroProbabilityError(const std::string& what)
      : std::domain_error(what) {}
};

/// An exhaustive check was asked to enumerate more than its guard allows.
class EnumerationLimitError : public std::length_error {
 public:
  explicit EnumerationLimitError(const std::string& what)
      : std::length_error(what) {}
};

}  // namespace vcgpac
