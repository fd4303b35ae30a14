/*
 * Copyright 2026 The mofsim Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace mofsim {

// Invalid physical parameters (violated type invariants).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or incomplete scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: non-physical state, singular system, lost stability.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PhysicalityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotHurwitzError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace mofsim
