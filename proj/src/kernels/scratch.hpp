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

#include <array>
#include <cstddef>
#include <vector>

namespace mofsim::kernels {

// Work buffer that stays on the stack for the 4x4 and 6x6 systems the
// integrators call millions of times.
class Scratch {
 public:
  explicit Scratch(std::size_t size) {
    if (size <= small_.size()) {
      p_ = small_.data();
    } else {
      big_.resize(size);
      p_ = big_.data();
    }
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  double* data() { return p_; }
  double& operator[](std::size_t i) { return p_[i]; }

 private:
  std::array<double, 64> small_;
  std::vector<double> big_;
  double* p_ = nullptr;
};

}  // namespace mofsim::kernels
