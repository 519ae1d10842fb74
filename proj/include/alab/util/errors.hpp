// Copyright 2026 The Annealer Lab Authors
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

#include <stdexcept>
#include <string>

namespace alab {

// Probe parameters that produce coinciding or inverted minima.
class DegenerateInstanceError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Exhaustive or state-vector work requested beyond the memory/time guard.
class SizeLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

class ConvergenceError : public std::runtime_error {
   public:
    ConvergenceError(const std::string &what, double achieved_residual)
        : std::runtime_error(what), achieved_residual_(achieved_residual) {
    }
    double achieved_residual() const {
        return achieved_residual_;
    }

   private:
    double achieved_residual_;
};

class QuadratureError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Sampling grid too coarse for the requested feature (minima tracking, gap bracketing).
class GridResolutionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace alab
