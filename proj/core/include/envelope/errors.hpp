// Copyright 2026 The Envelope Authors
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
#include <vector>

namespace envelope {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operation not available for the given law variant or parameter regime.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A SystemSpec or QuantumState violates one of its invariants.
class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The stationarity residual has no sign change inside the scan window, or
// none of its zeros is a local minimum of the energy.
class NoStationaryPoint : public std::runtime_error {
 public:
  NoStationaryPoint(const std::string& what, double scan_lo, double scan_hi)
      : std::runtime_error(what), scan_lo_(scan_lo), scan_hi_(scan_hi) {}

  double scan_lo() const noexcept { return scan_lo_; }
  double scan_hi() const noexcept { return scan_hi_; }

 private:
  double scan_lo_;
  double scan_hi_;
};

// Bracketed refinement did not reach the requested tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class NoBoundState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoCriticalPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace envelope
