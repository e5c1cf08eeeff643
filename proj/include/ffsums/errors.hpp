// Copyright 2026 The ffsums Authors
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

#ifndef FFSUMS_ERRORS_HPP
#define FFSUMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffsums {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimeError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class ZeroCoefficientError : public Error {
 public:
  using Error::Error;
};

class ZeroRhsError : public Error {
 public:
  using Error::Error;
};

class CharacteristicTwoError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmallError : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class DegreeNotCoprimeError : public Error {
 public:
  using Error::Error;
};

class PrincipalCharacterError : public Error {
 public:
  using Error::Error;
};

class NoWitnessError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffsums

#endif  // FFSUMS_ERRORS_HPP
