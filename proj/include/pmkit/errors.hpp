/* Copyright 2026 The pmkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace pmkit {

// Base of every error thrown by the library. Verdicts (an axiom failing,
// a condition being violated) are never errors; they are reported values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatch, duplicate points, bad JSON shape.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A point that does not belong to the space it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument outside its documented range (eps <= 0, alpha >= 1, k = 0, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A catalog space lacks metadata an operation needs.
class MetadataError : public Error {
 public:
  using Error::Error;
};

// Unknown catalog identifier.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Input form the operation cannot decide exactly.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// A map sent a point outside the space.
class MapClosureError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration requested on a space that is too large.
class SizeRefusal : public Error {
 public:
  using Error::Error;
};

// A property that must hold by construction did not. Indicates a bug or an
// input that was supposed to be rejected earlier.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace pmkit
