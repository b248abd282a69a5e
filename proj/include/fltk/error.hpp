// Copyright 2026 The fltk Authors.
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

namespace fltk {

/// Base class for every error raised by the library. User errors (bad
/// input, precondition failures) derive from UserError; breaches of internal
/// invariants derive from InternalError. The CLI maps them to exit codes 1
/// and 2 respectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UserError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

/// Two graph entries share an argument but disagree on the value.
class FunctionalityViolation : public UserError {
 public:
  using UserError::UserError;
};

/// A construction would make a value occur in its own hereditary field.
class CycleViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

/// A request exceeds a materialization or search cap.
class CapExceeded : public UserError {
 public:
  using UserError::UserError;
};

/// The interning table grew beyond FLTK_MAX_NODES.
class NodeLimitExceeded : public InternalError {
 public:
  using InternalError::InternalError;
};

class CompositionMismatch : public UserError {
 public:
  using UserError::UserError;
};

class NotAPair : public UserError {
 public:
  using UserError::UserError;
};

class DegenerateTokens : public UserError {
 public:
  using UserError::UserError;
};

}  // namespace fltk
