// Copyright 2026 The lgx Authors
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

namespace lgx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown concept id/name, or a malformed vocabulary.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

/// Unknown class id/label.
class ClassError : public Error {
 public:
  using Error::Error;
};

/// Malformed input files (JSON lines, model files, config).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values or violated preconditions.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Any failure while obtaining a score from a backend.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Table-backed oracle has no entry for the query.
class MissingKeyError : public OracleError {
 public:
  using OracleError::OracleError;
};

/// External adapter answered with something that is not a valid response.
class ProtocolError : public OracleError {
 public:
  using OracleError::OracleError;
};

/// External adapter did not answer within the configured timeout.
class TimeoutError : public OracleError {
 public:
  using OracleError::OracleError;
};

/// Search preconditions violated (empty subset, non-positive reference score,
/// instance too large for exhaustive enumeration).
class SearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgx
