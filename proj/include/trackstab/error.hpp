/* Copyright 2026 The TrackStab Authors. All Rights Reserved.

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

namespace trackstab {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or non-positive dimensions (mask vs mask, mask vs frame).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Well-formed data that violates a declared invariant; the message names
/// the invariant and, for file input, the offending record.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Structurally malformed input (bad JSON, missing or mistyped fields).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failures: missing file, unreadable or unwritable path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trackstab
