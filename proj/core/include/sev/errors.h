// Copyright 2026 The SEV Codec Authors. All Rights Reserved.
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

#ifndef SEV_ERRORS_H_
#define SEV_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sev {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller passed a value outside an operation's precondition.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(what) {}
};

// Input files or directories that cannot be read, written or decoded.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Container-level problems: bad magic, unsupported version, inconsistent
// header fields.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

// Entropy-coded payload failed a structural check. The message names the
// check that failed.
class CorruptStreamError : public Error {
 public:
  explicit CorruptStreamError(const std::string& what) : Error(what) {}
};

// The first-stage key-frame codec (internal or external process) failed.
class KeyCodecError : public Error {
 public:
  explicit KeyCodecError(const std::string& what) : Error(what) {}
};

}  // namespace sev

#endif  // SEV_ERRORS_H_
