// Copyright 2026 The lingsteg Authors.
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

#ifndef LINGSTEG_ERRORS_H_
#define LINGSTEG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lingsteg {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new failure kinds should derive from the closest match.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A corpus file that produced no usable message.
class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// Malformed model or codebook document.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed document whose content breaks an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InsufficientBandError : public Error {
 public:
  InsufficientBandError(const std::string& what, std::size_t found,
                        std::size_t needed)
      : Error(what), found_(found), needed_(needed) {}

  std::size_t found() const { return found_; }
  std::size_t needed() const { return needed_; }

 private:
  std::size_t found_;
  std::size_t needed_;
};

// Every cover drawn was rejected before one steganized cleanly.
class SteganizationError : public Error {
 public:
  SteganizationError(const std::string& what, int attempts)
      : Error(what), attempts_(attempts) {}

  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

class NoPositionError : public Error {
 public:
  using Error::Error;
};

// Probability maps that cannot enter a divergence computation.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lingsteg

#endif  // LINGSTEG_ERRORS_H_
