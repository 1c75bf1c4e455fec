// Copyright 2026 The mpcover Authors
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

#ifndef MPCOVER_ERRORS_HPP
#define MPCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class NoUniqueClone : public Error {
 public:
  using Error::Error;
};

class InvalidCover : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An enumeration or exact solver would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A proven inequality failed on a concrete instance.
class InequalityViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace mpcover

#endif  // MPCOVER_ERRORS_HPP
