// cfst/errors.h
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
//
// \file
// Exception types thrown across the library. Every exception derives from
// cfst::Error so callers can catch the whole family at once.

#ifndef CFST_ERRORS_H_
#define CFST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cfst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weight construction outside the carrier (negative or NaN).
class NegativeWeightError : public Error {
 public:
  using Error::Error;
};

// An arc with weight 0̄ (infinity) is meaningless; omit the arc instead.
class InfiniteArcWeightError : public Error {
 public:
  using Error::Error;
};

class UnknownStateError : public Error {
 public:
  using Error::Error;
};

class BrokenPathError : public Error {
 public:
  using Error::Error;
};

class NonAcceptingPathError : public Error {
 public:
  using Error::Error;
};

// No final state is reachable from the requested start state.
class NoAcceptingPathError : public Error {
 public:
  using Error::Error;
};

// A safety bound tripped: either bounded path enumeration hit its traversal
// budget on a cyclic machine, or relaxation exceeded its iteration cap.
class NonTerminatingError : public Error {
 public:
  using Error::Error;
};

// Determinization requires an input-epsilon-free machine.
class InputEpsilonError : public Error {
 public:
  using Error::Error;
};

// Determinization generated more states than the configured budget allows;
// the input may not be determinizable.
class StateBudgetExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& token)
      : Error("unknown symbol: \"" + token + "\""), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class DuplicateSymbolError : public Error {
 public:
  using Error::Error;
};

class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

class MissingEpsilonError : public Error {
 public:
  using Error::Error;
};

// Serialization requires a single initial state with unit weight.
class MultipleInitialsError : public Error {
 public:
  using Error::Error;
};

class DanglingStateRefError : public Error {
 public:
  using Error::Error;
};

class DuplicateStateIdError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfst

#endif  // CFST_ERRORS_H_
