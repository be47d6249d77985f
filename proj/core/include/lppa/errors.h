// Copyright 2026 The LPPA Authors.
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

#ifndef LPPA_ERRORS_H_
#define LPPA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lppa {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input that could not be interpreted at all.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates the PHI dictionary schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A rule in a pattern file failed to compile. `line` is 1-based.
class PatternCompileError : public Error {
 public:
  PatternCompileError(std::string file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// Network failure or non-2xx HTTP status from a chat endpoint.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& what, int status = 0)
      : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// Every attempt produced an unusable reply. Keeps the last raw reply so the
// failure can be audited.
class ExhaustedRetries : public Error {
 public:
  ExhaustedRetries(const std::string& what, std::string last_reply)
      : Error(what), last_reply_(std::move(last_reply)) {}
  const std::string& last_reply() const { return last_reply_; }

 private:
  std::string last_reply_;
};

class MissingMarker : public Error {
 public:
  using Error::Error;
};

class MissingGold : public Error {
 public:
  explicit MissingGold(const std::string& record_id)
      : Error("record has no gold PHI: " + record_id), record_id_(record_id) {}
  const std::string& record_id() const { return record_id_; }

 private:
  std::string record_id_;
};

class EmptyPool : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class TooFewNotes : public Error {
 public:
  using Error::Error;
};

class EmptyOntology : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class TooFewPairs : public Error {
 public:
  using Error::Error;
};

class UnknownBaseline : public Error {
 public:
  using Error::Error;
};

}  // namespace lppa

#endif  // LPPA_ERRORS_H_
