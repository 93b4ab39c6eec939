#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourney {

// Base of every error the engine raises. Callers that only care about
// "something went wrong" catch this; the CLI and service map the concrete
// subclasses to exit codes / HTTP statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedLanguage : public Error {
 public:
  explicit UnsupportedLanguage(std::string lang)
      : Error("unsupported target language: " + lang), lang_(std::move(lang)) {}
  const std::string& lang() const noexcept { return lang_; }

 private:
  std::string lang_;
};

class MissingTask : public Error {
 public:
  explicit MissingTask(const std::string& task_id)
      : Error("task not found in dataset: " + task_id) {}
};

class GroupTooSmall : public Error {
 public:
  explicit GroupTooSmall(std::size_t n)
      : Error("tournament requires at least 2 responses, got " + std::to_string(n)) {}
};

class SubsetTooLarge : public Error {
 public:
  SubsetTooLarge(std::size_t k, std::size_t n)
      : Error("subset size " + std::to_string(k) + " exceeds group size " + std::to_string(n)) {}
};

class InsufficientPool : public Error {
 public:
  using Error::Error;
};

class TaskMismatch : public Error {
 public:
  using Error::Error;
};

class MissingSideInfo : public Error {
 public:
  using Error::Error;
};

// Transport-level judge failure after the retry budget is spent.
class JudgeUnavailable : public Error {
 public:
  using Error::Error;
};

// The endpoint answered, but not with a chat-completions payload.
class MalformedResponse : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MissingField : public ParseError {
 public:
  MissingField(std::size_t line, std::string field)
      : ParseError(line, "missing field '" + field + "'"), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class DuplicateId : public ParseError {
 public:
  DuplicateId(std::size_t line, const std::string& id)
      : ParseError(line, "duplicate task_id '" + id + "'") {}
};

// Raised when a batch fails validate_group; carries the violation list.
class ValidationError : public Error {
 public:
  ValidationError(std::string what, std::vector<std::string> violations)
      : Error(std::move(what)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace tourney
