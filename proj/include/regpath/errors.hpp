#pragma once

#include <stdexcept>
#include <string>

namespace regpath {

// Broad failure categories; the CLI maps them to exit codes
// (invalid_input -> 2, numerical -> 3, io -> 4).
enum class ErrorCategory { invalid_input, numerical, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, std::string what) : std::runtime_error(std::move(what)), cat_(cat) {}
  ErrorCategory category() const { return cat_; }

 private:
  ErrorCategory cat_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& what) : Error(ErrorCategory::numerical, what) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what) : Error(ErrorCategory::numerical, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct LabelError : Error {
  explicit LabelError(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct InvalidLabel : Error {
  explicit InvalidLabel(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct ConstantColumn : Error {
  explicit ConstantColumn(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct CollinearActiveSet : Error {
  explicit CollinearActiveSet(const std::string& what) : Error(ErrorCategory::numerical, what) {}
};

struct StepLimitExceeded : Error {
  explicit StepLimitExceeded(const std::string& what) : Error(ErrorCategory::numerical, what) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct EmptyOverlap : Error {
  explicit EmptyOverlap(const std::string& what) : Error(ErrorCategory::invalid_input, what) {}
};

struct NonFinite : Error {
  explicit NonFinite(const std::string& what) : Error(ErrorCategory::numerical, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

}  // namespace regpath
