#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
  kShape,       // dimension / alignment mismatch between tensors
  kParam,       // invalid scalar argument or config value
  kContract,    // API precondition violated (e.g. non-scalar backward)
  kDegenerate,  // structurally valid input with no defined result (all-masked)
  kFormat,      // malformed file contents
  kIo,          // filesystem failure
  kNumeric,     // NaN/Inf surfaced during training
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(ErrorKind::kShape, msg) {}
};
struct ParamError : Error {
  explicit ParamError(const std::string& msg) : Error(ErrorKind::kParam, msg) {}
};
struct ContractError : Error {
  explicit ContractError(const std::string& msg) : Error(ErrorKind::kContract, msg) {}
};
struct DegenerateInputError : Error {
  explicit DegenerateInputError(const std::string& msg) : Error(ErrorKind::kDegenerate, msg) {}
};
struct FormatError : Error {
  explicit FormatError(const std::string& msg) : Error(ErrorKind::kFormat, msg) {}
};
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorKind::kIo, msg) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error(ErrorKind::kNumeric, msg) {}
};

}  // namespace phasekit
