#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace transcite {

/// Hard failure raised by any pipeline stage. `code` is a stable,
/// machine-readable identifier (EmptyFile, EmptyCorpus, ConfigInvalid, ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace transcite
