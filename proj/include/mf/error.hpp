#pragma once
// Error type shared by all modules: every failure carries a stable,
// machine-readable name (the CLI prints it on stderr and exits 2) plus an
// optional human-readable detail string.

#include <stdexcept>
#include <string>
#include <utility>

namespace mf {

class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}

  // Stable identifier such as "NotPrime" or "PrecisionLoss".
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& detail = "") {
  throw Error(std::move(name), detail);
}

}  // namespace mf
