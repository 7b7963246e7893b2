#ifndef SGX_ERROR_HPP_
#define SGX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

#include "sgx/json.hpp"

namespace sgx {

/// Domain error with a stable machine-readable code and a detail payload.
/// Codes used across the library: NonSquare, IndexOutOfRange, NotAssociative,
/// EmptySeed, NotIdempotent, NotOutsideCoideal, NotAnIdeal,
/// IncompatiblePartition, CarrierTooLarge, OrderTooLarge, NotCommutative,
/// NotPrime, UnknownSuite, UnknownFamily, UnknownElement,
/// FactVerificationFailed.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, Json details = Json::object())
      : std::runtime_error(message), code_(std::move(code)), details_(std::move(details)) {}

  const std::string& code() const noexcept { return code_; }
  const Json& details() const noexcept { return details_; }

  /// Single-line machine-readable form, as emitted on stderr by the CLI.
  Json to_json() const {
    return Json{{"error", Json{{"code", code_}, {"message", what()}, {"details", details_}}}};
  }

 private:
  std::string code_;
  Json details_;
};

}  // namespace sgx

#endif  // SGX_ERROR_HPP_
