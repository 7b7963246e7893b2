#ifndef SGX_VERDICT_HPP_
#define SGX_VERDICT_HPP_

#include <cstdint>
#include <string>

#include "sgx/json.hpp"

namespace sgx {

enum class Status { Holds, Fails, Unknown };

std::string to_string(Status st);
Status status_from_string(const std::string& st);

/// Trilean result of a predicate evaluation.
///
/// Fails always carries an independently recheckable witness. Holds carries
/// a full-check certificate on finite carriers and names a certified fact on
/// lazy ones. Unknown occurs only on lazy carriers with exhausted budget.
struct Verdict {
  std::string predicate;
  Status status = Status::Unknown;
  Json witness;             // null when absent
  std::int64_t budget_used = 0;
  std::string certificate;  // empty when absent

  Verdict() : witness(nullptr) {}
  Verdict(std::string pred, Status st, Json w, std::int64_t used, std::string cert)
      : predicate(std::move(pred)),
        status(st),
        witness(std::move(w)),
        budget_used(used),
        certificate(std::move(cert)) {}

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }

  /// {predicate, status, witness, budget_used, certificate}
  Json to_json() const;

  /// Logical negation under a new predicate name; the witness and
  /// certificate carry over (a witness for one side refutes the other).
  Verdict negated(const std::string& name) const;
};

}  // namespace sgx

#endif  // SGX_VERDICT_HPP_
