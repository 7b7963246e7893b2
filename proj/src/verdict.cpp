#include "sgx/verdict.hpp"

#include "sgx/error.hpp"

namespace sgx {

std::string to_string(Status st) {
  switch (st) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    default:
      return "Unknown";
  }
}

Status status_from_string(const std::string& st) {
  if (st == "Holds") return Status::Holds;
  if (st == "Fails") return Status::Fails;
  if (st == "Unknown") return Status::Unknown;
  throw Error("ParseError", "not a verdict status: " + st);
}

Json Verdict::to_json() const {
  return Json{{"predicate", predicate},
              {"status", to_string(status)},
              {"witness", witness},
              {"budget_used", budget_used},
              {"certificate", certificate.empty() ? Json(nullptr) : Json(certificate)}};
}

Verdict Verdict::negated(const std::string& name) const {
  Verdict v = *this;
  v.predicate = name;
  if (status == Status::Holds) {
    v.status = Status::Fails;
  } else if (status == Status::Fails) {
    v.status = Status::Holds;
  }
  return v;
}

}  // namespace sgx
