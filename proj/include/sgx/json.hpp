#ifndef SGX_JSON_HPP_
#define SGX_JSON_HPP_

#include <json.hpp>

namespace sgx {

// Insertion-ordered JSON everywhere: report field order is part of the
// output contract and must not depend on key names.
using Json = nlohmann::ordered_json;

}  // namespace sgx

#endif  // SGX_JSON_HPP_
