#ifndef SGX_IO_HPP_
#define SGX_IO_HPP_

#include <string>

#include "sgx/json.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

/// {"names":[...],"table":[[...],...]}
Json semigroup_to_json(const FiniteSemigroup& s);
FiniteSemigroup semigroup_from_json(const Json& j);

/// First line: order n. Then n rows of n whitespace-separated indices.
/// Elements are named x0..x{n-1} on read.
std::string semigroup_to_text(const FiniteSemigroup& s);
FiniteSemigroup semigroup_from_text(const std::string& text);

/// Reads either format, sniffing for a leading '{'. Throws Error with code
/// FileError on unreadable files and ParseError on malformed content; table
/// problems surface as the usual validation errors.
FiniteSemigroup read_semigroup_file(const std::string& path);
FiniteSemigroup parse_semigroup(const std::string& content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sgx

#endif  // SGX_IO_HPP_
