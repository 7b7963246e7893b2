#include "sgx/io.hpp"

#include <fstream>
#include <sstream>

namespace sgx {

Json semigroup_to_json(const FiniteSemigroup& s) {
  return Json{{"names", s.names()}, {"table", s.rows()}};
}

FiniteSemigroup semigroup_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("names") || !j.contains("table")) {
    throw Error("ParseError", "expected an object with \"names\" and \"table\"");
  }
  std::vector<std::string> names = j.at("names").get<std::vector<std::string>>();
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  return FiniteSemigroup::validate(std::move(names), table);
}

std::string semigroup_to_text(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j > 0) out << ' ';
      out << s.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

FiniteSemigroup semigroup_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n <= 0) {
    throw Error("ParseError", "expected a positive order on the first line");
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
        throw Error("ParseError", "table ended early at row " + std::to_string(i));
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return FiniteSemigroup::validate(std::move(names), table);
}

FiniteSemigroup parse_semigroup(const std::string& content) {
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') {
    Json j;
    try {
      j = Json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("ParseError", std::string("invalid JSON: ") + e.what());
    }
    return semigroup_from_json(j);
  }
  return semigroup_from_text(content);
}

FiniteSemigroup read_semigroup_file(const std::string& path) {
  return parse_semigroup(read_file(path));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileError", "cannot open " + path, Json{{"path", path}});
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("FileError", "cannot write " + path, Json{{"path", path}});
  out << content;
}

}  // namespace sgx
