#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

// Minimal JSON document builder with canonical output: object keys sorted
// (std::map), doubles printed at 17 significant digits, locale-independent.
// Reports and curve files are emitted through this so identical runs give
// byte-identical bytes.

namespace maxdist {

class JsonValue;
using JsonArray = std::vector<JsonValue>;
using JsonObject = std::map<std::string, JsonValue>;

class JsonValue {
 public:
  JsonValue() : v_(nullptr) {}
  JsonValue(std::nullptr_t) : v_(nullptr) {}
  JsonValue(bool b) : v_(b) {}
  JsonValue(int i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(std::int64_t i) : v_(i) {}
  JsonValue(std::size_t i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(double d) : v_(d) {}
  JsonValue(const char* s) : v_(std::string(s)) {}
  JsonValue(std::string s) : v_(std::move(s)) {}
  JsonValue(JsonArray a) : v_(std::move(a)) {}
  JsonValue(JsonObject o) : v_(std::move(o)) {}

  std::string dump() const;  // compact; non-finite doubles become strings

 private:
  void dump_to(std::string& out) const;

  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, JsonArray, JsonObject> v_;
};

}  // namespace maxdist
