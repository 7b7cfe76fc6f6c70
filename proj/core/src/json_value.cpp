#include "maxdist/json_value.hpp"

#include <cmath>
#include <cstdio>

namespace maxdist {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_double(std::string& out, double d) {
  if (!std::isfinite(d)) {
    out += d > 0 ? "\"inf\"" : (d < 0 ? "\"-inf\"" : "\"nan\"");
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  for (char* p = buf; *p; ++p)
    if (*p == ',') *p = '.';  // guard against a non-C numeric locale
  out += buf;
}

}  // namespace

void JsonValue::dump_to(std::string& out) const {
  struct Visitor {
    std::string& out;
    void operator()(std::nullptr_t) { out += "null"; }
    void operator()(bool b) { out += b ? "true" : "false"; }
    void operator()(std::int64_t i) { out += std::to_string(i); }
    void operator()(double d) { append_double(out, d); }
    void operator()(const std::string& s) { append_escaped(out, s); }
    void operator()(const JsonArray& a) {
      out += '[';
      bool first = true;
      for (const JsonValue& v : a) {
        if (!first) out += ',';
        first = false;
        v.dump_to(out);
      }
      out += ']';
    }
    void operator()(const JsonObject& o) {
      out += '{';
      bool first = true;
      for (const auto& [key, v] : o) {
        if (!first) out += ',';
        first = false;
        append_escaped(out, key);
        out += ':';
        v.dump_to(out);
      }
      out += '}';
    }
  };
  std::visit(Visitor{out}, v_);
}

std::string JsonValue::dump() const {
  std::string out;
  dump_to(out);
  return out;
}

}  // namespace maxdist
