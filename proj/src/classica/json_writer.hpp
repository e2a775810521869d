#pragma once

#include <cstdio>
#include <string>

namespace classica {

/// Minimal append-only JSON emitter with fixed float formatting (%.17g), so
/// identical inputs produce byte-identical output.
class JsonWriter {
public:
  std::string& out() { return buf_; }
  const std::string& str() const { return buf_; }

  JsonWriter& raw(const std::string& s) {
    buf_ += s;
    return *this;
  }
  JsonWriter& key(const std::string& k) {
    string(k);
    buf_ += ':';
    return *this;
  }
  JsonWriter& string(const std::string& s) {
    buf_ += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': buf_ += "\\\""; break;
        case '\\': buf_ += "\\\\"; break;
        case '\n': buf_ += "\\n"; break;
        case '\t': buf_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char esc[8];
            std::snprintf(esc, sizeof esc, "\\u%04x", ch);
            buf_ += esc;
          } else {
            buf_ += ch;
          }
      }
    }
    buf_ += '"';
    return *this;
  }
  JsonWriter& number(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof tmp, "%.17g", v);
    buf_ += tmp;
    return *this;
  }
  JsonWriter& integer(long long v) {
    buf_ += std::to_string(v);
    return *this;
  }
  JsonWriter& boolean(bool v) {
    buf_ += v ? "true" : "false";
    return *this;
  }

private:
  std::string buf_;
};

}  // namespace classica
