#include "capsula/minilang/value.hpp"

#include "capsula/error.hpp"

#include <charconv>
#include <cmath>

namespace capsula::minilang {

Value Value::number(double v) {
  Value out;
  out.kind = Kind::Number;
  out.num = v;
  return out;
}

Value Value::boolean(bool v) {
  Value out;
  out.kind = Kind::Boolean;
  out.truth = v;
  return out;
}

Value Value::str(std::string v) {
  Value out;
  out.kind = Kind::Text;
  out.text = std::move(v);
  return out;
}

Value Value::num_vector(std::vector<double> v) {
  Value out;
  out.kind = Kind::NumVector;
  out.nums = std::move(v);
  return out;
}

Value Value::text_vector(std::vector<std::string> v) {
  Value out;
  out.kind = Kind::TextVector;
  out.texts = std::move(v);
  return out;
}

const char* Value::kind_name() const {
  switch (kind) {
  case Kind::Number: return "number";
  case Kind::Text: return "text";
  case Kind::Boolean: return "boolean";
  case Kind::NumVector: return "numeric vector";
  case Kind::TextVector: return "text vector";
  }
  return "?";
}

std::string canonical_number_text(double v, int line) {
  if (!std::isfinite(v))
    fail(Errc::NonFiniteOutput, "value is not finite", line);
  if (v == 0.0) return "0"; // collapses -0
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string canonical_value_text(const Value& v, int line) {
  std::string out;
  switch (v.kind) {
  case Value::Kind::Number:
    out = canonical_number_text(v.num, line);
    break;
  case Value::Kind::Text:
    out = v.text;
    break;
  case Value::Kind::Boolean:
    out = v.truth ? "TRUE" : "FALSE";
    break;
  case Value::Kind::NumVector:
    for (std::size_t i = 0; i < v.nums.size(); ++i) {
      if (i) out += '\n';
      out += canonical_number_text(v.nums[i], line);
    }
    break;
  case Value::Kind::TextVector:
    for (std::size_t i = 0; i < v.texts.size(); ++i) {
      if (i) out += '\n';
      out += v.texts[i];
    }
    break;
  }
  out += '\n';
  return out;
}

} // namespace capsula::minilang
