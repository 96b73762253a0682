#pragma once

#include <string>
#include <vector>

namespace capsula::minilang {

/// Runtime value. Scalars and vectors are kept separate; minilang has no
/// implicit recycling beyond vector-scalar arithmetic.
struct Value {
  enum class Kind { Number, Text, Boolean, NumVector, TextVector };

  Kind kind = Kind::Number;
  double num = 0.0;
  bool truth = false;
  std::string text;
  std::vector<double> nums;
  std::vector<std::string> texts;

  static Value number(double v);
  static Value boolean(bool v);
  static Value str(std::string v);
  static Value num_vector(std::vector<double> v);
  static Value text_vector(std::vector<std::string> v);

  const char* kind_name() const;
};

/// Shortest round-trip decimal; integral doubles print without a decimal
/// point ("3", not "3.0"), negative zero normalizes to "0".
/// Throws NonFiniteOutput for NaN or infinities.
std::string canonical_number_text(double v, int line = 0);

/// Canonical textual form: one element per line for vectors, TRUE/FALSE for
/// booleans, raw text for strings; always ends in a newline.
std::string canonical_value_text(const Value& v, int line = 0);

} // namespace capsula::minilang
