#include "mrdi/algebra/integers.hpp"

#include "mrdi/error.hpp"

namespace mrdi::algebra {
namespace {

bool is_canonical_decimal(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && text.front() == '-') start = 1;
  std::string_view digits = text.substr(start);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  if (digits.size() > 1 && digits.front() == '0') return false;
  if (start == 1 && digits == "0") return false;
  return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!is_canonical_decimal(text)) {
    throw ValidationError("not a decimal integer: \"" + std::string(text) + "\"");
  }
  return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (sgn(den) <= 0) {
    throw ValidationError("rational denominator must be positive: \"" +
                          std::string(text) + "\"");
  }
  return make_rational(num, den);
}

std::string to_text(const BigInt& value) { return value.get_str(10); }

std::string to_text(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) throw ValidationError("zero denominator");
  BigRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace mrdi::algebra
