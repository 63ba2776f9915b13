#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mrdi::algebra {

// Exponent vector. Ordered degree-lexicographically: total degree first,
// then lexicographically with the first symbol most significant.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial one(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }
  static Monomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const { return exponents_; }
  std::uint64_t total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  // Whether `other` divides this monomial.
  bool divisible_by(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  // "x^2*y" over the given symbols; "1" for the unit monomial.
  std::string to_string(std::span<const std::string> symbols) const;

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t degree_ = 0;
};

}  // namespace mrdi::algebra
