#include "mrdi/algebra/monomial.hpp"

#include <algorithm>

#include "mrdi/error.hpp"

namespace mrdi::algebra {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index) {
  std::vector<std::uint32_t> e(arity, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (arity() != other.arity()) throw ContextError("monomial arity mismatch");
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (arity() != other.arity()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] < other.exponents_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.exponents_.begin(), a.exponents_.end(),
                                                b.exponents_.begin(), b.exponents_.end());
}

std::string Monomial::to_string(std::span<const std::string> symbols) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < symbols.size() ? symbols[i] : "x" + std::to_string(i);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out;
}

}  // namespace mrdi::algebra
