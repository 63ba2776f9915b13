#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mrdi/algebra/monomial.hpp"
#include "mrdi/algebra/ring.hpp"

namespace mrdi::algebra {

// A value of a Z^k grading.
struct Multidegree {
  std::vector<std::int64_t> components;

  Multidegree() = default;
  explicit Multidegree(std::vector<std::int64_t> c) : components(std::move(c)) {}

  std::size_t size() const { return components.size(); }

  Multidegree operator+(const Multidegree& other) const;
  Multidegree operator-(const Multidegree& other) const;

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

  // "(2,2)"
  std::string to_string() const;
};

// Multidegree of a monomial: sum of exponent[i] * variable_degrees[i].
Multidegree multidegree_of(const Monomial& m, std::span<const Multidegree> variable_degrees);

// All monomials of the given arity and total degree, in decreasing
// degree-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t total_degree);

// Monomials of `ring` with total degree exactly `total_degree`, grouped by
// multidegree. Each group is in decreasing degree-lex order. Throws
// ValidationError if variable_degrees does not match the ring arity or the
// degree vectors differ in length.
std::map<Multidegree, std::vector<Monomial>> monomials_by_multidegree(
    Context ring, std::span<const Multidegree> variable_degrees, std::uint32_t total_degree);

}  // namespace mrdi::algebra
