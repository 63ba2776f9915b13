#include "mrdi/algebra/multidegree.hpp"

#include "mrdi/error.hpp"

namespace mrdi::algebra {

Multidegree Multidegree::operator+(const Multidegree& other) const {
  if (size() != other.size()) throw ValidationError("multidegree length mismatch");
  Multidegree out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.components[i] += other.components[i];
  return out;
}

Multidegree Multidegree::operator-(const Multidegree& other) const {
  if (size() != other.size()) throw ValidationError("multidegree length mismatch");
  Multidegree out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.components[i] -= other.components[i];
  return out;
}

std::string Multidegree::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(components[i]);
  }
  return out + ")";
}

Multidegree multidegree_of(const Monomial& m, std::span<const Multidegree> variable_degrees) {
  const std::size_t k = variable_degrees.empty() ? 0 : variable_degrees[0].size();
  Multidegree out(std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      out.components[j] += static_cast<std::int64_t>(m[i]) * variable_degrees[i].components[j];
    }
  }
  return out;
}

namespace {

void enumerate(std::vector<std::uint32_t>& exps, std::size_t index, std::uint32_t remaining,
               std::vector<Monomial>& out) {
  if (index + 1 == exps.size()) {
    exps[index] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    exps[index] = e;
    enumerate(exps, index + 1, remaining - e, out);
  }
  exps[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t total_degree) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (total_degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> exps(arity, 0);
  enumerate(exps, 0, total_degree, out);
  return out;
}

std::map<Multidegree, std::vector<Monomial>> monomials_by_multidegree(
    Context ring, std::span<const Multidegree> variable_degrees, std::uint32_t total_degree) {
  if (variable_degrees.size() != ring.arity()) {
    throw ValidationError("expected " + std::to_string(ring.arity()) +
                          " variable degrees, got " + std::to_string(variable_degrees.size()));
  }
  for (const auto& d : variable_degrees) {
    if (d.size() != variable_degrees[0].size()) {
      throw ValidationError("variable multidegrees differ in length");
    }
  }
  std::map<Multidegree, std::vector<Monomial>> groups;
  for (auto& m : monomials_of_degree(ring.arity(), total_degree)) {
    Multidegree d = multidegree_of(m, variable_degrees);
    groups[std::move(d)].push_back(std::move(m));
  }
  return groups;
}

}  // namespace mrdi::algebra
