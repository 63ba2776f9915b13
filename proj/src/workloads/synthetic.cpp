#include "mrdi/workloads/synthetic.hpp"

#include <random>

namespace mrdi::workloads {

using algebra::BigInt;
using algebra::RingElem;

namespace {

BigInt signed64(std::uint64_t bits) {
  BigInt v;
  mpz_import(v.get_mpz_t(), 1, 1, sizeof bits, 0, 0, &bits);
  if (bits >> 63) v -= BigInt(1) << 64;
  return v;
}

}  // namespace

algebra::ExactMatrix synthetic_det_matrix(std::uint64_t seed, std::size_t n, std::uint32_t degree) {
  std::mt19937_64 rng(seed);
  const algebra::Context ring = algebra::polynomial_ring(algebra::integers(), "t");
  std::vector<RingElem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    std::vector<algebra::Term> terms;
    for (std::uint32_t k = 0; k <= degree; ++k) {
      BigInt c = signed64(rng());
      if (k == degree && c == 0) c = 1;
      if (c != 0) terms.push_back({algebra::Monomial({k}), RingElem::integer(c)});
    }
    entries.push_back(RingElem::polynomial(ring, std::move(terms)));
  }
  return algebra::ExactMatrix(ring, n, n, std::move(entries));
}

algebra::MonomialMap synthetic_kernel_map(std::uint64_t seed, std::size_t source_vars,
                                          std::size_t target_vars) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> xs, ss;
  for (std::size_t i = 1; i <= source_vars; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= target_vars; ++i) ss.push_back("s" + std::to_string(i));
  const algebra::Context source = algebra::multivariate_ring(algebra::rationals(), xs);
  const algebra::Context target = algebra::multivariate_ring(algebra::rationals(), ss);

  std::vector<RingElem> images;
  for (std::size_t i = 0; i < source_vars; ++i) {
    std::vector<std::uint32_t> exps(target_vars, 0);
    ++exps[rng() % target_vars];
    ++exps[rng() % target_vars];
    const auto c = static_cast<long>(1 + rng() % 5);
    images.push_back(RingElem::term(target, algebra::Monomial(std::move(exps)),
                                    RingElem::rational(algebra::BigRational(c))));
  }
  return algebra::MonomialMap(source, target, std::move(images));
}

}  // namespace mrdi::workloads
