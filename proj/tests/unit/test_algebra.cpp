#include "doctest.h"

#include <random>

#include "generators.hpp"
#include "mrdi/algebra/linalg.hpp"
#include "mrdi/algebra/modular.hpp"
#include "mrdi/algebra/monomial_map.hpp"
#include "mrdi/algebra/multidegree.hpp"
#include "mrdi/algebra/prime_field.hpp"
#include "mrdi/error.hpp"
#include "oracles.hpp"

using namespace mrdi;
using namespace mrdi::algebra;

namespace {

RingElem zz(long n) { return RingElem::integer(BigInt(n)); }
RingElem qq(long n, long d = 1) { return RingElem::rational(make_rational(n, d)); }

}  // namespace

TEST_CASE("integer and rational text") {
  CHECK(parse_integer("0") == 0);
  CHECK(parse_integer("-123456789012345678901234567890") ==
        BigInt("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer("007"), ValidationError);
  CHECK_THROWS_AS(parse_integer("-0"), ValidationError);
  CHECK_THROWS_AS(parse_integer("+1"), ValidationError);
  CHECK_THROWS_AS(parse_integer(""), ValidationError);
  CHECK_THROWS_AS(parse_integer("1e3"), ValidationError);

  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(to_text(parse_rational("-6/4")) == "-3/2");
  CHECK(to_text(parse_rational("4/2")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
  CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK(previous_prime(kPrimeModulusLimit) == 2147483647);
  CHECK(previous_prime(3) == 2);
  CHECK(previous_prime(2) == 0);

  const std::uint64_t p = 2147483647;
  for (std::uint64_t a : std::vector<std::uint64_t>{1, 2, 12345, p - 1}) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
  CHECK(pow_mod(3, p - 1, p) == 1);
}

TEST_CASE("contexts are interned") {
  const Context a = multivariate_ring(rationals(), {"x", "y"});
  const Context b = multivariate_ring(rationals(), {"x", "y"});
  CHECK(a == b);
  CHECK(a.identity() == b.identity());
  CHECK_FALSE(a == multivariate_ring(rationals(), {"y", "x"}));
  CHECK_FALSE(a == multivariate_ring(integers(), {"x", "y"}));
  CHECK(polynomial_ring(polynomial_ring(integers(), "t"), "u").to_string() == "ZZ[t][u]");
  CHECK(polynomial_ring(prime_field(101), "t").to_string() == "GF(101)[t]");
  CHECK(prime_field(7) == prime_field(7));

  CHECK_THROWS_AS(prime_field(100), ValidationError);
  CHECK_THROWS_AS(prime_field(4294967311ull), ValidationError);
  CHECK_THROWS_AS(multivariate_ring(rationals(), {"x", "x"}), ValidationError);
  CHECK_THROWS_AS(multivariate_ring(rationals(), {}), ValidationError);
  CHECK_THROWS_AS(polynomial_ring(integers(), ""), ValidationError);
}

TEST_CASE("monomial order is degree-lex") {
  const Monomial x2({2, 0}), xy({1, 1}), y2({0, 2}), x({1, 0}), one = Monomial::one(2);
  CHECK(x2 > xy);
  CHECK(xy > y2);
  CHECK(y2 > x);
  CHECK(x > one);
  CHECK((x * x) == x2);
  CHECK(xy.divisible_by(x));
  CHECK_FALSE(x.divisible_by(xy));
  const std::vector<std::string> syms{"x", "y"};
  CHECK(xy.to_string(syms) == "x*y");
  CHECK(one.to_string(syms) == "1");
}

TEST_CASE("polynomial arithmetic") {
  const Context r = multivariate_ring(rationals(), {"x", "y"});
  const RingElem x = RingElem::variable(r, 0), y = RingElem::variable(r, 1);
  const RingElem p = x * x * x - x * y + RingElem::one(r);
  CHECK(p.to_string() == "x^3 - x*y + 1");
  CHECK(p.terms().size() == 3);
  CHECK((p - p).is_zero());
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(-(-p) == p);
  CHECK(RingElem::from_integer(r, 3) * x == x + x + x);

  const Context s = multivariate_ring(rationals(), {"s"});
  CHECK_THROWS_AS(x + RingElem::variable(s, 0), ContextError);

  const Context f = polynomial_ring(prime_field(5), "t");
  const RingElem t = RingElem::variable(f, 0);
  CHECK(RingElem::from_integer(f, 5) * t == RingElem::zero(f));
  CHECK((t + RingElem::one(f)) * (t + RingElem::from_integer(f, 4)) ==
        t * t - RingElem::one(f));
  CHECK(t.degree() == 1);
}

TEST_CASE("ring axioms on random elements") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Context r = gen::ring(rng, 1);
    const RingElem a = gen::element(rng, r), b = gen::element(rng, r), c = gen::element(rng, r);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("matrices") {
  const Context r = polynomial_ring(integers(), "t");
  const RingElem t = RingElem::variable(r, 0), one = RingElem::one(r);
  const ExactMatrix m(r, 2, 2, {t, one, one, t});
  CHECK(m * ExactMatrix::identity(r, 2) == m);
  CHECK(m.transpose() == m);
  CHECK_THROWS_AS(ExactMatrix(r, 2, 2, {t}), ValidationError);
  CHECK_THROWS_AS(ExactMatrix(r, 1, 1, {zz(1)}), ContextError);
  CHECK_THROWS_AS(m * ExactMatrix(r, 3, 1), ValidationError);
}

TEST_CASE("rref and nullspace over QQ") {
  const Context q = rationals();
  const ExactMatrix a(q, 2, 3, {qq(1), qq(2), qq(3), qq(2), qq(4), qq(6)});
  const auto res = rref_over_q(a);
  CHECK(res.pivots == std::vector<std::size_t>{0});
  CHECK(res.rref(0, 1) == qq(2));
  CHECK(res.rref(1, 2) == qq(0));

  const auto ns = nullspace_over_q(a);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == RationalVector{2, -1, 0});
  CHECK(ns[1] == RationalVector{3, 0, -1});
  // primitive, positive leading entry
  CHECK(make_primitive({make_rational(-1, 2), make_rational(1, 3)}) == RationalVector{3, -2});

  // the 1x2 matrix [1 1] from the twisted conic block
  RationalMatrix row(1, 2);
  row(0, 0) = 1;
  row(0, 1) = 1;
  CHECK(nullspace(row) == std::vector<RationalVector>{{1, -1}});
}

TEST_CASE("nullspace matches an independent solver") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    RationalMatrix m(rows, cols);
    std::vector<oracle::QVector> dense(rows, oracle::QVector(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        BigRational v = (rng() % 3 == 0) ? BigRational(0) : gen::rational(rng, 4);
        m(r, c) = v;
        dense[r][c] = v;
      }
    }
    const auto ours = nullspace(m);
    const auto theirs = oracle::solve_nullspace(dense, cols);
    CHECK(ours.size() == theirs.size());
    CHECK(rank(m) == oracle::rank_of(dense));
    for (const auto& v : ours) {
      for (std::size_t r = 0; r < rows; ++r) {
        BigRational dot = 0;
        for (std::size_t c = 0; c < cols; ++c) dot += m(r, c) * v[c];
        CHECK(dot == 0);
      }
    }
    // same span: stacking both bases does not raise the rank
    std::vector<oracle::QVector> both(theirs);
    for (const auto& v : ours) both.push_back(v);
    CHECK(oracle::rank_of(both) == theirs.size());
  }
}

TEST_CASE("reduction and modular determinants") {
  const Context r = polynomial_ring(integers(), "t");
  const RingElem t = RingElem::variable(r, 0);
  const RingElem p = RingElem::from_integer(r, -7) * t * t + RingElem::from_integer(r, 12);
  const RingElem pm = reduce_mod_prime(p, 5);
  CHECK(pm.parent() == polynomial_ring(prime_field(5), "t"));
  CHECK(pm.coefficient(2).residue() == 3);
  CHECK(pm.coefficient(0).residue() == 2);
  CHECK_THROWS_AS(reduce_mod_prime(p, 6), ValidationError);

  std::vector<std::uint32_t> a{2, 3, 1, 4};
  CHECK(det_mod_p(a, 2, 7) == 5);  // 8 - 3
  std::vector<std::uint32_t> singular{1, 2, 2, 4};
  CHECK(det_mod_p(singular, 2, 101) == 0);

  const std::vector<std::uint32_t> xs{0, 1, 2}, ys{1, 2, 5};  // 1 + t^2
  CHECK(interpolate_mod_p(xs, ys, 13) == std::vector<std::uint32_t>{1, 0, 1});

  const ExactMatrix m(r, 2, 2, {t, RingElem::one(r), RingElem::one(r), t});
  const RingElem d = det_univariate_over_prime_field(reduce_mod_prime(m, 101), 2);
  CHECK(d.coefficient(2).residue() == 1);
  CHECK(d.coefficient(0).residue() == 100);
  CHECK_THROWS_WITH_AS(det_univariate_over_prime_field(reduce_mod_prime(m, 2), 2),
                       doctest::Contains("insufficient evaluation points"), ValidationError);
}

TEST_CASE("modular determinant agrees with cofactor expansion mod p") {
  gen::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const ExactMatrix m = gen::zt_matrix(rng, 1 + rng() % 4, 3, 50);
    const RingElem expect = reduce_mod_prime(oracle::cofactor_det(m), 65521);
    CHECK(det_univariate_over_prime_field(reduce_mod_prime(m, 65521), 3 * m.rows()) == expect);
  }
}

TEST_CASE("balanced CRT") {
  const std::vector<BigInt> moduli{3, 5, 7};
  const CrtBasis basis(moduli);
  CHECK(basis.modulus() == 105);
  for (long x = -52; x <= 52; ++x) {
    std::vector<BigInt> res;
    for (const auto& m : moduli) res.push_back(((BigInt(x) % m) + m) % m);
    CHECK(basis.combine_balanced(res) == x);
  }
  // upper end of (-M/2, M/2] for even M
  CHECK(crt_combine_balanced(std::vector<BigInt>{1, 0}, std::vector<BigInt>{2, 3}) == 3);
  CHECK_THROWS_AS(CrtBasis({4, 6}), ValidationError);

  gen::Rng rng(9);
  const std::vector<std::int64_t> small{7, 11, 13, 17};
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int64_t> r;
    std::vector<BigInt> rb, mb;
    for (auto m : small) {
      r.push_back(static_cast<std::int64_t>(rng() % m));
      rb.emplace_back(static_cast<long>(r.back()));
      mb.emplace_back(static_cast<long>(m));
    }
    std::int64_t x = oracle::crt_by_search(r, small);
    if (x > 17017 / 2) x -= 17017;
    CHECK(crt_combine_balanced(rb, mb) == x);
  }
}

TEST_CASE("multidegrees") {
  const Context r = multivariate_ring(rationals(), {"x", "y", "z"});
  const std::vector<Multidegree> deg{Multidegree({2, 0}), Multidegree({1, 1}), Multidegree({0, 2})};
  const auto groups = monomials_by_multidegree(r, deg, 2);
  CHECK(groups.size() == 5);
  const auto& mid = groups.at(Multidegree({2, 2}));
  REQUIRE(mid.size() == 2);
  CHECK(mid[0] == Monomial({1, 0, 1}));
  CHECK(mid[1] == Monomial({0, 2, 0}));
  CHECK(Multidegree({2, 2}).to_string() == "(2,2)");
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Monomial({2, 0, 0}));
  CHECK_THROWS_AS(monomials_by_multidegree(r, std::vector<Multidegree>{Multidegree({1})}, 1),
                  ValidationError);
  for (std::uint32_t t = 0; t <= 4; ++t) {
    CHECK(monomials_of_degree(4, t).size() == oracle::all_monomials(4, t).size());
  }
}

TEST_CASE("monomial maps") {
  const Context src = multivariate_ring(rationals(), {"x", "y", "z"});
  const Context tgt = multivariate_ring(rationals(), {"s", "t"});
  const RingElem s = RingElem::variable(tgt, 0), t = RingElem::variable(tgt, 1);
  const MonomialMap phi(src, tgt, {s * s, s * t, t * t});
  CHECK(phi.grading()[1] == Multidegree({1, 1}));
  CHECK_THROWS_AS(MonomialMap(src, tgt, {s * s, s * t}), ValidationError);
  CHECK_THROWS_AS(MonomialMap(src, tgt, {s * s, s + t, t}), ValidationError);
  CHECK_THROWS_AS(MonomialMap(src, tgt, {s, RingElem::zero(tgt), t}), ValidationError);
  const Context zsrc = multivariate_ring(integers(), {"x"});
  CHECK_THROWS_AS(MonomialMap(zsrc, tgt, {s}), ValidationError);
}
