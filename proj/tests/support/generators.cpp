#include "generators.hpp"

#include <algorithm>

#include "mrdi/algebra/prime_field.hpp"

namespace gen {

using namespace mrdi;
using algebra::BigInt;
using algebra::Context;
using algebra::RingElem;

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::string symbol(Rng& rng) {
  static const char* names[] = {"x", "y", "z", "t", "u", "v", "w", "a1", "b_2", "q"};
  return names[pick(rng, 10)];
}

std::vector<std::string> distinct_symbols(Rng& rng, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(symbol(rng) + std::to_string(i));
  return out;
}

}  // namespace

BigInt integer(Rng& rng, unsigned bits) {
  BigInt v = 0;
  for (unsigned done = 0; done < bits; done += 32) v = (v << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
  if (bits % 32 != 0) v >>= (32 - bits % 32);
  return (rng() & 1) ? BigInt(-v) : v;
}

algebra::BigRational rational(Rng& rng, unsigned bits) {
  BigInt d = abs(integer(rng, bits)) + 1;
  return algebra::make_rational(integer(rng, bits), d);
}

std::uint64_t small_prime(Rng& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 101, 65521, 1000003, 2147483647};
  return primes[pick(rng, 8)];
}

Context ring(Rng& rng, int depth) {
  const std::size_t choice = pick(rng, depth > 0 ? 5 : 3);
  switch (choice) {
    case 0: return algebra::integers();
    case 1: return algebra::rationals();
    case 2: return algebra::prime_field(small_prime(rng));
    case 3: return algebra::polynomial_ring(ring(rng, depth - 1), symbol(rng));
    default: {
      Context base = pick(rng, 2) == 0 ? algebra::rationals() : algebra::integers();
      return algebra::multivariate_ring(base, distinct_symbols(rng, 1 + pick(rng, 3)));
    }
  }
}

RingElem element(Rng& rng, Context r, std::size_t max_terms) {
  switch (r.kind()) {
    case algebra::RingKind::Integers: return RingElem::integer(integer(rng, 1 + pick(rng, 130)));
    case algebra::RingKind::Rationals: return RingElem::rational(rational(rng, 1 + pick(rng, 90)));
    case algebra::RingKind::PrimeField: return RingElem::residue(r, rng() % r.modulus());
    case algebra::RingKind::Univariate:
    case algebra::RingKind::Multivariate: {
      std::vector<algebra::Term> terms;
      const std::size_t n = pick(rng, max_terms + 1);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(r.arity());
        for (auto& x : e) x = static_cast<std::uint32_t>(pick(rng, 7));
        terms.push_back({algebra::Monomial(e), element(rng, r.base(), 2)});
      }
      return RingElem::polynomial(r, std::move(terms));
    }
  }
  return RingElem();
}

RingElem univariate(Rng& rng, Context r, std::uint32_t max_degree) {
  std::vector<algebra::Term> terms;
  const bool sparse = pick(rng, 2) == 0;
  for (std::uint32_t k = 0; k <= max_degree; ++k) {
    if (sparse && pick(rng, 4) != 0) continue;
    terms.push_back({algebra::Monomial({k}), element(rng, r.base(), 2)});
  }
  return RingElem::polynomial(r, std::move(terms));
}

algebra::ExactMatrix zt_matrix(Rng& rng, std::size_t n, std::uint32_t max_degree, long max_coeff) {
  const Context r = algebra::polynomial_ring(algebra::integers(), "t");
  std::vector<RingElem> entries;
  for (std::size_t i = 0; i < n * n; ++i) {
    std::vector<algebra::Term> terms;
    const std::uint32_t deg = static_cast<std::uint32_t>(pick(rng, max_degree + 1));
    for (std::uint32_t k = 0; k <= deg; ++k) {
      const long c = static_cast<long>(rng() % (2 * static_cast<std::uint64_t>(max_coeff) + 1)) - max_coeff;
      terms.push_back({algebra::Monomial({k}), RingElem::integer(BigInt(c))});
    }
    entries.push_back(RingElem::polynomial(r, std::move(terms)));
  }
  return algebra::ExactMatrix(r, n, n, std::move(entries));
}

algebra::MonomialMap monomial_map(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::string> xs, ss;
  for (std::size_t i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) ss.push_back("s" + std::to_string(i + 1));
  const Context source = algebra::multivariate_ring(algebra::rationals(), xs);
  const Context target = algebra::multivariate_ring(algebra::rationals(), ss);
  std::vector<RingElem> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(k, 0);
    do {
      for (auto& x : e) x = static_cast<std::uint32_t>(pick(rng, 3));
    } while (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; }));
    long num = static_cast<long>(1 + pick(rng, 4)) * (pick(rng, 2) ? 1 : -1);
    images.push_back(RingElem::term(target, algebra::Monomial(e),
                                    RingElem::rational(algebra::make_rational(num, 1 + pick(rng, 3)))));
  }
  return algebra::MonomialMap(source, target, std::move(images));
}

format::Value value(Rng& rng, int depth) {
  const std::size_t choice = pick(rng, depth > 0 ? 6 : 4);
  switch (choice) {
    case 0:
    case 1: {
      Context r = ring(rng);
      return element(rng, r);
    }
    case 2: return ring(rng);
    case 3: {
      if (pick(rng, 2) == 0) {
        Context r = ring(rng, 1);
        const std::size_t rows = pick(rng, 4), cols = pick(rng, 4);
        std::vector<RingElem> entries;
        for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(element(rng, r, 3));
        return algebra::ExactMatrix(r, rows, cols, std::move(entries));
      }
      return monomial_map(rng, 1 + pick(rng, 4), 1 + pick(rng, 3));
    }
    case 4: {
      format::ValueVector v;
      Context r = ring(rng, 1);
      const std::size_t n = pick(rng, 4);
      for (std::size_t i = 0; i < n; ++i) v.items.emplace_back(element(rng, r, 3));
      return v;
    }
    default: {
      format::ValueTuple t;
      const std::size_t n = pick(rng, 4);
      for (std::size_t i = 0; i < n; ++i) t.items.push_back(value(rng, depth - 1));
      return t;
    }
  }
}

namespace {

std::string text(Rng& rng) {
  static const char* pieces[] = {"a", "Z", "0", " ", "\"", "\\", "\n", "\t", "{", "}", "[", "]",
                                 ":", ",", "\x01", "\xc3\xa9", "\xe2\x88\x9e", "\xf0\x9f\x98\x80"};
  std::string s;
  const std::size_t n = pick(rng, 12);
  for (std::size_t i = 0; i < n; ++i) s += pieces[pick(rng, 18)];
  return s;
}

format::Uuid uuid(Rng& rng) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (int i = 0; i < 32; ++i) {
    if (i == 8 || i == 12 || i == 16 || i == 20) s += '-';
    s += hex[rng() % 16];
  }
  return format::Uuid::from_string(s);
}

format::TypeNode type_node(Rng& rng, int depth) {
  format::TypeNode node = format::TypeNode::simple(text(rng) + "T");
  switch (pick(rng, depth > 0 ? 4 : 2)) {
    case 0: break;
    case 1: node = format::TypeNode::with_uuid(node.name, uuid(rng)); break;
    case 2: node = format::TypeNode::with_node(node.name, type_node(rng, depth - 1)); break;
    default: {
      format::TypeNode::ParamMap m;
      const std::size_t n = 1 + pick(rng, 3);
      for (std::size_t i = 0; i < n; ++i) {
        std::string key = text(rng) + std::to_string(i);
        if (pick(rng, 2) == 0) {
          m.emplace_back(std::move(key), format::TypeNode::Param(uuid(rng)));
        } else {
          m.emplace_back(std::move(key), format::TypeNode::Param(format::Box<format::TypeNode>(type_node(rng, depth - 1))));
        }
      }
      node = format::TypeNode::with_map(node.name, std::move(m));
    }
  }
  return node;
}

format::DataNode data_node(Rng& rng, int depth) {
  switch (pick(rng, depth > 0 ? 3 : 1)) {
    case 0: return format::DataNode{text(rng)};
    case 1: {
      format::DataNode::List l;
      const std::size_t n = pick(rng, 4);
      for (std::size_t i = 0; i < n; ++i) l.push_back(data_node(rng, depth - 1));
      return format::DataNode{std::move(l)};
    }
    default: {
      format::DataNode::Map m;
      const std::size_t n = pick(rng, 4);
      for (std::size_t i = 0; i < n; ++i) m.emplace_back(text(rng) + std::to_string(i), data_node(rng, depth - 1));
      return format::DataNode{std::move(m)};
    }
  }
}

format::MrdiDocument ipc_document(Rng& rng) {
  format::MrdiDocument doc;
  doc.type = type_node(rng, 2);
  doc.data = data_node(rng, 3);
  return doc;
}

format::RefDocument ref_document(Rng& rng) {
  return format::RefDocument{type_node(rng, 1), data_node(rng, 2)};
}

}  // namespace

ipc::Message message(Rng& rng) {
  switch (pick(rng, 5)) {
    case 0: return ipc::Message::load_context(uuid(rng), ref_document(rng));
    case 1: return ipc::Message::call(rng(), text(rng), ipc_document(rng));
    case 2: {
      format::RefTable refs;
      const std::size_t n = pick(rng, 3);
      for (std::size_t i = 0; i < n; ++i) refs.emplace(uuid(rng), ref_document(rng));
      return ipc::Message::result(rng(), ipc_document(rng), std::move(refs));
    }
    case 3: return ipc::Message::failure(rng(), text(rng));
    default: return ipc::Message::shutdown();
  }
}

}  // namespace gen
