#pragma once

#include <variant>
#include <vector>

#include "mrdi/algebra/matrix.hpp"
#include "mrdi/algebra/monomial_map.hpp"
#include "mrdi/algebra/ring_elem.hpp"

namespace mrdi::format {

struct Value;

// Homogeneous sequence: every item has the same `_type` tree.
struct ValueVector {
  std::vector<Value> items;
  friend bool operator==(const ValueVector&, const ValueVector&) = default;
};

// Heterogeneous fixed-length sequence.
struct ValueTuple {
  std::vector<Value> items;
  friend bool operator==(const ValueTuple&, const ValueTuple&) = default;
};

// Anything save/load understands.
struct Value {
  std::variant<algebra::RingElem, algebra::Context, algebra::ExactMatrix, algebra::MonomialMap,
               ValueVector, ValueTuple>
      v;

  Value() : v(algebra::RingElem()) {}
  Value(algebra::RingElem e) : v(std::move(e)) {}  // NOLINT
  Value(algebra::Context c) : v(c) {}  // NOLINT
  Value(algebra::ExactMatrix m) : v(std::move(m)) {}  // NOLINT
  Value(algebra::MonomialMap m) : v(std::move(m)) {}  // NOLINT
  Value(ValueVector seq) : v(std::move(seq)) {}  // NOLINT
  Value(ValueTuple tup) : v(std::move(tup)) {}  // NOLINT

  // Accessors throw UnsupportedType on a kind mismatch.
  const algebra::RingElem& elem() const;
  algebra::Context context() const;
  const algebra::ExactMatrix& matrix() const;
  const algebra::MonomialMap& monomial_map() const;
  const std::vector<Value>& vector_items() const;
  const std::vector<Value>& tuple_items() const;

  friend bool operator==(const Value&, const Value&) = default;
};

template <class... Ts>
ValueTuple make_tuple(Ts&&... items) {
  ValueTuple t;
  (t.items.emplace_back(std::forward<Ts>(items)), ...);
  return t;
}

// Contexts reachable from a value, each after the contexts it depends on
// (post-order over base rings), without duplicates. ZZ and QQ are omitted.
std::vector<algebra::Context> contexts_of(const Value& value);

}  // namespace mrdi::format
