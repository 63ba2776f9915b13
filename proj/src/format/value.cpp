#include "mrdi/format/value.hpp"

#include <set>

#include "mrdi/error.hpp"

namespace mrdi::format {

using algebra::Context;

namespace {

template <class T>
const T& get_or_throw(const Value& v, const char* what) {
  if (auto* p = std::get_if<T>(&v.v)) return *p;
  throw UnsupportedType(std::string("value is not a ") + what);
}

struct ContextCollector {
  std::set<std::uint64_t> seen;
  std::vector<Context> out;

  void visit(Context c) {
    if (!c.is_reference() || seen.count(c.identity())) return;
    if (c.is_polynomial_ring()) visit(c.base());
    seen.insert(c.identity());
    out.push_back(c);
  }

  void visit(const Value& v) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, algebra::RingElem>) {
            visit(x.parent());
          } else if constexpr (std::is_same_v<T, Context>) {
            visit(x);
          } else if constexpr (std::is_same_v<T, algebra::ExactMatrix>) {
            visit(x.ring());
          } else if constexpr (std::is_same_v<T, algebra::MonomialMap>) {
            visit(x.source());
            visit(x.target());
          } else {
            for (const auto& item : x.items) visit(item);
          }
        },
        v.v);
  }
};

}  // namespace

const algebra::RingElem& Value::elem() const { return get_or_throw<algebra::RingElem>(*this, "ring element"); }
Context Value::context() const { return get_or_throw<Context>(*this, "ring"); }
const algebra::ExactMatrix& Value::matrix() const { return get_or_throw<algebra::ExactMatrix>(*this, "matrix"); }
const algebra::MonomialMap& Value::monomial_map() const {
  return get_or_throw<algebra::MonomialMap>(*this, "monomial map");
}
const std::vector<Value>& Value::vector_items() const { return get_or_throw<ValueVector>(*this, "vector").items; }
const std::vector<Value>& Value::tuple_items() const { return get_or_throw<ValueTuple>(*this, "tuple").items; }

std::vector<Context> contexts_of(const Value& value) {
  ContextCollector c;
  c.visit(value);
  return std::move(c.out);
}

}  // namespace mrdi::format
