#include "test_functions.hpp"

#include <unistd.h>

#include <chrono>
#include <stdexcept>
#include <thread>

#include "mrdi/algebra/ring_elem.hpp"

namespace testfns {

using mrdi::format::Value;
using namespace mrdi::algebra;

void register_test_functions(mrdi::ipc::FunctionRegistry& registry) {
  registry.add("always_fail", [](const std::vector<Value>&) -> Value {
    throw std::runtime_error("deliberate failure");
  });
  registry.add("fail_on", [](const std::vector<Value>& args) -> Value {
    if (args.at(0).elem() == args.at(1).elem()) throw std::runtime_error("fail_on hit");
    return args[0];
  });
  registry.add("sleep_ms", [](const std::vector<Value>& args) -> Value {
    std::this_thread::sleep_for(std::chrono::milliseconds(args.at(0).elem().as_integer().get_si()));
    return args[0];
  });
  registry.add("fresh_ring", [](const std::vector<Value>& args) -> Value {
    const Context r = polynomial_ring(prime_field(args.at(0).elem().as_integer().get_ui()), "fresh");
    return RingElem::variable(r, 0) * RingElem::variable(r, 0) + RingElem::one(r);
  });
  registry.add("nested_lift", [](const std::vector<Value>& args) -> Value {
    const RingElem& f = args.at(0).elem();
    return f * RingElem::variable(f.parent(), 0);
  });
  registry.add("crash", [](const std::vector<Value>&) -> Value { ::_exit(7); });
}

}  // namespace testfns
