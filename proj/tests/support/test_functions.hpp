#pragma once

#include "mrdi/ipc/worker.hpp"

namespace testfns {

// Extra remote functions for pool tests:
//   always_fail(...)   throws "deliberate failure"
//   fail_on(n, k)      returns n unless n == k, then throws
//   sleep_ms(n)        sleeps n milliseconds, returns n
//   fresh_ring(p)      t^2 + 1 over GF(p)[fresh] (a context the
//                      coordinator has never seen)
//   nested_lift(f)     f over (ZZ[t])[u] times u
//   crash()            exits the worker process
void register_test_functions(mrdi::ipc::FunctionRegistry& registry);

}  // namespace testfns
