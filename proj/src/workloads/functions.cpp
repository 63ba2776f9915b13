#include "mrdi/workloads/functions.hpp"

#include "mrdi/error.hpp"
#include "mrdi/workloads/determinant.hpp"
#include "mrdi/workloads/kernel.hpp"

namespace mrdi::workloads {

namespace {

using format::Value;

void expect_args(const std::vector<Value>& args, std::size_t n, const char* fn) {
  if (args.size() != n) {
    throw ValidationError(std::string(fn) + " expects " + std::to_string(n) + " arguments, got " +
                          std::to_string(args.size()));
  }
}

std::uint64_t small_integer(const Value& v, const char* what) {
  const algebra::BigInt& n = v.elem().as_integer();
  if (sgn(n) < 0 || !n.fits_ulong_p()) throw ValidationError(std::string(what) + " out of range");
  return n.get_ui();
}

std::vector<algebra::Polynomial> polys(const Value& v) {
  std::vector<algebra::Polynomial> out;
  for (const Value& item : v.vector_items()) out.push_back(item.elem());
  return out;
}

}  // namespace

void register_builtin_functions(ipc::FunctionRegistry& registry) {
  registry.add("identity", [](const std::vector<Value>& args) -> Value {
    if (args.size() == 1) return args[0];
    return format::ValueTuple{args};
  });
  registry.add("poly_square", [](const std::vector<Value>& args) -> Value {
    expect_args(args, 1, "poly_square");
    return args[0].elem() * args[0].elem();
  });
  registry.add("det_mod_p", [](const std::vector<Value>& args) -> Value {
    expect_args(args, 3, "det_mod_p");
    const std::uint64_t p = small_integer(args[1], "prime");
    if (p >= algebra::kPrimeModulusLimit) throw ValidationError("prime out of range");
    return det_mod_prime(args[0].matrix(), static_cast<std::uint32_t>(p),
                         small_integer(args[2], "degree bound"));
  });
  registry.add("kernel_block", [](const std::vector<Value>& args) -> Value {
    expect_args(args, 3, "kernel_block");
    format::ValueVector out;
    for (auto& p : kernel_block(polys(args[0]), polys(args[1]), polys(args[2]))) {
      out.items.emplace_back(std::move(p));
    }
    return out;
  });
}

const ipc::FunctionRegistry& builtin_functions() {
  static const ipc::FunctionRegistry registry = [] {
    ipc::FunctionRegistry r;
    register_builtin_functions(r);
    return r;
  }();
  return registry;
}

}  // namespace mrdi::workloads
