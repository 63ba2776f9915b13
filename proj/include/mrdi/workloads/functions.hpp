#pragma once

#include "mrdi/ipc/worker.hpp"

namespace mrdi::workloads {

// Adds the functions workers serve by default:
//   identity(x)                      -> x
//   poly_square(p)                   -> p * p
//   det_mod_p(M over ZZ[t], p, D)    -> det(M mod p) over GF(p)[t]
//   kernel_block(monos, imgs, span)  -> Vector of kernel polynomials
void register_builtin_functions(ipc::FunctionRegistry& registry);

const ipc::FunctionRegistry& builtin_functions();

}  // namespace mrdi::workloads
