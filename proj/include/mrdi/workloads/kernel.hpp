#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mrdi/algebra/monomial_map.hpp"
#include "mrdi/algebra/multidegree.hpp"
#include "mrdi/format/value.hpp"

namespace mrdi::ipc {
class WorkerPool;
}

namespace mrdi::workloads {

using KernelComponents = std::map<algebra::Multidegree, std::vector<algebra::Polynomial>>;

// phi(p): every variable replaced by its image. Throws ContextError when
// p does not live in phi's source ring.
algebra::Polynomial evaluate_map(const algebra::MonomialMap& phi, const algebra::Polynomial& p);

// Kernel elements of phi up to total degree d, one linear-algebra block
// per multidegree. Within a block the monomials m_1..m_n of that
// multidegree give the matrix of coefficient vectors of phi(m_i); each
// nullspace vector v of its transpose yields sum v_i m_i.
//
// With `minimalize`, a block only keeps vectors that are new modulo the
// span of lower-degree generators times monomials. Blocks of one total
// degree run through parallel_map("kernel_block", ...) when a pool is
// given. Throws ValidationError for d == 0.
KernelComponents components_of_kernel(const algebra::MonomialMap& phi, std::uint32_t d,
                                      ipc::WorkerPool* pool = nullptr, bool minimalize = true);

// One block: `monomials` are the source monomials of one multidegree (as
// polynomials), `images` their images under phi, `span` polynomials of the
// same multidegree to reduce against (empty to keep every vector).
std::vector<algebra::Polynomial> kernel_block(const std::vector<algebra::Polynomial>& monomials,
                                              const std::vector<algebra::Polynomial>& images,
                                              const std::vector<algebra::Polynomial>& span);

// File shape of a result: Vector of Tuple(Vector of ZZRingElem
// multidegree, Vector of MPolyRingElem generators).
format::Value components_to_value(const KernelComponents& components);
KernelComponents components_from_value(const format::Value& value);

}  // namespace mrdi::workloads
