#pragma once

#include <vector>

#include "mrdi/algebra/multidegree.hpp"
#include "mrdi/algebra/ring_elem.hpp"

namespace mrdi::algebra {

// Ring map QQ[x_1..x_n] -> QQ[s_1..s_k] sending each x_i to a single
// nonzero term. The exponent vectors of the images grade the source, and
// the map is homogeneous for that grading.
class MonomialMap {
 public:
  // Throws ValidationError unless both rings are multivariate over QQ,
  // there is one image per source variable, and every image is a single
  // nonzero term of the target ring.
  MonomialMap(Context source, Context target, std::vector<RingElem> images);

  Context source() const { return source_; }
  Context target() const { return target_; }
  const std::vector<RingElem>& images() const { return images_; }

  // deg(x_i) = exponent vector of the i-th image.
  std::vector<Multidegree> grading() const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  Context source_;
  Context target_;
  std::vector<RingElem> images_;
};

}  // namespace mrdi::algebra
