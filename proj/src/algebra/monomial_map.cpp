#include "mrdi/algebra/monomial_map.hpp"

#include "mrdi/error.hpp"

namespace mrdi::algebra {

MonomialMap::MonomialMap(Context source, Context target, std::vector<RingElem> images)
    : source_(source), target_(target), images_(std::move(images)) {
  for (Context r : {source_, target_}) {
    if (r.kind() != RingKind::Multivariate || r.base().kind() != RingKind::Rationals) {
      throw ValidationError("monomial maps go between multivariate rings over QQ, got " +
                            r.to_string());
    }
  }
  if (images_.size() != source_.arity()) {
    throw ValidationError("monomial map needs " + std::to_string(source_.arity()) +
                          " images, got " + std::to_string(images_.size()));
  }
  for (const auto& img : images_) {
    if (!(img.parent() == target_)) {
      throw ValidationError("image " + img.to_string() + " is not in " + target_.to_string());
    }
    if (img.terms().size() != 1) {
      throw ValidationError("image " + img.to_string() + " is not a single nonzero term");
    }
  }
}

std::vector<Multidegree> MonomialMap::grading() const {
  std::vector<Multidegree> out;
  out.reserve(images_.size());
  for (const auto& img : images_) {
    auto e = img.terms()[0].monomial.exponents();
    out.emplace_back(std::vector<std::int64_t>(e.begin(), e.end()));
  }
  return out;
}

}  // namespace mrdi::algebra
