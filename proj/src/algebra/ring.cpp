#include "mrdi/algebra/ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "mrdi/algebra/prime_field.hpp"
#include "mrdi/error.hpp"

namespace mrdi::algebra {

namespace detail {
struct RingNode {
  RingDescriptor descriptor;
  std::uint64_t identity;
};
}  // namespace detail

namespace {

using RegistryKey =
    std::tuple<RingKind, std::uint64_t, std::uint64_t, std::vector<std::string>>;

struct Registry {
  std::mutex mutex;
  std::map<RegistryKey, std::unique_ptr<detail::RingNode>> nodes;
  std::uint64_t next_identity = 1;
};

Registry& registry() {
  static Registry* instance = new Registry();  // never destroyed; handles outlive statics
  return *instance;
}

const char* kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::Integers: return "ZZ";
    case RingKind::Rationals: return "QQ";
    case RingKind::PrimeField: return "GF";
    case RingKind::Univariate: return "univariate";
    case RingKind::Multivariate: return "multivariate";
  }
  return "?";
}

}  // namespace

Context::Context() {
  static const detail::RingNode* zz = intern_context(RingDescriptor::integers()).node_;
  node_ = zz;
}

const RingDescriptor& Context::descriptor() const { return node_->descriptor; }
RingKind Context::kind() const { return node_->descriptor.kind(); }
std::uint64_t Context::identity() const { return node_->identity; }

std::uint64_t Context::modulus() const {
  if (kind() != RingKind::PrimeField) {
    throw ContextError(to_string() + " is not a prime field");
  }
  return node_->descriptor.modulus();
}

Context Context::base() const {
  if (!node_->descriptor.base()) {
    throw ContextError(to_string() + " has no base ring");
  }
  return *node_->descriptor.base();
}

std::span<const std::string> Context::symbols() const {
  return node_->descriptor.symbols();
}

std::size_t Context::arity() const { return node_->descriptor.symbols().size(); }

std::string Context::to_string() const {
  const RingDescriptor& d = node_->descriptor;
  switch (d.kind()) {
    case RingKind::Integers: return "ZZ";
    case RingKind::Rationals: return "QQ";
    case RingKind::PrimeField: return "GF(" + std::to_string(d.modulus()) + ")";
    case RingKind::Univariate:
    case RingKind::Multivariate: {
      std::string out = d.base()->to_string() + "[";
      for (std::size_t i = 0; i < d.symbols().size(); ++i) {
        if (i) out += ",";
        out += d.symbols()[i];
      }
      return out + "]";
    }
  }
  return "?";
}

RingDescriptor RingDescriptor::integers() {
  return RingDescriptor(RingKind::Integers, 0, std::nullopt, {});
}

RingDescriptor RingDescriptor::rationals() {
  return RingDescriptor(RingKind::Rationals, 0, std::nullopt, {});
}

RingDescriptor RingDescriptor::prime_field(std::uint64_t p) {
  return RingDescriptor(RingKind::PrimeField, p, std::nullopt, {});
}

RingDescriptor RingDescriptor::univariate(Context base, std::string symbol) {
  return RingDescriptor(RingKind::Univariate, 0, base, {std::move(symbol)});
}

RingDescriptor RingDescriptor::multivariate(Context base, std::vector<std::string> symbols) {
  return RingDescriptor(RingKind::Multivariate, 0, base, std::move(symbols));
}

void RingDescriptor::validate() const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
      if (base_ || !symbols_.empty() || modulus_ != 0) {
        throw ValidationError(std::string(kind_name(kind_)) + " takes no parameters");
      }
      return;
    case RingKind::PrimeField:
      if (modulus_ >= kPrimeModulusLimit || !is_prime(modulus_)) {
        throw ValidationError("prime field modulus must be a prime below 2^31, got " +
                              std::to_string(modulus_));
      }
      return;
    case RingKind::Univariate:
    case RingKind::Multivariate: {
      if (!base_) throw ValidationError("polynomial ring without base ring");
      if (symbols_.empty()) throw ValidationError("polynomial ring without symbols");
      if (kind_ == RingKind::Univariate && symbols_.size() != 1) {
        throw ValidationError("univariate ring takes exactly one symbol");
      }
      std::set<std::string> seen;
      for (const auto& s : symbols_) {
        if (s.empty()) throw ValidationError("empty ring symbol");
        if (!seen.insert(s).second) {
          throw ValidationError("duplicate ring symbol \"" + s + "\"");
        }
      }
      return;
    }
  }
}

Context intern_context(const RingDescriptor& descriptor) {
  descriptor.validate();
  RegistryKey key{descriptor.kind(), descriptor.modulus(),
                  descriptor.base() ? descriptor.base()->identity() : 0,
                  descriptor.symbols()};
  Registry& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto it = reg.nodes.find(key);
  if (it == reg.nodes.end()) {
    auto node = std::make_unique<detail::RingNode>(
        detail::RingNode{descriptor, reg.next_identity++});
    it = reg.nodes.emplace(std::move(key), std::move(node)).first;
  }
  return Context(it->second.get());
}

Context integers() { return Context(); }
Context rationals() { return intern_context(RingDescriptor::rationals()); }
Context prime_field(std::uint64_t p) { return intern_context(RingDescriptor::prime_field(p)); }

Context polynomial_ring(Context base, std::string symbol) {
  return intern_context(RingDescriptor::univariate(base, std::move(symbol)));
}

Context multivariate_ring(Context base, std::vector<std::string> symbols) {
  return intern_context(RingDescriptor::multivariate(base, std::move(symbols)));
}

}  // namespace mrdi::algebra
