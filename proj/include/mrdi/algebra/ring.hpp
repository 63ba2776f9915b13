#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mrdi::algebra {

enum class RingKind : std::uint8_t {
  Integers,
  Rationals,
  PrimeField,
  Univariate,
  Multivariate,
};

class RingDescriptor;

namespace detail {
struct RingNode;
}

// Handle to an interned ring. Two handles compare equal iff they were
// produced by interning structurally equal descriptors, so `==` is the
// "same parent" test for elements. Handles are trivially copyable and stay
// valid for the lifetime of the process.
class Context {
 public:
  // The integer ring.
  Context();

  const RingDescriptor& descriptor() const;
  RingKind kind() const;
  // Process-unique identity token, stable for the process lifetime.
  std::uint64_t identity() const;

  // Only for PrimeField.
  std::uint64_t modulus() const;
  // Only for polynomial rings.
  Context base() const;
  std::span<const std::string> symbols() const;
  std::size_t arity() const;

  bool is_polynomial_ring() const {
    return kind() == RingKind::Univariate || kind() == RingKind::Multivariate;
  }
  // Rings written to the `_refs` table and addressed by UUID. ZZ and QQ are
  // written inline instead.
  bool is_reference() const {
    return kind() != RingKind::Integers && kind() != RingKind::Rationals;
  }

  // "ZZ", "QQ", "GF(101)", "ZZ[t]", "QQ[x,y]", "ZZ[t][u]".
  std::string to_string() const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.node_ == b.node_;
  }

 private:
  friend Context intern_context(const RingDescriptor& descriptor);
  explicit Context(const detail::RingNode* node) : node_(node) {}

  const detail::RingNode* node_;
};

class RingDescriptor {
 public:
  static RingDescriptor integers();
  static RingDescriptor rationals();
  static RingDescriptor prime_field(std::uint64_t p);
  static RingDescriptor univariate(Context base, std::string symbol);
  static RingDescriptor multivariate(Context base, std::vector<std::string> symbols);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::optional<Context>& base() const { return base_; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  // Throws ValidationError: empty or duplicate symbols, missing base ring,
  // modulus not a prime below kPrimeModulusLimit.
  void validate() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  RingDescriptor(RingKind kind, std::uint64_t modulus, std::optional<Context> base,
                 std::vector<std::string> symbols)
      : kind_(kind), modulus_(modulus), base_(base), symbols_(std::move(symbols)) {}

  RingKind kind_;
  std::uint64_t modulus_ = 0;
  std::optional<Context> base_;
  std::vector<std::string> symbols_;
};

// Atomic get-or-insert into the process-wide registry. Thread-safe.
Context intern_context(const RingDescriptor& descriptor);

Context integers();
Context rationals();
Context prime_field(std::uint64_t p);
Context polynomial_ring(Context base, std::string symbol);
Context multivariate_ring(Context base, std::vector<std::string> symbols);

}  // namespace mrdi::algebra
