#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>

#include "mrdi/algebra/ring.hpp"
#include "mrdi/format/document.hpp"

namespace mrdi::format {

// Cross-document association between interned contexts and UUIDs. A
// context keeps the first UUID it is bound to for the lifetime of the
// state. Further UUIDs learned for the same context (for example one minted
// independently by a peer process) are accepted as aliases: they resolve to
// the context, but saving always writes the canonical UUID.
//
// All members are thread-safe.
class GlobalSerializerState {
 public:
  // Mints random version-4 UUIDs.
  GlobalSerializerState();
  // Mints version-4-shaped UUIDs from a seeded generator, for reproducible
  // files.
  explicit GlobalSerializerState(std::uint64_t seed);

  GlobalSerializerState(const GlobalSerializerState&) = delete;
  GlobalSerializerState& operator=(const GlobalSerializerState&) = delete;

  // Idempotent. Base rings that live in `_refs` are registered first.
  Uuid register_context(algebra::Context ctx);

  // Binds an externally chosen UUID. Throws SchemaError if `id` is already
  // bound to a different context.
  void bind(const Uuid& id, algebra::Context ctx);

  std::optional<algebra::Context> lookup(const Uuid& id) const;
  std::optional<Uuid> uuid_of(algebra::Context ctx) const;

  std::size_t size() const;

 private:
  Uuid mint_locked();

  mutable std::mutex mutex_;
  std::map<std::uint64_t, Uuid> by_context_;
  std::map<Uuid, algebra::Context> by_uuid_;
  std::mt19937_64 rng_;
};

}  // namespace mrdi::format
