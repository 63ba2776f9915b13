#include "mrdi/format/global_state.hpp"

#include <array>

#include "mrdi/error.hpp"

namespace mrdi::format {

namespace {

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

GlobalSerializerState::GlobalSerializerState() : rng_(entropy_seed()) {}

GlobalSerializerState::GlobalSerializerState(std::uint64_t seed) : rng_(seed) {}

Uuid GlobalSerializerState::mint_locked() {
  std::array<std::uint8_t, 16> bytes{};
  for (std::size_t i = 0; i < 16; i += 8) {
    std::uint64_t r = rng_();
    for (std::size_t j = 0; j < 8; ++j) bytes[i + j] = static_cast<std::uint8_t>(r >> (8 * j));
  }
  bytes[6] = static_cast<std::uint8_t>((bytes[6] & 0x0f) | 0x40);
  bytes[8] = static_cast<std::uint8_t>((bytes[8] & 0x3f) | 0x80);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string text;
  text.reserve(36);
  for (std::size_t i = 0; i < 16; ++i) {
    if (i == 4 || i == 6 || i == 8 || i == 10) text += '-';
    text += kHex[bytes[i] >> 4];
    text += kHex[bytes[i] & 0xf];
  }
  return Uuid::from_string(text);
}

Uuid GlobalSerializerState::register_context(algebra::Context ctx) {
  if (ctx.is_polynomial_ring() && ctx.base().is_reference()) register_context(ctx.base());
  std::lock_guard lock(mutex_);
  if (auto it = by_context_.find(ctx.identity()); it != by_context_.end()) return it->second;
  Uuid id = mint_locked();
  while (by_uuid_.count(id)) id = mint_locked();
  by_context_.emplace(ctx.identity(), id);
  by_uuid_.emplace(id, ctx);
  return id;
}

void GlobalSerializerState::bind(const Uuid& id, algebra::Context ctx) {
  std::lock_guard lock(mutex_);
  if (auto it = by_uuid_.find(id); it != by_uuid_.end()) {
    if (!(it->second == ctx)) {
      throw SchemaError("UUID " + id.str() + " is already bound to " + it->second.to_string() +
                        ", cannot bind it to " + ctx.to_string());
    }
    return;
  }
  by_uuid_.emplace(id, ctx);
  by_context_.try_emplace(ctx.identity(), id);
}

std::optional<algebra::Context> GlobalSerializerState::lookup(const Uuid& id) const {
  std::lock_guard lock(mutex_);
  if (auto it = by_uuid_.find(id); it != by_uuid_.end()) return it->second;
  return std::nullopt;
}

std::optional<Uuid> GlobalSerializerState::uuid_of(algebra::Context ctx) const {
  std::lock_guard lock(mutex_);
  if (auto it = by_context_.find(ctx.identity()); it != by_context_.end()) return it->second;
  return std::nullopt;
}

std::size_t GlobalSerializerState::size() const {
  std::lock_guard lock(mutex_);
  return by_uuid_.size();
}

}  // namespace mrdi::format
