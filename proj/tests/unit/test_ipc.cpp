#include "doctest.h"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "generators.hpp"
#include "mrdi/error.hpp"
#include "mrdi/format/serializer.hpp"
#include "mrdi/ipc/pool.hpp"

using namespace mrdi;
using namespace mrdi::algebra;
using ipc::Message;
using ipc::MessageKind;

namespace {

RingElem zz(long n) { return RingElem::integer(BigInt(n)); }

// Records everything the pool sends and receives.
struct Tap {
  std::mutex mutex;
  std::vector<std::tuple<std::size_t, ipc::Direction, Message>> log;

  ipc::TransportTap callback() {
    return [this](std::size_t w, ipc::Direction d, const Message& m) {
      std::lock_guard lock(mutex);
      log.emplace_back(w, d, m);
    };
  }
  std::size_t count(MessageKind kind, ipc::Direction dir = ipc::Direction::ToWorker) {
    std::lock_guard lock(mutex);
    std::size_t n = 0;
    for (const auto& [w, d, m] : log) n += (d == dir && m.kind == kind);
    return n;
  }
};

}  // namespace

TEST_CASE("frame layout") {
  const Message m = Message::failure(7, "boom");
  const std::string frame = ipc::encode_frame(m);
  const std::string payload = R"({"call_id":7,"error":"boom"})";
  REQUIRE(frame.size() == 5 + payload.size());
  CHECK(static_cast<unsigned char>(frame[0]) == 0);
  CHECK(static_cast<unsigned char>(frame[3]) == payload.size());
  CHECK(frame[4] == 4);
  CHECK(frame.substr(5) == payload);
  CHECK(ipc::encode_frame(Message::shutdown()) == std::string("\0\0\0\2\5{}", 7));
}

TEST_CASE("decoder handles arbitrary chunking") {
  gen::Rng rng(4);
  std::vector<Message> msgs;
  std::string stream;
  for (int i = 0; i < 50; ++i) {
    msgs.push_back(gen::message(rng));
    stream += ipc::encode_frame(msgs.back());
  }
  for (int trial = 0; trial < 20; ++trial) {
    ipc::FrameDecoder dec;
    std::vector<Message> got;
    std::size_t pos = 0;
    while (pos < stream.size()) {
      const std::size_t n = std::min<std::size_t>(stream.size() - pos, 1 + rng() % 64);
      dec.feed(std::string_view(stream).substr(pos, n));
      pos += n;
      while (auto m = dec.next()) got.push_back(std::move(*m));
    }
    CHECK(dec.pending() == 0);
    CHECK(got == msgs);
  }
}

TEST_CASE("corrupt frames are rejected") {
  ipc::FrameDecoder bad_kind;
  bad_kind.feed(std::string("\0\0\0\2\x09{}", 7));
  CHECK_THROWS_AS(bad_kind.next(), TransportError);

  ipc::FrameDecoder huge;
  huge.feed(std::string("\x7f\xff\xff\xff\x02", 5));
  CHECK_THROWS_AS(huge.next(), TransportError);

  ipc::FrameDecoder bad_json;
  bad_json.feed(std::string("\0\0\0\3\x04{\"a", 8));
  CHECK_THROWS_AS(bad_json.next(), TransportError);

  ipc::FrameDecoder no_id;
  no_id.feed(std::string("\0\0\0\2\x04{}", 7));
  CHECK_THROWS_AS(no_id.next(), TransportError);
}

TEST_CASE("read_message over a pipe") {
  int fds[2];
  REQUIRE(::pipe(fds) == 0);
  const Message m = Message::failure(3, "x");
  ipc::write_message(fds[1], m);
  const std::string half = ipc::encode_frame(m).substr(0, 6);
  REQUIRE(::write(fds[1], half.data(), half.size()) == static_cast<ssize_t>(half.size()));
  ::close(fds[1]);
  CHECK(*ipc::read_message(fds[0]) == m);
  CHECK_THROWS_AS(ipc::read_message(fds[0]), TransportError);
  ::close(fds[0]);

  REQUIRE(::pipe(fds) == 0);
  ::close(fds[1]);
  CHECK_FALSE(ipc::read_message(fds[0]).has_value());
  ::close(fds[0]);
}

TEST_CASE("spawn and basic calls") {
  CHECK_THROWS_AS(ipc::WorkerPool(0), ValidationError);

  ipc::WorkerPool pool(1);
  CHECK(pool.size() == 1);
  CHECK(pool.state(0) == ipc::WorkerState::Idle);
  CHECK(pool.known_contexts(0).empty());

  CHECK(pool.remote_call("identity", format::make_tuple(zz(42))).elem() == zz(42));

  const Context r = multivariate_ring(rationals(), {"x"});
  const RingElem x = RingElem::variable(r, 0);
  const format::Value sq = pool.remote_call("poly_square", format::make_tuple(x + RingElem::one(r)));
  CHECK(sq.elem() == (x + RingElem::one(r)) * (x + RingElem::one(r)));
  CHECK(sq.elem().parent() == r);

  try {
    pool.remote_call("unregistered_fn", format::make_tuple(zz(1)));
    FAIL("expected a remote error");
  } catch (const RemoteError& e) {
    CHECK(e.remote_message().find("unknown function") != std::string::npos);
  }
  CHECK(pool.state(0) == ipc::WorkerState::Idle);

  pool.shutdown();
  CHECK_THROWS_AS(pool.remote_call("identity", format::make_tuple(zz(1))), PoolClosed);
  pool.shutdown();
  CHECK(pool.state(0) == ipc::WorkerState::Dead);
}

TEST_CASE("spawn failure") {
  ipc::PoolOptions options;
  options.executable = "/nonexistent/mrdi-worker";
  CHECK_THROWS_AS(ipc::WorkerPool(2, options), TransportError);
}

TEST_CASE("contexts are preloaded once, dependencies first") {
  Tap tap;
  ipc::PoolOptions options;
  options.tap = tap.callback();
  ipc::WorkerPool pool(1, options);

  const Context zt = polynomial_ring(integers(), "t");
  const Context ztu = polynomial_ring(zt, "u");
  const RingElem f = RingElem::variable(ztu, 0) + RingElem::term(ztu, Monomial({0}), RingElem::variable(zt, 0));

  const format::Value out = pool.remote_call("nested_lift", format::make_tuple(f));
  CHECK(out.elem() == f * RingElem::variable(ztu, 0));
  REQUIRE(tap.count(MessageKind::LoadContext) == 2);
  std::vector<format::Uuid> order;
  for (const auto& [w, d, m] : tap.log) {
    if (m.kind == MessageKind::LoadContext) order.push_back(*m.uuid);
  }
  CHECK(order[0] == *pool.global().uuid_of(zt));
  CHECK(order[1] == *pool.global().uuid_of(ztu));

  // repeated calls and explicit ensure_contexts send nothing new
  pool.remote_call("nested_lift", format::make_tuple(f));
  const auto doc = format::save(format::Value(f), format::SerializerMode::IPC, pool.global());
  pool.ensure_contexts(0, doc.type);
  pool.ensure_contexts(0, format::TypeNode::simple("ZZRingElem"));
  CHECK(tap.count(MessageKind::LoadContext) == 2);
  CHECK(pool.known_contexts(0).size() == 2);
}

TEST_CASE("worker-created contexts come back with the result") {
  Tap tap;
  ipc::PoolOptions options;
  options.tap = tap.callback();
  ipc::WorkerPool pool(2, options);
  const format::Value v = pool.remote_call("fresh_ring", format::make_tuple(zz(101)));
  const Context expect = polynomial_ring(prime_field(101), "fresh");
  CHECK(v.elem().parent() == expect);
  CHECK(v.elem().to_string() == "fresh^2 + 1");
  bool saw_refs = false;
  for (const auto& [w, d, m] : tap.log) saw_refs |= (m.kind == MessageKind::Result && m.refs.size() == 2);
  CHECK(saw_refs);
  // the coordinator can now ship the context to the other worker
  const auto items = std::vector<format::ValueTuple>(4, format::make_tuple(v.elem()));
  for (const auto& r : pool.parallel_map("poly_square", items)) CHECK(r.elem() == v.elem() * v.elem());
}

TEST_CASE("parallel_map ordering and failures") {
  ipc::WorkerPool pool(3);
  CHECK(pool.parallel_map("identity", {}).empty());

  std::vector<format::ValueTuple> items;
  for (long i = 0; i < 12; ++i) items.push_back(format::make_tuple(zz((12 - i) * 7)));
  const auto out = pool.parallel_map("sleep_ms", items);
  REQUIRE(out.size() == items.size());
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == items[i].items[0]);

  std::vector<format::ValueTuple> failing;
  for (long i = 0; i < 10; ++i) failing.push_back(format::make_tuple(zz(i), zz(6)));
  try {
    pool.parallel_map("fail_on", failing);
    FAIL("expected a remote error");
  } catch (const RemoteError& e) {
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 6);
    CHECK(e.remote_message() == "fail_on hit");
  }
  for (std::size_t w = 0; w < pool.size(); ++w) CHECK(pool.state(w) == ipc::WorkerState::Idle);
}

TEST_CASE("shutdown drains a busy worker") {
  ipc::WorkerPool pool(1);
  std::optional<format::Value> result;
  std::thread caller([&] { result = pool.remote_call("sleep_ms", format::make_tuple(zz(300))); });
  while (pool.state(0) != ipc::WorkerState::Busy) std::this_thread::sleep_for(std::chrono::milliseconds(1));
  pool.shutdown();
  caller.join();
  REQUIRE(result.has_value());
  CHECK(result->elem() == zz(300));
  CHECK(pool.state(0) == ipc::WorkerState::Dead);
}

TEST_CASE("a dying worker is marked dead") {
  ipc::WorkerPool pool(2);
  CHECK_THROWS_AS(pool.remote_call("crash", format::make_tuple()), TransportError);
  CHECK(pool.state(0) == ipc::WorkerState::Dead);
  CHECK(pool.remote_call("identity", format::make_tuple(zz(5))).elem() == zz(5));
  CHECK_THROWS_AS(pool.remote_call("crash", format::make_tuple()), TransportError);
  CHECK_THROWS_AS(pool.remote_call("identity", format::make_tuple(zz(5))), TransportError);
}

TEST_CASE("transparency on random inputs") {
  ipc::WorkerPool pool(2);
  gen::Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    const Context r = gen::ring(rng);
    const RingElem a = gen::element(rng, r);
    CHECK(pool.remote_call("poly_square", format::make_tuple(a)).elem() == a * a);
    const format::Value v = gen::value(rng);
    CHECK(pool.remote_call("identity", format::make_tuple(v)) == v);
  }
}

TEST_CASE("worker logs") {
  const auto base = std::filesystem::temp_directory_path() / ("mrdi-log-" + std::to_string(::getpid()));
  ::setenv("MRDI_WORKER_LOG", base.c_str(), 1);
  {
    ipc::WorkerPool pool(1);
    pool.remote_call("identity", format::make_tuple(zz(1)));
  }
  ::unsetenv("MRDI_WORKER_LOG");
  const auto path = base.string() + ".0";
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string all((std::istreambuf_iterator<char>(in)), {});
  CHECK(all.find("Call 1 identity") != std::string::npos);
  std::filesystem::remove(path);
}
