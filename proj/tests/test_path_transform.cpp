#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "udtoda/ensemble.hpp"
#include "udtoda/path_transform.hpp"
#include "udtoda/toda.hpp"

using namespace udtoda;
using namespace udtoda::test;

namespace {

const TodaState kTwoOne(vec({"2", "1"}), vec({"3"}));
const TodaState kThree(vec({"1", "2", "1"}), vec({"2", "1"}));

// Probe points: every interval endpoint, midpoints, and a margin either side.
template <class Path>
std::vector<Scalar> probes(const Path& p) {
  std::vector<Scalar> xs = {S("0")};
  for (const auto& i : p.intervals()) {
    xs.insert(xs.end(), {i.a, i.b, (i.a + i.b) / Scalar(2), i.a - Scalar(1, 3), i.b + Scalar(1, 3)});
  }
  if (!p.intervals().empty()) {
    xs.push_back(p.intervals().front().a - Scalar(5));
    xs.push_back(p.intervals().back().b + Scalar(7));
  }
  return xs;
}

}  // namespace

TEST_CASE("encode and decode examples") {
  CHECK(encode(kTwoOne).intervals() == intervals({{"0", "2"}, {"5", "6"}}));
  CHECK(encode(TodaState(vec({"5"}), {})).intervals() == intervals({{"0", "5"}}));
  CHECK(encode(kThree).intervals() == intervals({{"0", "1"}, {"3", "5"}, {"6", "7"}}));
  CHECK(decode(AlternatingPath(intervals({{"0", "2"}, {"5", "6"}}))) == kTwoOne);
  CHECK(decode(AlternatingPath(intervals({{"0", "5"}}))) == TodaState(vec({"5"}), {}));
  CHECK(decode(AlternatingPath(intervals({{"0", "1"}, {"3", "5"}, {"6", "7"}}))) == kThree);
  CHECK_THROWS_AS(decode(AlternatingPath(intervals({{"1", "2"}}))), PathShapeError);
  CHECK_THROWS_AS(decode(AlternatingPath{}), PathShapeError);
}

TEST_CASE("encode is a bijection onto canonical paths") {
  ensemble::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = ensemble::toda_state(rng);
    const auto p = encode(s);
    REQUIRE(p.is_canonical());
    REQUIRE(decode(p) == s);
    REQUIRE(encode(decode(p)) == p);
    const auto ps = ensemble::periodic_state(rng);
    REQUIRE(decode_periodic(encode_periodic(ps)) == ps);
  }
}

TEST_CASE("evaluate examples") {
  const auto p = encode(kTwoOne);
  CHECK(evaluate(p, S("2")).value == S("-2"));
  CHECK(evaluate(p, S("2")).past_max == S("0"));
  CHECK(evaluate(p, S("-3")).value == S("-3"));
  CHECK(evaluate(p, S("-3")).past_max == S("-3"));
  CHECK(evaluate(p, S("6")).value == S("0"));
  CHECK(evaluate(p, S("6")).past_max == S("1"));
}

TEST_CASE("pitman examples") {
  CHECK(pitman(encode(TodaState(vec({"1"}), {}))).intervals() == intervals({{"1", "2"}}));
  CHECK(pitman(encode(kTwoOne)).intervals() == intervals({{"2", "4"}, {"6", "7"}}));
  // Rising before 0 with nothing below 0: TS = S on x <= 0.
  const auto p = encode(kThree);
  const auto tp = pitman(p);
  for (const char* x : {"-7", "-1", "-1/3", "0"}) CHECK(tp.value(S(x)) == p.value(S(x)));
}

TEST_CASE("pitman agrees pointwise with 2M - S - 2M_0") {
  ensemble::Rng rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = encode(ensemble::toda_state(rng, 10, 30));
    const auto tp = pitman(p);
    const Scalar m0 = p.past_max(S("0"));
    for (const auto& x : probes(p)) {
      REQUIRE(tp.value(x) == Scalar(2) * p.past_max(x) - p.value(x) - Scalar(2) * m0);
    }
  }
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = encode_periodic(ensemble::periodic_state(rng, 10, 30));
    const auto tp = pitman(p);
    REQUIRE(tp.period() == p.period());
    REQUIRE(tp.drift() == p.drift());
    const Scalar m0 = p.past_max(S("0"));
    auto xs = probes(p);
    for (const auto& x : std::vector<Scalar>(xs)) {
      xs.push_back(x + p.period());
      xs.push_back(x - Scalar(3) * p.period());
    }
    for (const auto& x : xs) {
      REQUIRE(tp.value(x) == Scalar(2) * p.past_max(x) - p.value(x) - Scalar(2) * m0);
    }
  }
}

TEST_CASE("periodic past maximum only needs one period") {
  ensemble::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = encode_periodic(ensemble::periodic_state(rng, 10, 30));
    for (const auto& x : probes(p)) REQUIRE(p.max_over_window(x, 1) == p.max_over_window(x, 3));
  }
}

TEST_CASE("shift_to_first_max examples") {
  CHECK(shift_to_first_max(pitman(encode(TodaState(vec({"1"}), {})))).intervals() ==
        intervals({{"0", "1"}}));
  const auto canon = encode(kThree);
  CHECK(shift_to_first_max(canon) == canon);
  CHECK(shift_to_first_max(pitman(encode(kTwoOne))).intervals() == intervals({{"0", "2"}, {"4", "5"}}));
}

TEST_CASE("toda_transform_path examples") {
  const auto t = toda_transform_path(encode(kTwoOne));
  CHECK(t.intervals() == intervals({{"0", "2"}, {"4", "5"}}));
  CHECK(decode(t) == TodaState(vec({"2", "1"}), vec({"2"})));
  CHECK(toda_transform_path(encode(TodaState(vec({"5"}), {}))).intervals() == intervals({{"0", "5"}}));
  const auto pp = toda_transform_path(encode_periodic(PeriodicTodaState(vec({"1", "2"}), vec({"2", "3"}), S("8"))));
  CHECK(decode_periodic(pp) == PeriodicTodaState(vec({"1", "2"}), vec({"3", "2"}), S("8")));
}

TEST_CASE("encode_periodic examples") {
  const auto a = encode_periodic(PeriodicTodaState(vec({"1"}), vec({"2"}), S("3")));
  CHECK(a.period() == S("3"));
  CHECK(a.intervals() == intervals({{"0", "1"}}));
  const auto b = encode_periodic(PeriodicTodaState(vec({"1", "2"}), vec({"2", "3"}), S("8")));
  CHECK(b.period() == S("8"));
  CHECK(b.intervals() == intervals({{"0", "1"}, {"3", "5"}}));
}

TEST_CASE("breakpoint_map examples") {
  CHECK(breakpoint_map(encode(kTwoOne)) == intervals({{"0", "2"}, {"4", "5"}}));
  CHECK(breakpoint_map(encode(TodaState(vec({"1"}), {}))) == intervals({{"0", "1"}}));
  // Follows from toda_step (1,2,1;2,1) -> (1,1,2;3,1).
  CHECK(breakpoint_map(encode(kThree)) == intervals({{"0", "1"}, {"4", "5"}, {"6", "8"}}));
}

TEST_CASE("sampled transform fixtures") {
  std::ifstream in(std::string(UDTODA_GOLDEN_DIR) + "/toda_transform_sampled.json");
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  const std::map<std::string, TodaState> states = {
      {"2,1;3", kTwoOne}, {"1,2,1;2,1", kThree}, {"1", TodaState(vec({"1"}), {})}};
  for (const auto& [key, s] : states) {
    CAPTURE(key);
    IntervalList expect;
    for (const auto& pair : j.at(key)) {
      expect.push_back({Scalar::parse(pair[0].get<std::string>()), Scalar::parse(pair[1].get<std::string>())});
    }
    CHECK(toda_transform_path(encode(s)).intervals() == expect);
    CHECK(breakpoint_map(encode(s)) == expect);
  }
}

TEST_CASE("path route reproduces the finite and periodic steps") {
  ensemble::Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    TodaState s = ensemble::toda_state(rng);
    for (int k = 0; k < 5; ++k) {
      const auto p = encode(s);
      const auto t = toda_transform_path(p);
      REQUIRE(t.is_canonical());
      REQUIRE(t.intervals() == breakpoint_map(p));
      const TodaState next = toda_step(s);
      REQUIRE(decode(t) == next);
      s = next;
    }
    PeriodicTodaState ps = ensemble::periodic_state(rng);
    for (int k = 0; k < 5; ++k) {
      const auto t = toda_transform_path(encode_periodic(ps));
      REQUIRE(t.is_canonical());
      const auto next = periodic_toda_step(ps);
      REQUIRE(decode_periodic(t) == next);
      ps = next;
    }
  }
}

TEST_CASE("running excess is the reflected height at the right endpoints") {
  ensemble::Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = ensemble::toda_state(rng, 15, 60);
    const auto p = encode(s);
    const auto w = running_excess(s);
    REQUIRE(w.size() == p.size());
    for (std::size_t n = 0; n < w.size(); ++n) {
      const Scalar& b = p.intervals()[n].b;
      REQUIRE(w[n] == p.past_max(b) - p.value(b));
    }
  }
}
