#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "operators.hpp"
#include "set_classes.hpp"

using namespace sigma;
using fixtures::pts;

// Frozen operator values on the reference spaces. Each was derived by hand
// from the open families (S: {} {0} X; W: {} {b} {b,c} X with points a,b,c).

TEST_CASE("closure on the reference spaces") {
  const auto s = fixtures::sierpinski();
  CHECK(closure(s, pts({0})) == pts({0, 1}));  // only closed superset of {0} is X
  CHECK(closure(s, 0) == 0);
  CHECK(closure(s, pts({1})) == pts({1}));
  const auto w = fixtures::witness_w();
  CHECK(closure(w, pts({2})) == pts({0, 2}));  // closed supersets of {c}: {a,c}, X
  CHECK(closure(w, pts({0, 1})) == w.full());
}

TEST_CASE("interior on the reference spaces") {
  const auto s = fixtures::sierpinski();
  CHECK(interior(s, pts({1})) == 0);  // no nonempty open inside {1}
  CHECK(interior(s, s.full()) == s.full());
  const auto w = fixtures::witness_w();
  CHECK(interior(w, pts({1, 2})) == pts({1, 2}));  // already open
}

TEST_CASE("derived set on the reference spaces") {
  const auto s = fixtures::sierpinski();
  CHECK(derived_set(s, pts({0})) == pts({1}));
  const auto d = fixtures::discrete2();
  CHECK(derived_set(d, pts({0})) == 0);
  CHECK(derived_set(d, d.full()) == 0);
  const auto i = fixtures::indiscrete2();
  CHECK(derived_set(i, pts({0})) == pts({1}));
}

TEST_CASE("kernel on the reference spaces") {
  const auto s = fixtures::sierpinski();
  CHECK(kernel_wedge(s, pts({1})) == s.full());  // only open superset of {1} is X
  CHECK(kernel_wedge(s, s.full()) == s.full());
  CHECK(kernel_wedge(s, 0) == 0);
  const auto w = fixtures::witness_w();
  CHECK(kernel_wedge(w, pts({2})) == pts({1, 2}));  // opens over {c}: {b,c}, X
}

TEST_CASE("vee on the reference spaces") {
  const auto s = fixtures::sierpinski();
  CHECK(vee(s, pts({0})) == 0);  // only closed subset of {0} is {}
  CHECK(vee(s, 0) == 0);
  CHECK(vee(s, pts({1})) == pts({1}));  // {1} closed
}

TEST_CASE("g*-closure on the reference spaces") {
  const auto s = fixtures::sierpinski();
  // g*-closed sets of S are {}, {1}, X
  auto r0 = gstar_closure(s, pts({0}));
  CHECK(r0.closure_set == s.full());
  CHECK(r0.is_gstar_closed);
  auto r1 = gstar_closure(s, pts({1}));
  CHECK(r1.closure_set == pts({1}));
  CHECK(r1.is_gstar_closed);
  auto rx = gstar_closure(s, s.full());
  CHECK(rx.closure_set == s.full());
  CHECK(rx.is_gstar_closed);
}

// Operator laws, exhaustively over every space on up to 3 points and every
// subset (pair). The law registry re-runs these at 4 points.
TEST_CASE("operator laws over all small spaces") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& space : enum_fast(n).spaces) {
      const Mask full = space.full();
      for (Mask a = 0; a <= full; ++a) {
        const Mask ker = kernel_wedge(space, a);
        const Mask hull = vee(space, a);
        CHECK((a & ~ker) == 0);
        CHECK((hull & ~a) == 0);
        CHECK(kernel_wedge(space, ker) == ker);
        CHECK(vee(space, hull) == hull);
        CHECK(kernel_wedge(space, full & ~a) == (full & ~hull));
        CHECK(vee(space, full & ~a) == (full & ~ker));
        CHECK(interior(space, a) == (full & ~closure(space, full & ~a)));
        CHECK(closure(space, a) == (a | derived_set(space, a)));
        for (Mask b = 0; b <= full; ++b) {
          if ((a & ~b) == 0) {
            CHECK((kernel_wedge(space, a) & ~kernel_wedge(space, b)) == 0);
            CHECK((vee(space, a) & ~vee(space, b)) == 0);
          }
          CHECK(kernel_wedge(space, a | b) == (kernel_wedge(space, a) | kernel_wedge(space, b)));
        }
      }
    }
  }
}
