#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axioms.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "laws.hpp"

using namespace sigma;
using fixtures::pts;

TEST_CASE("T0 on the reference spaces") {
  CHECK(is_T0(fixtures::sierpinski()));
  CHECK(!is_T0(fixtures::indiscrete2()));
  CHECK(is_T0(fixtures::witness_w()));
}

TEST_CASE("T1 on the reference spaces") {
  CHECK(is_T1(fixtures::discrete2()));
  CHECK(!is_T1(fixtures::sierpinski()));  // ker({1}) = X
  CHECK(!is_T1(fixtures::witness_w()));   // ker({c}) = {b,c}
}

TEST_CASE("R0 on the reference spaces") {
  CHECK(is_R0(fixtures::discrete2()));
  CHECK(!is_R0(fixtures::sierpinski()));  // cl({0}) = X not inside {0}
  CHECK(is_R0(fixtures::indiscrete2()));  // only nonempty open is X
}

TEST_CASE("weak R0 on the reference spaces") {
  CHECK(!is_weak_R0(fixtures::sierpinski()));  // {1} lambda*-closed, ker = X
  CHECK(is_weak_R0(fixtures::indiscrete2()));  // no singleton is lambda*-closed
  CHECK(is_weak_R0(fixtures::discrete2()));
}

TEST_CASE("strongly symmetric on the reference spaces") {
  CHECK(is_strongly_symmetric(fixtures::discrete2()));
  CHECK(!is_strongly_symmetric(fixtures::sierpinski()));  // {0} not g*-closed
  // indiscrete: ker({x}) = X and F = X works, so every singleton is g*-closed
  CHECK(is_strongly_symmetric(fixtures::indiscrete2()));
}

TEST_CASE("C and C* families") {
  const auto s = fixtures::sierpinski();
  const auto fam = compute_C_Cstar(s);
  CHECK(fam.c.size() == 4);
  CHECK(fam.cstar.size() == 4);
  CHECK(fam.equal());

  const auto d = fixtures::discrete2();
  const auto fam_d = compute_C_Cstar(d);
  CHECK(fam_d.c.size() == 4);
  CHECK(fam_d.equal());

  // On finite spaces closure is always closed, so C is the full power set.
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& space : enum_fast(n).spaces)
      CHECK(compute_C_Cstar(space).c.size() == (std::size_t{1} << n));
}

TEST_CASE("Tw on the reference spaces") {
  CHECK(is_Tw(fixtures::sierpinski()));   // g*-closed sets {}, {1}, X all closed
  CHECK(!is_Tw(fixtures::indiscrete2())); // {0} g*-closed but not closed
  CHECK(is_Tw(fixtures::discrete2()));
}

TEST_CASE("Tw4 / T3w8 / T5w8 on the reference spaces") {
  CHECK(is_Tw4(fixtures::sierpinski()));
  CHECK(!is_Tw4(fixtures::witness_w()));  // P = {a,b}, y = c has no separator
  CHECK(is_Tw4(fixtures::discrete2()));
  CHECK(!is_T3w8(fixtures::witness_w()));
  CHECK(is_T3w8(fixtures::sierpinski()));
  CHECK(is_T5w8(fixtures::sierpinski()));
  CHECK(!is_T5w8(fixtures::witness_w()));
  CHECK(!is_T5w8(fixtures::indiscrete2()));  // {0} not lambda*-closed
}

TEST_CASE("bicompact is constant on finite spaces") {
  CHECK(is_bicompact(fixtures::sierpinski()));
  CHECK(is_bicompact(fixtures::discrete2()));
  CHECK(is_bicompact(fixtures::witness_w()));
}

TEST_CASE("classify produces the expected flag vectors") {
  const auto rs = classify(fixtures::sierpinski());
  CHECK(rs.flags.t0);
  CHECK(!rs.flags.t1);
  CHECK(!rs.flags.r0);
  CHECK(!rs.flags.weak_r0);
  CHECK(rs.flags.t_w);
  CHECK(rs.flags.t_w4);
  CHECK(rs.flags.t_3w8);
  CHECK(rs.flags.t_5w8);
  CHECK(rs.flags.c_eq_cstar);
  CHECK(rs.flags.bicompact);

  const auto rw = classify(fixtures::witness_w());
  CHECK(rw.flags.t0);
  CHECK(!rw.flags.t_w4);
  bool found_tw4_witness = false;
  for (const auto& w : rw.witnesses) {
    if (w.axiom == "TW4") {
      found_tw4_witness = true;
      REQUIRE(w.sets.size() == 1);
      CHECK(w.sets[0] == pts({0, 1}));  // P = {a,b}
      REQUIRE(w.points.size() == 1);
      CHECK(w.points[0] == 2);  // y = c
    }
  }
  CHECK(found_tw4_witness);

  const auto rd = classify(fixtures::discrete2());
  CHECK(rd.flags.t0);
  CHECK(rd.flags.t1);
  CHECK(rd.flags.r0);
  CHECK(rd.flags.weak_r0);
  CHECK(rd.flags.strongly_symmetric);
  CHECK(rd.flags.c_eq_cstar);
  CHECK(rd.flags.t_w);
  CHECK(rd.flags.t_w4);
  CHECK(rd.flags.t_3w8);
  CHECK(rd.flags.t_5w8);
  CHECK(rd.flags.bicompact);
  CHECK(rd.witnesses.empty());
}

TEST_CASE("every false flag carries a witness") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& space : enum_fast(n).spaces) {
      const auto report = classify(space);
      std::size_t false_flags = 0;
      for (const auto& name : axiom_names())
        if (!report.flags.get(name)) ++false_flags;
      CHECK(report.witnesses.size() == false_flags);
    }
  }
}

TEST_CASE("table-backed axiom flags agree with the classifiers") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& space : enum_fast(n).spaces) {
      const auto tables = build_tables(space);
      const auto direct = classify(space).flags;
      for (const auto& name : axiom_names())
        CHECK(tables.axioms.get(name) == direct.get(name));
    }
  }
}

TEST_CASE("paired axiom routes agree on every 4-point space") {
  // is_T0 / is_T1 / is_Tw4 / ... throw if their two routes ever disagree.
  std::size_t spaces = 0;
  for (const auto& space : enum_fast(4).spaces) {
    CHECK_NOTHROW(classify(space));
    ++spaces;
  }
  CHECK(spaces == 355);
}
