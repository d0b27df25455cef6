#include "laws.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>

#include "enumerate.hpp"
#include "errors.hpp"
#include "operators.hpp"
#include "parallel.hpp"
#include "set_classes.hpp"

namespace sigma {

namespace {

bool separator_exists(const SpaceStructure& space, Mask p, std::size_t y) {
  const Mask ybit = Mask{1} << y;
  for (Mask a : space.opens)
    if ((p & ~a) == 0 && (a & ybit) == 0) return true;
  for (Mask a : space.closeds)
    if ((p & ~a) == 0 && (a & ybit) == 0) return true;
  return false;
}

}  // namespace

SpaceTables build_tables(const SpaceStructure& space) {
  SpaceTables t;
  t.space = &space;
  t.n = space.size();
  t.full = space.full();
  t.count = std::size_t{1} << t.n;
  t.canon = subsets_in_canonical_order(t.n);

  t.kernel.resize(t.count);
  t.closure_of.resize(t.count);
  t.interior_of.resize(t.count);
  t.derived_of.resize(t.count);
  t.vee_of.resize(t.count);
  t.gsc_set.resize(t.count);
  for (auto* v : {&t.open_f, &t.closed_f, &t.g_closed_f, &t.gstar_closed_f, &t.gstar_open_f,
                  &t.wedge_f, &t.vee_set_f, &t.g_wedge_f, &t.g_vee_f, &t.lambda_closed_f,
                  &t.lambda_open_f, &t.gsc_flag})
    v->assign(t.count, 0);

  for (Mask a = 0; a < t.count; ++a) {
    t.kernel[a] = kernel_wedge(space, a);
    t.closure_of[a] = closure(space, a);
    t.interior_of[a] = interior(space, a);
    t.derived_of[a] = derived_set(space, a);
    t.vee_of[a] = vee(space, a);
  }
  for (Mask u : space.opens) t.open_f[u] = 1;
  for (Mask f : space.closeds) t.closed_f[f] = 1;

  for (Mask a = 0; a < t.count; ++a) {
    t.g_closed_f[a] = (t.closure_of[a] & ~t.kernel[a]) == 0;
    for (Mask f : space.closeds)
      if ((a & ~f) == 0 && (f & ~t.kernel[a]) == 0) {
        t.gstar_closed_f[a] = 1;
        break;
      }
    t.wedge_f[a] = t.kernel[a] == a;
    t.vee_set_f[a] = t.vee_of[a] == a;
    t.lambda_closed_f[a] = (t.kernel[a] & t.closure_of[a]) == a;
    t.lambda_open_f[a] = (t.vee_of[a] | t.interior_of[a]) == a;

    t.g_wedge_f[a] = 1;
    for (Mask f : space.closeds)
      if ((a & ~f) == 0 && (t.kernel[a] & ~f) != 0) {
        t.g_wedge_f[a] = 0;
        break;
      }
    t.g_vee_f[a] = 1;
    for (Mask u : space.opens)
      if ((u & ~a) == 0 && (u & ~t.vee_of[a]) != 0) {
        t.g_vee_f[a] = 0;
        break;
      }
  }
  for (Mask a = 0; a < t.count; ++a) t.gstar_open_f[a] = t.gstar_closed_f[t.full & ~a];

  for (Mask e = 0; e < t.count; ++e) {
    const Mask outside = t.full & ~e;
    Mask acc = t.full;
    Mask s = 0;
    do {  // supersets of e are e | s for submasks s of the complement
      const Mask a = e | s;
      if (t.gstar_closed_f[a]) acc &= a;
      s = (s - outside) & outside;
    } while (s != 0);
    t.gsc_set[e] = acc;
    t.gsc_flag[e] = t.gstar_closed_f[acc];
  }

  t.axioms = axioms_from_tables(t);
  return t;
}

AxiomFlags axioms_from_tables(const SpaceTables& t) {
  const SpaceStructure& space = *t.space;
  AxiomFlags f;

  f.t0 = true;
  for (std::size_t x = 0; x < t.n && f.t0; ++x)
    for (std::size_t y = x + 1; y < t.n && f.t0; ++y) {
      bool separated = false;
      for (Mask u : space.opens)
        if ((u >> x & 1) != (u >> y & 1)) {
          separated = true;
          break;
        }
      f.t0 = separated;
    }

  f.t1 = true;
  for (std::size_t x = 0; x < t.n && f.t1; ++x)
    for (std::size_t y = 0; y < t.n && f.t1; ++y) {
      if (x == y) continue;
      bool found = false;
      for (Mask u : space.opens)
        if ((u >> x & 1) && !(u >> y & 1)) {
          found = true;
          break;
        }
      f.t1 = found;
    }

  f.r0 = true;
  for (Mask u : space.opens)
    for (std::size_t x = 0; x < t.n; ++x)
      if ((u >> x & 1) && (t.closure_of[Mask{1} << x] & ~u) != 0) f.r0 = false;

  f.weak_r0 = true;
  f.strongly_symmetric = true;
  for (std::size_t x = 0; x < t.n; ++x) {
    const Mask s = Mask{1} << x;
    if (t.lambda_closed_f[s] && !t.wedge_f[s]) f.weak_r0 = false;
    if (!t.gstar_closed_f[s]) f.strongly_symmetric = false;
  }

  f.c_eq_cstar = true;
  for (Mask a = 0; a < t.count; ++a) {
    const bool in_c = t.closed_f[t.closure_of[t.full & ~a]] != 0;
    const bool in_cstar = t.gsc_flag[t.full & ~a] != 0;
    if (in_c != in_cstar) f.c_eq_cstar = false;
  }

  f.t_w = true;
  for (Mask a = 0; a < t.count; ++a)
    if (t.gstar_closed_f[a] && !t.closed_f[a]) f.t_w = false;

  auto separation = [&]() {
    for (Mask p = 0; p < t.count; ++p)
      for (std::size_t y = 0; y < t.n; ++y) {
        if (p >> y & 1) continue;
        if (!separator_exists(space, p, y)) return false;
      }
    return true;
  };
  f.t_w4 = separation();   // quantifier over finite subsets: all of them here
  f.t_3w8 = separation();  // over countable subsets: likewise
  f.t_5w8 = separation();  // over arbitrary subsets
  f.bicompact = true;
  return f;
}

namespace {

LawCheck ok(std::uint64_t checks) { return LawCheck{checks, std::nullopt}; }

LawCheck fail(std::uint64_t checks, std::vector<Mask> sets, std::vector<std::size_t> points,
              std::string note) {
  return LawCheck{checks, LawWitness{std::move(sets), std::move(points), std::move(note)}};
}

std::vector<Mask> distinct_closures(const SpaceTables& t) {
  std::vector<Mask> out(t.closure_of);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LawCheck law_2_1(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    Mask inter = t.full;
    for (Mask c : t.space->closeds)
      if ((a & ~c) == 0) inter &= c;
    if (inter != t.closure_of[a])
      return fail(checks, {a}, {}, "closure differs from the intersection of closed supersets");
  }
  return ok(checks);
}

LawCheck law_2_5(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.closure_of[a] != (a | t.derived_of[a]))
      return fail(checks, {a}, {}, "cl(A) != A | A'");
  }
  return ok(checks);
}

LawCheck law_2_8(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.interior_of[a] != (t.full & ~t.closure_of[t.full & ~a]))
      return fail(checks, {a}, {}, "int(A) != X - cl(X - A)");
  }
  return ok(checks);
}

LawCheck law_3_4(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (std::size_t x = 0; x < t.n; ++x) {
    ++checks;
    const Mask s = Mask{1} << x;
    if (!t.closed_f[s] && !t.gstar_closed_f[t.full & ~s])
      return fail(checks, {}, {x}, "singleton neither closed nor complement g*-closed");
  }
  return ok(checks);
}

LawCheck law_3_5(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if ((t.gstar_closed_f[a] != 0) != is_gstar_closed_alt(*t.space, a))
      return fail(checks, {a}, {}, "the two g*-closed characterizations disagree");
  }
  return ok(checks);
}

LawCheck law_3_13(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.gstar_open_f[a] && t.gstar_open_f[b] && !t.gstar_open_f[a & b])
        return fail(checks, {a, b}, {}, "intersection of g*-open sets not g*-open");
    }
  return ok(checks);
}

LawCheck law_3_14(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if ((t.gstar_open_f[a] != 0) != is_gstar_open_alt(*t.space, a))
      return fail(checks, {a}, {}, "the two g*-open characterizations disagree");
  }
  return ok(checks);
}

LawCheck law_3_16_dual(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.g_vee_f[a] != t.g_wedge_f[t.full & ~a])
      return fail(checks, {a}, {}, "g-vee test disagrees with g-wedge of the complement");
  }
  return ok(checks);
}

LawCheck law_3_18(const SpaceTables& t) {
  std::uint64_t checks = 4;
  if (t.kernel[0] != 0 || t.vee_of[0] != 0 || t.kernel[t.full] != t.full ||
      t.vee_of[t.full] != t.full)
    return fail(checks, {}, {}, "kernel/vee constants wrong on {} or X");
  for (Mask a : t.canon) {
    checks += 6;
    if ((a & ~t.kernel[a]) != 0) return fail(checks, {a}, {}, "A not inside ker(A)");
    if ((t.vee_of[a] & ~a) != 0) return fail(checks, {a}, {}, "vee(A) not inside A");
    if (t.kernel[t.kernel[a]] != t.kernel[a]) return fail(checks, {a}, {}, "kernel not idempotent");
    if (t.vee_of[t.vee_of[a]] != t.vee_of[a]) return fail(checks, {a}, {}, "vee not idempotent");
    if (t.kernel[t.full & ~a] != (t.full & ~t.vee_of[a]))
      return fail(checks, {a}, {}, "ker(X - A) != X - vee(A)");
    if (t.vee_of[t.full & ~a] != (t.full & ~t.kernel[a]))
      return fail(checks, {a}, {}, "vee(X - A) != X - ker(A)");
  }
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      if ((a & ~b) != 0) continue;  // monotonicity clauses quantify over A <= B
      checks += 2;
      if ((t.kernel[a] & ~t.kernel[b]) != 0)
        return fail(checks, {a, b}, {}, "kernel not monotone");
      if ((t.vee_of[a] & ~t.vee_of[b]) != 0) return fail(checks, {a, b}, {}, "vee not monotone");
    }
  return ok(checks);
}

LawCheck law_3_19(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.vee_set_f[a] && t.vee_set_f[b] && !t.vee_set_f[a | b])
        return fail(checks, {a, b}, {}, "union of vee-sets not a vee-set");
    }
  return ok(checks);
}

LawCheck law_3_20(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.wedge_f[a] && t.wedge_f[b] && !t.wedge_f[a & b])
        return fail(checks, {a, b}, {}, "intersection of wedge sets not a wedge set");
    }
  return ok(checks);
}

LawCheck law_3_21(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.vee_set_f[a] && t.vee_set_f[b] && !t.vee_set_f[a & b])
        return fail(checks, {a, b}, {}, "intersection of vee-sets not a vee-set");
    }
  return ok(checks);
}

LawCheck law_3_22(const SpaceTables& t) {
  std::uint64_t checks = 2;
  if (!t.vee_set_f[0] || !t.vee_set_f[t.full])
    return fail(checks, {}, {}, "vee-set family misses {} or X");
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      if (!t.vee_set_f[a] || !t.vee_set_f[b]) continue;
      checks += 2;
      if (!t.vee_set_f[a | b])
        return fail(checks, {a, b}, {}, "vee-set family not union closed");
      if (!t.vee_set_f[a & b])
        return fail(checks, {a, b}, {}, "vee-set family not intersection closed");
    }
  return ok(checks);
}

LawCheck law_3_23ii(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    if (!t.wedge_f[a]) continue;
    ++checks;
    if ((t.gstar_closed_f[a] != 0) != (t.closed_f[a] != 0))
      return fail(checks, {a}, {}, "wedge set g*-closed but not closed (or vice versa)");
  }
  return ok(checks);
}

LawCheck law_3_24(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.gstar_closed_f[t.kernel[a]] && !t.gstar_closed_f[a])
      return fail(checks, {a}, {}, "ker(A) g*-closed but A not");
  }
  return ok(checks);
}

LawCheck law_3_25(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.gstar_open_f[t.vee_of[a]] && !t.gstar_open_f[a])
      return fail(checks, {a}, {}, "vee(A) g*-open but A not");
  }
  return ok(checks);
}

LawCheck law_3_27(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.kernel[a | b] != (t.kernel[a] | t.kernel[b]))
        return fail(checks, {a, b}, {}, "ker(A | B) != ker(A) | ker(B)");
    }
  return ok(checks);
}

LawCheck law_3_28(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.wedge_f[a] && t.wedge_f[b] && !t.wedge_f[a | b])
        return fail(checks, {a, b}, {}, "union of two wedge sets not a wedge set");
    }
  return ok(checks);
}

LawCheck law_3_30(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.g_wedge_f[a] && t.g_wedge_f[b] && !t.g_wedge_f[a | b])
        return fail(checks, {a, b}, {}, "union of two g-wedge sets not a g-wedge set");
    }
  return ok(checks);
}

LawCheck law_3_31(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon)
    for (Mask b : t.canon) {
      ++checks;
      if (t.g_vee_f[a] && t.g_vee_f[b] && !t.g_vee_f[a & b])
        return fail(checks, {a, b}, {}, "intersection of two g-vee sets not a g-vee set");
    }
  return ok(checks);
}

LawCheck law_3_36(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (std::size_t x = 0; x < t.n; ++x) {
    ++checks;
    const Mask s = Mask{1} << x;
    if (!t.open_f[s] && !t.g_vee_f[s])
      return fail(checks, {}, {x}, "singleton neither open nor a g-vee set");
  }
  return ok(checks);
}

LawCheck law_3_37(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (std::size_t x = 0; x < t.n; ++x) {
    ++checks;
    const Mask s = Mask{1} << x;
    if (!t.gstar_open_f[s] && !t.g_vee_f[s])
      return fail(checks, {}, {x}, "singleton neither g*-open nor a g-vee set");
  }
  return ok(checks);
}

LawCheck law_3_38(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    if (!t.g_vee_f[a]) continue;
    const Mask core = t.vee_of[a] | (t.full & ~a);
    for (Mask c : t.space->closeds) {
      ++checks;
      if ((core & ~c) == 0 && c != t.full)
        return fail(checks, {a, c}, {}, "proper closed superset of vee(A) | (X - A)");
    }
  }
  return ok(checks);
}

LawCheck law_3_39(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    if (!t.g_vee_f[a]) continue;
    ++checks;
    if ((t.closed_f[t.vee_of[a] | (t.full & ~a)] != 0) != (t.vee_set_f[a] != 0))
      return fail(checks, {a}, {}, "closedness of vee(A) | (X - A) disagrees with A being a vee-set");
  }
  return ok(checks);
}

LawCheck law_3_40(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    if (!t.vee_set_f[a]) continue;
    ++checks;
    if ((t.gstar_open_f[a] != 0) != (t.open_f[a] != 0))
      return fail(checks, {a}, {}, "vee-set g*-open but not open (or vice versa)");
  }
  return ok(checks);
}

bool singletons_open_or_closed(const SpaceTables& t) {
  for (std::size_t x = 0; x < t.n; ++x) {
    const Mask s = Mask{1} << x;
    if (!t.open_f[s] && !t.closed_f[s]) return false;
  }
  return true;
}

LawCheck law_4_3(const SpaceTables& t) {
  const bool rhs = singletons_open_or_closed(t) && t.axioms.c_eq_cstar;
  if (t.axioms.t_w != rhs)
    return fail(1, {}, {}, "Tw disagrees with (singletons open-or-closed and C = C*)");
  return ok(1);
}

LawCheck law_4_4(const SpaceTables& t) {
  bool every_g_wedge_is_wedge = true, every_g_vee_is_vee = true;
  for (Mask a = 0; a < t.count; ++a) {
    if (t.g_wedge_f[a] && !t.wedge_f[a]) every_g_wedge_is_wedge = false;
    if (t.g_vee_f[a] && !t.vee_set_f[a]) every_g_vee_is_vee = false;
  }
  const bool rhs2 = every_g_wedge_is_wedge && t.axioms.c_eq_cstar;
  const bool rhs3 = every_g_vee_is_vee && t.axioms.c_eq_cstar;
  if (t.axioms.t_w != rhs2)
    return fail(2, {}, {}, "Tw disagrees with (every g-wedge set a wedge set and C = C*)");
  if (t.axioms.t_w != rhs3)
    return fail(2, {}, {}, "Tw disagrees with (every g-vee set a vee-set and C = C*)");
  return ok(2);
}

LawCheck law_5_3(const SpaceTables& t) {
  std::uint64_t checks = 0;
  const auto closures = distinct_closures(t);
  for (Mask a : t.canon) {
    ++checks;
    const bool via_identity = t.lambda_closed_f[a] != 0;
    const bool via_search = is_lambda_star_closed_decomp(*t.space, a);
    bool via_kernel_and_any_closure = false;  // A = ker(A) & cl(F)
    for (Mask c : closures)
      if ((t.kernel[a] & c) == a) {
        via_kernel_and_any_closure = true;
        break;
      }
    bool via_wedge_and_own_closure = false;  // A = L & cl(A), L a wedge set
    for (Mask l = 0; l < t.count; ++l)
      if (t.wedge_f[l] && (l & t.closure_of[a]) == a) {
        via_wedge_and_own_closure = true;
        break;
      }
    if (via_identity != via_search || via_identity != via_kernel_and_any_closure ||
        via_identity != via_wedge_and_own_closure)
      return fail(checks, {a}, {}, "lambda*-closed characterizations disagree");
  }
  return ok(checks);
}

LawCheck law_5_4(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.lambda_closed_f[a] && t.g_wedge_f[a] && t.closed_f[t.closure_of[a]] && !t.wedge_f[a])
      return fail(checks, {a}, {}, "lambda*-closed g-wedge set with closed closure not a wedge set");
  }
  return ok(checks);
}

LawCheck law_5_6(const SpaceTables& t) {
  bool all_lambda = true;
  for (Mask a = 0; a < t.count; ++a)
    if (!t.lambda_closed_f[a]) all_lambda = false;
  const bool rhs = all_lambda && t.axioms.c_eq_cstar;
  if (t.axioms.t_w != rhs)
    return fail(1, {}, {}, "Tw disagrees with (every subset lambda*-closed and C = C*)");
  return ok(1);
}

LawCheck law_5_8(const SpaceTables& t) {
  if (!t.axioms.c_eq_cstar) return ok(0);
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.gstar_closed_f[a] && t.lambda_closed_f[a] && !t.closed_f[a])
      return fail(checks, {a}, {}, "g*-closed lambda*-closed set not closed although C = C*");
  }
  return ok(checks);
}

LawCheck law_5_14(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if ((t.lambda_open_f[a] != 0) != is_lambda_star_open_decomp(*t.space, a))
      return fail(checks, {a}, {}, "lambda*-open identity disagrees with the M | int(V) search");
  }
  return ok(checks);
}

LawCheck law_5_16(const SpaceTables& t) {
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (t.lambda_open_f[a] != t.lambda_closed_f[t.full & ~a])
      return fail(checks, {a}, {}, "lambda*-open disagrees with lambda*-closed complement");
  }
  return ok(checks);
}

LawCheck law_6_2(const SpaceTables& t) {
  if (t.axioms.t_w4 && !t.axioms.t0) return fail(1, {}, {}, "Tw4 space that is not T0");
  return ok(1);
}

LawCheck law_6_3(const SpaceTables& t) {
  bool all_finite_lambda = true;  // every subset of a finite space is finite
  for (Mask a = 0; a < t.count; ++a)
    if (!t.lambda_closed_f[a]) all_finite_lambda = false;
  if (tw4_definitional(*t.space) != all_finite_lambda)
    return fail(1, {}, {}, "Tw4 definition disagrees with finite-subset lambda*-closedness");
  return ok(1);
}

LawCheck law_6_4(const SpaceTables& t) {
  bool singles_lambda = true;
  for (std::size_t x = 0; x < t.n; ++x)
    if (!t.lambda_closed_f[Mask{1} << x]) singles_lambda = false;
  if (t0_definitional(*t.space) != singles_lambda)
    return fail(1, {}, {}, "T0 definition disagrees with singleton lambda*-closedness");
  return ok(1);
}

LawCheck law_6_7(const SpaceTables& t) {
  bool all_lambda = true;
  for (Mask a = 0; a < t.count; ++a)
    if (!t.lambda_closed_f[a]) all_lambda = false;
  if (t3w8_definitional(*t.space) != all_lambda)
    return fail(1, {}, {}, "T3w8 definition disagrees with countable-subset lambda*-closedness");
  return ok(1);
}

LawCheck law_6_9(const SpaceTables& t) {
  bool all_lambda = true;
  for (Mask a = 0; a < t.count; ++a)
    if (!t.lambda_closed_f[a]) all_lambda = false;
  if (t5w8_definitional(*t.space) != all_lambda)
    return fail(1, {}, {}, "T5w8 definition disagrees with every-subset lambda*-closedness");
  return ok(1);
}

LawCheck law_6_10(const SpaceTables& t) {
  const auto& f = t.axioms;
  if (f.t_w && !f.t_5w8) return fail(4, {}, {}, "Tw space that is not T5w8");
  if (f.t_5w8 && !f.t_3w8) return fail(4, {}, {}, "T5w8 space that is not T3w8");
  if (f.t_3w8 && !f.t_w4) return fail(4, {}, {}, "T3w8 space that is not Tw4");
  if (f.t_w4 && !f.t0) return fail(4, {}, {}, "Tw4 space that is not T0");
  return ok(4);
}

LawCheck law_6_14(const SpaceTables& t) {
  if (t.axioms.t1 != (t.axioms.t0 && t.axioms.r0))
    return fail(1, {}, {}, "T1 disagrees with T0 and R0");
  return ok(1);
}

LawCheck law_6_15(const SpaceTables& t) {
  bool singles_wedge = true;
  for (std::size_t x = 0; x < t.n; ++x)
    if (!t.wedge_f[Mask{1} << x]) singles_wedge = false;
  if (t1_definitional(*t.space) != singles_wedge)
    return fail(1, {}, {}, "T1 definition disagrees with singleton wedge-set test");
  return ok(1);
}

LawCheck law_6_17(const SpaceTables& t) {
  if (t.axioms.r0 && !t.axioms.weak_r0) return fail(1, {}, {}, "R0 space that is not weak R0");
  return ok(1);
}

LawCheck law_6_19(const SpaceTables& t) {
  bool all_wedge = true;
  for (Mask a = 0; a < t.count; ++a)
    if (!t.wedge_f[a]) all_wedge = false;
  if (all_wedge && !t.axioms.t1)
    return fail(1, {}, {}, "every subset a wedge set yet the space is not T1");
  return ok(1);
}

LawCheck law_6_23(const SpaceTables& t) {
  const auto& f = t.axioms;
  if (!(f.strongly_symmetric && f.t1 && f.c_eq_cstar)) return ok(0);
  std::uint64_t checks = 0;
  for (Mask a : t.canon) {
    ++checks;
    if (!t.wedge_f[a])
      return fail(checks, {a}, {}, "subset not a wedge set under SS, T1 and C = C*");
  }
  return ok(checks);
}

LawCheck law_6_25(const SpaceTables& t) {
  const auto& f = t.axioms;
  const bool via_r0 = f.t0 && f.r0;
  const bool via_weak = f.t0 && f.weak_r0;
  if (f.t1 != via_r0 || f.t1 != via_weak)
    return fail(1, {}, {}, "T1, (T0 and R0), (T0 and weak R0) are not all equal");
  return ok(1);
}

LawCheck law_6_26(const SpaceTables& t) {
  const auto& f = t.axioms;
  if (f.strongly_symmetric && f.t1 && f.c_eq_cstar && !f.t_w)
    return fail(1, {}, {}, "SS, T1 and C = C* hold but the space is not Tw");
  return ok(1);
}

LawCheck law_6_27(const SpaceTables& t) {
  const auto& f = t.axioms;
  if (!(f.strongly_symmetric && f.weak_r0 && f.c_eq_cstar)) return ok(0);
  const bool v[6] = {f.t0, f.t1, f.t_w, f.t_5w8, f.t_3w8, f.t_w4};
  for (int i = 1; i < 6; ++i)
    if (v[i] != v[0])
      return fail(1, {}, {}, "the six axioms are not pairwise equivalent under SS, WR0, C = C*");
  return ok(1);
}

LawCheck law_finite_collapse(const SpaceTables& t) {
  const auto& f = t.axioms;
  if (f.t_w4 != f.t_3w8 || f.t_3w8 != f.t_5w8)
    return fail(1, {}, {}, "Tw4 / T3w8 / T5w8 differ on a finite space");
  return ok(1);
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = {
      {"L-2.1", "closure equals the intersection of closed supersets", &law_2_1},
      {"L-2.5", "cl(A) = A | A' (derived set decomposition)", &law_2_5},
      {"L-2.8", "int(A) = X - cl(X - A)", &law_2_8},
      {"L-3.4", "each singleton is closed or has g*-closed complement", &law_3_4},
      {"L-3.5", "g*-closed: F <= ker(A) test agrees with the F - A test", &law_3_5},
      {"L-3.13", "intersection of two g*-open sets is g*-open", &law_3_13},
      {"L-3.14", "g*-open: complement test agrees with open V >= vee(A) test", &law_3_14},
      {"L-3.16-dual", "A g-vee iff X - A g-wedge", &law_3_16_dual},
      {"L-3.18", "kernel/vee constants, extensivity, idempotence, monotonicity, duality",
       &law_3_18},
      {"L-3.19", "union of vee-sets is a vee-set", &law_3_19},
      {"L-3.20", "intersection of wedge sets is a wedge set", &law_3_20},
      {"L-3.21", "intersection of two vee-sets is a vee-set", &law_3_21},
      {"L-3.22", "the vee-sets form a topology", &law_3_22},
      {"L-3.23ii", "a wedge set is g*-closed iff closed", &law_3_23ii},
      {"L-3.24", "ker(A) g*-closed implies A g*-closed", &law_3_24},
      {"L-3.25", "vee(A) g*-open implies A g*-open", &law_3_25},
      {"L-3.27", "ker(A | B) = ker(A) | ker(B)", &law_3_27},
      {"L-3.28", "union of two wedge sets is a wedge set", &law_3_28},
      {"L-3.30", "union of two g-wedge sets is a g-wedge set", &law_3_30},
      {"L-3.31", "intersection of two g-vee sets is a g-vee set", &law_3_31},
      {"L-3.36", "each singleton is open or a g-vee set", &law_3_36},
      {"L-3.37", "each singleton is g*-open or a g-vee set", &law_3_37},
      {"L-3.38", "for a g-vee set, only X is a closed superset of vee(A) | (X - A)", &law_3_38},
      {"L-3.39", "for a g-vee set, vee(A) | (X - A) closed iff A is a vee-set", &law_3_39},
      {"L-3.40", "a vee-set is g*-open iff open", &law_3_40},
      {"L-4.3", "Tw iff singletons open-or-closed and C = C*", &law_4_3},
      {"L-4.4", "Tw iff every g-wedge (g-vee) set is a wedge (vee) set and C = C*", &law_4_4},
      {"L-5.3", "the four lambda*-closed characterizations agree", &law_5_3},
      {"L-5.4", "lambda*-closed g-wedge set with closed closure is a wedge set", &law_5_4},
      {"L-5.6", "Tw iff every subset lambda*-closed and C = C*", &law_5_6},
      {"L-5.8", "under C = C*, g*-closed and lambda*-closed imply closed", &law_5_8},
      {"L-5.14", "lambda*-open iff A = M | int(V) for a vee-set M", &law_5_14},
      {"L-5.16", "lambda*-open iff the complement is lambda*-closed", &law_5_16},
      {"L-6.2", "every Tw4 space is T0", &law_6_2},
      {"L-6.3", "Tw4 iff every finite subset lambda*-closed", &law_6_3},
      {"L-6.4", "T0 iff every singleton lambda*-closed", &law_6_4},
      {"L-6.7", "T3w8 iff every countable subset lambda*-closed", &law_6_7},
      {"L-6.9", "T5w8 iff every subset lambda*-closed", &law_6_9},
      {"L-6.10", "Tw => T5w8 => T3w8 => Tw4 => T0", &law_6_10},
      {"L-6.14", "T1 iff T0 and R0", &law_6_14},
      {"L-6.15", "T1 iff every singleton a wedge set", &law_6_15},
      {"L-6.17", "every R0 space is weak R0", &law_6_17},
      {"L-6.19", "every subset a wedge set implies T1", &law_6_19},
      {"L-6.23", "SS, T1 and C = C* imply every subset is a wedge set", &law_6_23},
      {"L-6.25", "T1 iff (T0 and R0) iff (T0 and weak R0)", &law_6_25},
      {"L-6.26", "SS, T1 and C = C* imply Tw", &law_6_26},
      {"L-6.27", "under SS, WR0, C = C* the six axioms T0..Tw4 coincide", &law_6_27},
      {"L-finite-collapse", "Tw4 = T3w8 = T5w8 on finite spaces", &law_finite_collapse},
  };
  return registry;
}

const Law* find_law(std::string_view id) {
  for (const auto& law : law_registry())
    if (law.id == id) return &law;
  return nullptr;
}

LawCheck run_law(const Law& law, const SpaceStructure& space) {
  return law.check(build_tables(space));
}

bool VerifyReport::all_hold() const {
  for (const auto& v : laws)
    if (!v.holds) return false;
  return true;
}

VerifyReport verify_all(std::size_t max_points, const std::optional<std::string>& law_id,
                        std::size_t threads) {
  std::vector<const Law*> selected;
  if (law_id) {
    const Law* law = find_law(*law_id);
    if (!law) throw Error(Errc::unknown_law, "unknown law id '" + *law_id + "'");
    selected.push_back(law);
  } else {
    for (const auto& law : law_registry()) selected.push_back(&law);
  }

  struct Agg {
    std::atomic<std::uint64_t> checks{0};
    std::mutex m;
    std::optional<FoundWitness> witness;
  };
  std::deque<Agg> aggs(selected.size());

  VerifyReport report;
  report.max_points = max_points;

  std::uint64_t space_base = 0;
  for (std::size_t n = 1; n <= max_points; ++n) {
    EnumerationResult level = enum_fast(n, true);
    parallel_for_index(level.spaces.size(), threads, [&](std::size_t i) {
      const SpaceStructure& space = level.spaces[i];
      const SpaceTables tables = build_tables(space);
      for (std::size_t k = 0; k < selected.size(); ++k) {
        LawCheck check = selected[k]->check(tables);
        aggs[k].checks += check.checks;
        if (check.witness) {
          std::lock_guard lock(aggs[k].m);
          const std::uint64_t index = space_base + i;
          if (!aggs[k].witness || index < aggs[k].witness->space_index)
            aggs[k].witness = FoundWitness{index, space, std::move(*check.witness)};
        }
      }
    });
    space_base += level.spaces.size();
  }
  report.total_spaces = space_base;

  for (std::size_t k = 0; k < selected.size(); ++k) {
    LawVerdict verdict;
    verdict.id = selected[k]->id;
    verdict.statement = selected[k]->statement;
    verdict.spaces_checked = space_base;
    verdict.sets_checked = aggs[k].checks.load();
    verdict.holds = !aggs[k].witness.has_value();
    verdict.witness = aggs[k].witness;
    report.laws.push_back(std::move(verdict));
  }
  return report;
}

SearchResult search_property(const std::string& expr_text, std::size_t max_points,
                             std::size_t threads) {
  const PropertyExpr expr = PropertyExpr::parse(expr_text);
  SearchResult out;
  out.property = expr_text;
  out.max_points = max_points;

  for (std::size_t n = 1; n <= max_points; ++n) {
    EnumerationResult reps = enum_up_to_iso(n, true);
    std::vector<char> sat(reps.spaces.size(), 0);
    parallel_for_index(reps.spaces.size(), threads, [&](std::size_t i) {
      sat[i] = expr.eval(build_tables(reps.spaces[i]).axioms) ? 1 : 0;
    });
    out.classes_examined += reps.spaces.size();
    for (std::size_t i = 0; i < reps.spaces.size(); ++i) {
      if (sat[i]) {
        out.witness = reps.spaces[i];
        return out;
      }
    }
  }
  return out;
}

}  // namespace sigma
