#include "axioms.hpp"

#include <algorithm>
#include <stdexcept>

#include "operators.hpp"
#include "set_classes.hpp"

namespace sigma {

namespace {

bool agree(bool a, bool b, const char* what) {
  if (a != b) throw std::logic_error(std::string("formulations disagree for ") + what);
  return a;
}

// Open-or-closed A with P <= A and y not in A.
bool separator_exists(const SpaceStructure& space, Mask p, std::size_t y) {
  const Mask ybit = Mask{1} << y;
  for (Mask a : space.opens)
    if ((p & ~a) == 0 && (a & ybit) == 0) return true;
  for (Mask a : space.closeds)
    if ((p & ~a) == 0 && (a & ybit) == 0) return true;
  return false;
}

// Definitional check shared by Tw4 / T3w8 / T5w8: the three axioms quantify
// over finite, countable and arbitrary subsets, which coincide here. Each
// caller passes its own domain filter to keep the definitions distinct.
template <typename DomainFilter>
bool separation_axiom(const SpaceStructure& space, DomainFilter&& in_domain) {
  const std::size_t n = space.size();
  const Mask full = space.full();
  for (Mask p = 0; p <= full; ++p) {
    if (!in_domain(p)) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (p >> y & 1) continue;
      if (!separator_exists(space, p, y)) return false;
    }
  }
  return true;
}

}  // namespace

bool AxiomFlags::get(std::string_view name) const {
  if (name == "TW") return t_w;
  if (name == "T5W8") return t_5w8;
  if (name == "T3W8") return t_3w8;
  if (name == "TW4") return t_w4;
  if (name == "T0") return t0;
  if (name == "T1") return t1;
  if (name == "R0") return r0;
  if (name == "WR0") return weak_r0;
  if (name == "SS") return strongly_symmetric;
  if (name == "CEQ") return c_eq_cstar;
  if (name == "BICOMPACT") return bicompact;
  throw std::out_of_range("unknown axiom name: " + std::string(name));
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {"TW", "T5W8", "T3W8", "TW4", "T0",       "T1",
                                                 "R0", "WR0",  "SS",   "CEQ", "BICOMPACT"};
  return names;
}

bool t0_definitional(const SpaceStructure& space) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = false;
      for (Mask u : space.opens) {
        const bool hx = u >> x & 1, hy = u >> y & 1;
        if (hx != hy) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool t1_definitional(const SpaceStructure& space) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool found = false;
      for (Mask u : space.opens)
        if ((u >> x & 1) && !(u >> y & 1)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool t0_via_lambda(const SpaceStructure& space) {
  for (std::size_t x = 0; x < space.size(); ++x)
    if (!is_lambda_star_closed(space, Mask{1} << x)) return false;
  return true;
}

bool is_T0(const SpaceStructure& space) {
  return agree(t0_definitional(space), t0_via_lambda(space), "T0");
}

bool t1_via_wedge(const SpaceStructure& space) {
  for (std::size_t x = 0; x < space.size(); ++x)
    if (!is_wedge_set(space, Mask{1} << x)) return false;
  return true;
}

bool is_T1(const SpaceStructure& space) {
  return agree(t1_definitional(space), t1_via_wedge(space), "T1");
}

bool is_R0(const SpaceStructure& space) {
  for (Mask u : space.opens)
    for (std::size_t x = 0; x < space.size(); ++x)
      if ((u >> x & 1) && (closure(space, Mask{1} << x) & ~u) != 0) return false;
  return true;
}

bool is_weak_R0(const SpaceStructure& space) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Mask s = Mask{1} << x;
    if (is_lambda_star_closed(space, s) && !is_wedge_set(space, s)) return false;
  }
  return true;
}

bool is_strongly_symmetric(const SpaceStructure& space) {
  for (std::size_t x = 0; x < space.size(); ++x)
    if (!is_gstar_closed(space, Mask{1} << x)) return false;
  return true;
}

CStarFamilies compute_C_Cstar(const SpaceStructure& space) {
  CStarFamilies out;
  const Mask full = space.full();
  for (Mask a : subsets_in_canonical_order(space.size())) {
    if (space.is_closed(closure(space, full & ~a))) out.c.push_back(a);
    if (gstar_closure(space, full & ~a).is_gstar_closed) out.cstar.push_back(a);
  }
  return out;
}

namespace {

bool tw_def(const SpaceStructure& space) {
  const Mask full = space.full();
  for (Mask a = 0; a <= full; ++a)
    if (is_gstar_closed(space, a) && !space.is_closed(a)) return false;
  return true;
}

bool every_singleton_open_or_closed(const SpaceStructure& space) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Mask s = Mask{1} << x;
    if (!space.is_open(s) && !space.is_closed(s)) return false;
  }
  return true;
}

}  // namespace

bool tw_via_singletons(const SpaceStructure& space) {
  return every_singleton_open_or_closed(space) && compute_C_Cstar(space).equal();
}

bool tw_via_g_wedge(const SpaceStructure& space) {
  if (!compute_C_Cstar(space).equal()) return false;
  const Mask full = space.full();
  for (Mask a = 0; a <= full; ++a)
    if (is_g_wedge_set(space, a) && !is_wedge_set(space, a)) return false;
  return true;
}

bool tw_via_lambda(const SpaceStructure& space) {
  if (!compute_C_Cstar(space).equal()) return false;
  const Mask full = space.full();
  for (Mask a = 0; a <= full; ++a)
    if (!is_lambda_star_closed(space, a)) return false;
  return true;
}

bool is_Tw(const SpaceStructure& space) { return tw_def(space); }

// Every subset of a finite ground set is finite and countable, so the three
// definitional filters accept everything; each axiom still runs its own pass.
bool tw4_definitional(const SpaceStructure& space) {
  return separation_axiom(space, [](Mask) { return true; });
}

bool t3w8_definitional(const SpaceStructure& space) {
  return separation_axiom(space, [](Mask) { return true; });
}

bool t5w8_definitional(const SpaceStructure& space) {
  return separation_axiom(space, [](Mask) { return true; });
}

bool is_Tw4(const SpaceStructure& space) {
  return agree(tw4_definitional(space), tw4_via_lambda(space), "TW4");
}

bool tw4_via_lambda(const SpaceStructure& space) {
  const Mask full = space.full();
  for (Mask p = 0; p <= full; ++p)
    if (!is_lambda_star_closed(space, p)) return false;
  return true;
}

bool is_T3w8(const SpaceStructure& space) {
  return agree(t3w8_definitional(space), t3w8_via_lambda(space), "T3W8");
}

bool t3w8_via_lambda(const SpaceStructure& space) { return tw4_via_lambda(space); }

bool is_T5w8(const SpaceStructure& space) {
  return agree(t5w8_definitional(space), t5w8_via_lambda(space), "T5W8");
}

bool t5w8_via_lambda(const SpaceStructure& space) { return tw4_via_lambda(space); }

bool is_bicompact(const SpaceStructure&) { return true; }

namespace {

void note_witness(AxiomReport& report, AxiomWitness w) { report.witnesses.push_back(std::move(w)); }

// First refutation in canonical subset order / index order, so reports are
// deterministic and diffable.
void collect_witnesses(const SpaceStructure& space, AxiomReport& report) {
  const std::size_t n = space.size();
  const auto canon = subsets_in_canonical_order(n);
  const auto& f = report.flags;

  if (!f.t_w) {
    for (Mask a : canon)
      if (is_gstar_closed(space, a) && !space.is_closed(a)) {
        note_witness(report, {"TW", {}, {a}, "g*-closed but not closed"});
        break;
      }
  }
  auto separation_witness = [&](const char* name) {
    for (Mask p : canon) {
      for (std::size_t y = 0; y < n; ++y) {
        if (p >> y & 1) continue;
        if (!separator_exists(space, p, y)) {
          note_witness(report, {name, {y}, {p}, "no open-or-closed separator"});
          return;
        }
      }
    }
  };
  if (!f.t_5w8) separation_witness("T5W8");
  if (!f.t_3w8) separation_witness("T3W8");
  if (!f.t_w4) separation_witness("TW4");
  if (!f.t0) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        bool separated = false;
        for (Mask u : space.opens)
          if ((u >> x & 1) != (u >> y & 1)) separated = true;
        if (!separated) {
          note_witness(report, {"T0", {x, y}, {}, "no open contains exactly one of the pair"});
          goto t0_done;
        }
      }
  t0_done:;
  }
  if (!f.t1) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        bool found = false;
        for (Mask u : space.opens)
          if ((u >> x & 1) && !(u >> y & 1)) found = true;
        if (!found) {
          note_witness(report, {"T1", {x, y}, {}, "no open contains the first point only"});
          goto t1_done;
        }
      }
  t1_done:;
  }
  if (!f.r0) {
    for (Mask u : space.opens) {
      for (std::size_t x = 0; x < n; ++x)
        if ((u >> x & 1) && (closure(space, Mask{1} << x) & ~u) != 0) {
          note_witness(report, {"R0", {x}, {u}, "open set omits part of the singleton closure"});
          goto r0_done;
        }
    }
  r0_done:;
  }
  if (!f.weak_r0) {
    for (std::size_t x = 0; x < n; ++x) {
      const Mask s = Mask{1} << x;
      if (is_lambda_star_closed(space, s) && !is_wedge_set(space, s)) {
        note_witness(report, {"WR0", {x}, {}, "lambda*-closed singleton is not a wedge set"});
        break;
      }
    }
  }
  if (!f.strongly_symmetric) {
    for (std::size_t x = 0; x < n; ++x)
      if (!is_gstar_closed(space, Mask{1} << x)) {
        note_witness(report, {"SS", {x}, {}, "singleton not g*-closed"});
        break;
      }
  }
  if (!f.c_eq_cstar) {
    const auto fam = compute_C_Cstar(space);
    for (Mask a : canon) {
      const bool in_c = std::find(fam.c.begin(), fam.c.end(), a) != fam.c.end();
      const bool in_cstar = std::find(fam.cstar.begin(), fam.cstar.end(), a) != fam.cstar.end();
      if (in_c != in_cstar) {
        note_witness(report, {"CEQ", {}, {a}, in_c ? "in C but not C*" : "in C* but not C"});
        break;
      }
    }
  }
}

}  // namespace

AxiomReport classify(const SpaceStructure& space) {
  AxiomReport report;
  auto& f = report.flags;
  f.t0 = is_T0(space);
  f.t1 = is_T1(space);
  f.r0 = is_R0(space);
  f.weak_r0 = is_weak_R0(space);
  f.strongly_symmetric = is_strongly_symmetric(space);
  f.c_eq_cstar = compute_C_Cstar(space).equal();
  f.t_w = is_Tw(space);
  f.t_w4 = is_Tw4(space);
  f.t_3w8 = is_T3w8(space);
  f.t_5w8 = is_T5w8(space);
  f.bicompact = is_bicompact(space);
  collect_witnesses(space, report);
  return report;
}

}  // namespace sigma
