#include "enumerate.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace sigma {

namespace {

SpaceStructure space_from_opens(const GroundPtr& ground, std::vector<Mask> opens) {
  // Families produced by the enumerators satisfy the axioms by construction.
  SpaceStructure out;
  out.ground = ground;
  out.opens = canonical_family(std::move(opens));
  const Mask full = ground->full();
  out.closeds.reserve(out.opens.size());
  for (Mask m : out.opens) out.closeds.push_back(full & ~m);
  out.closeds = canonical_family(std::move(out.closeds));
  return out;
}

}  // namespace

void for_each_space_brute(const GroundPtr& ground, const SpaceVisitor& visit) {
  const std::size_t n = ground->size();
  if (n > kMaxBrutePoints)
    throw Error(Errc::too_large,
                "brute enumeration limited to " + std::to_string(kMaxBrutePoints) + " points");

  const std::size_t subset_count = std::size_t{1} << n;  // families are bitsets over these
  const std::uint64_t family_count = std::uint64_t{1} << subset_count;

  std::vector<Mask> members;
  for (std::uint64_t fam = 0; fam < family_count; ++fam) {
    // bit m of fam <=> the subset with mask m belongs to the family
    if (!(fam & 1) || !(fam >> (subset_count - 1) & 1)) continue;  // {} and X required
    members.clear();
    for (std::size_t m = 0; m < subset_count; ++m)
      if (fam >> m & 1) members.push_back(Mask(m));
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!(fam >> (members[i] | members[j]) & 1) || !(fam >> (members[i] & members[j]) & 1)) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    visit(space_from_opens(ground, members));
  }
}

void for_each_space_fast(const GroundPtr& ground, const SpaceVisitor& visit) {
  const std::size_t n = ground->size();
  if (n > kMaxEnumPoints)
    throw Error(Errc::too_large,
                "enumeration limited to " + std::to_string(kMaxEnumPoints) + " points");

  const Mask full = ground->full();
  std::vector<Mask> min_open(n, 0);

  // Opens are exactly the unions of minimal neighborhoods.
  auto emit = [&]() {
    std::vector<Mask> opens;
    opens.reserve(std::size_t{1} << n);
    for (Mask pts = 0; pts <= full; ++pts) {
      Mask u = 0;
      for (Mask rest = pts; rest;) {
        const unsigned i = std::countr_zero(rest);
        rest &= rest - 1;
        u |= min_open[i];
      }
      opens.push_back(u);
    }
    visit(space_from_opens(ground, std::move(opens)));
  };

  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      emit();
      return;
    }
    const Mask pbit = Mask{1} << p;
    for (Mask cand = 0; cand <= full; ++cand) {
      if (!(cand & pbit)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        if ((cand >> q & 1) && (min_open[q] & ~cand) != 0) ok = false;        // q in U_p
        if (ok && (min_open[q] >> p & 1) && (cand & ~min_open[q]) != 0) ok = false;  // p in U_q
      }
      if (!ok) continue;
      min_open[p] = cand;
      self(self, p + 1);
    }
    min_open[p] = 0;
  };
  rec(rec, 0);
}

namespace {

EnumerationResult run_enumeration(std::size_t n, bool materialize,
                                  void (*driver)(const GroundPtr&, const SpaceVisitor&)) {
  EnumerationResult out;
  out.points = n;
  const GroundPtr ground = default_ground(n);
  driver(ground, [&](const SpaceStructure& s) {
    ++out.labeled_count;
    if (materialize) out.spaces.push_back(s);
  });
  return out;
}

}  // namespace

EnumerationResult enum_brute(std::size_t n, bool materialize) {
  return run_enumeration(n, materialize, &for_each_space_brute);
}

EnumerationResult enum_fast(std::size_t n, bool materialize) {
  return run_enumeration(n, materialize, &for_each_space_fast);
}

EnumerationResult dedupe(const EnumerationResult& labeled) {
  EnumerationResult out;
  out.points = labeled.points;
  out.labeled_count = labeled.labeled_count;
  const GroundPtr ground = default_ground(labeled.points);
  std::map<CanonicalForm, bool> classes;
  for (const auto& s : labeled.spaces) classes.emplace(canonicalize(s), true);
  out.unlabeled_count = classes.size();
  out.spaces.reserve(classes.size());
  for (const auto& [form, _] : classes) out.spaces.push_back(space_from_opens(ground, form.opens));
  return out;
}

EnumerationResult enum_up_to_iso(std::size_t n, bool materialize) {
  EnumerationResult out;
  out.points = n;
  const GroundPtr ground = default_ground(n);
  std::map<CanonicalForm, bool> classes;
  for_each_space_fast(ground, [&](const SpaceStructure& s) {
    ++out.labeled_count;
    classes.emplace(canonicalize(s), true);
  });
  out.unlabeled_count = classes.size();
  if (materialize) {
    out.spaces.reserve(classes.size());
    for (const auto& [form, _] : classes)
      out.spaces.push_back(space_from_opens(ground, form.opens));
  }
  return out;
}

}  // namespace sigma
