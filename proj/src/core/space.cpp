#include "space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "errors.hpp"

namespace sigma {

std::vector<Mask> canonical_family(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

std::vector<Mask> subsets_in_canonical_order(std::size_t n) {
  std::vector<Mask> out(Mask{1} << n);
  std::iota(out.begin(), out.end(), Mask{0});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty())
    throw Error(Errc::validation_error, "ground set must have at least one point");
  if (labels_.size() > kMaxGroundSize)
    throw Error(Errc::too_large, "ground set exceeds " + std::to_string(kMaxGroundSize) + " points");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(Errc::validation_error, "empty point label");
    if (!seen.insert(l).second)
      throw Error(Errc::validation_error, "duplicate point label '" + l + "'");
  }
}

std::optional<std::size_t> GroundSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return i;
  return std::nullopt;
}

std::string GroundSet::format_subset(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(m >> i & 1)) continue;
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  out += '}';
  return out;
}

std::vector<std::string> GroundSet::subset_labels(Mask m) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (m >> i & 1) out.push_back(labels_[i]);
  return out;
}

GroundPtr default_ground(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return std::make_shared<const GroundSet>(std::move(labels));
}

bool SpaceStructure::is_open(Mask m) const {
  return std::find(opens.begin(), opens.end(), m) != opens.end();
}

bool SpaceStructure::is_closed(Mask m) const {
  return std::find(closeds.begin(), closeds.end(), m) != closeds.end();
}

SpaceStructure validate_space(GroundPtr ground, const std::vector<Mask>& opens) {
  const Mask full = ground->full();
  for (Mask m : opens)
    if (m & ~full)
      throw Error(Errc::validation_error, "open set has bits outside the ground set");

  std::vector<Mask> family = canonical_family(opens);
  auto member = [&](Mask m) {
    return std::binary_search(family.begin(), family.end(), m, canonical_less);
  };

  if (!member(0) || !member(full))
    throw Error(Errc::missing_empty_or_full,
                "open family must contain the empty set and the whole set");

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      Mask a = family[i], b = family[j];
      if (!member(a | b))
        throw Error(Errc::not_closed_under_union,
                    "open family not closed under union: " + ground->format_subset(a) +
                        " | " + ground->format_subset(b) + " missing");
      if (!member(a & b))
        throw Error(Errc::not_closed_under_intersection,
                    "open family not closed under intersection: " + ground->format_subset(a) +
                        " & " + ground->format_subset(b) + " missing");
    }
  }

  SpaceStructure out;
  out.ground = std::move(ground);
  out.opens = std::move(family);
  out.closeds.reserve(out.opens.size());
  for (Mask m : out.opens) out.closeds.push_back(full & ~m);
  out.closeds = canonical_family(std::move(out.closeds));
  return out;
}

SpaceStructure validate_space(const GroundSet& ground, const std::vector<Mask>& opens) {
  return validate_space(std::make_shared<const GroundSet>(ground), opens);
}

std::vector<Mask> closed_sets(const SpaceStructure& space) { return space.closeds; }

namespace {

Mask apply_perm(Mask m, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  while (m) {
    unsigned i = std::countr_zero(m);
    m &= m - 1;
    out |= Mask{1} << perm[i];
  }
  return out;
}

}  // namespace

SpaceStructure relabel(const SpaceStructure& space, const std::vector<std::size_t>& perm) {
  const std::size_t n = space.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = space.ground->label(i);
  std::vector<Mask> opens;
  opens.reserve(space.opens.size());
  for (Mask m : space.opens) opens.push_back(apply_perm(m, perm));
  return validate_space(std::make_shared<const GroundSet>(std::move(labels)), opens);
}

CanonicalForm canonicalize(const SpaceStructure& space) {
  const std::size_t n = space.size();
  if (n > kMaxCanonPoints)
    throw Error(Errc::too_large,
                "canonicalization limited to " + std::to_string(kMaxCanonPoints) + " points");

  // Per-point signature, invariant under homeomorphism: (|minimal open
  // neighborhood|, number of opens containing the point). Any isomorphism
  // maps points to equal-signature points, so the minimum over
  // signature-respecting permutations is the global minimum.
  std::vector<std::pair<int, int>> sig(n);
  for (std::size_t x = 0; x < n; ++x) {
    Mask min_open = space.full();
    int containing = 0;
    for (Mask u : space.opens) {
      if (u >> x & 1) {
        min_open &= u;
        ++containing;
      }
    }
    sig[x] = {popcount(min_open), containing};
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sig[a] != sig[b] ? sig[a] < sig[b] : a < b; });

  // Group points with equal signatures; candidate permutations arrange each
  // group internally while the group order stays fixed.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || sig[order[k]] != sig[order[k - 1]]) groups.emplace_back();
    groups.back().push_back(order[k]);
  }

  std::vector<Mask> best;
  std::vector<std::size_t> slot(n);
  std::vector<Mask> candidate;
  candidate.reserve(space.opens.size());

  auto consider = [&]() {
    candidate.clear();
    for (Mask m : space.opens) candidate.push_back(apply_perm(m, slot));
    std::sort(candidate.begin(), candidate.end(), canonical_less);
    if (best.empty() || std::lexicographical_compare(candidate.begin(), candidate.end(),
                                                     best.begin(), best.end(), canonical_less))
      best = candidate;
  };

  // Iterate the cartesian product of in-group arrangements.
  auto rec = [&](auto&& self, std::size_t g, std::size_t base) -> void {
    if (g == groups.size()) {
      consider();
      return;
    }
    std::vector<std::size_t> arr = groups[g];
    std::sort(arr.begin(), arr.end());
    do {
      for (std::size_t k = 0; k < arr.size(); ++k) slot[arr[k]] = base + k;
      self(self, g + 1, base + arr.size());
    } while (std::next_permutation(arr.begin(), arr.end()));
  };
  rec(rec, 0, 0);

  return CanonicalForm{n, std::move(best)};
}

}  // namespace sigma
