#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "errors.hpp"

using namespace sigma;

TEST_CASE("all catalog claims pass") {
  const auto results = run_all_claims();
  CHECK(results.size() == 17);
  for (const auto& claim : results) {
    INFO(claim.id);
    for (const auto& step : claim.steps) {
      INFO(step.name, " ", step.detail);
      CHECK(step.pass);
    }
    CHECK(claim.pass);
  }
}

TEST_CASE("claim lookup") {
  CHECK(run_claim("EX-5.10").pass);
  CHECK(run_claim("EX-3.12").pass);
  CHECK(run_claim("EX-6.12").pass);
  CHECK_THROWS_AS(run_claim("EX-9.99"), Error);
  try {
    run_claim("EX-9.99");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_claim);
  }
}

TEST_CASE("schema batteries hold for every registered schema") {
  for (const Schema* schema : schema_registry()) {
    INFO(schema->name());
    for (const auto& step : schema_battery(*schema)) {
      INFO(step.name, " ", step.detail);
      CHECK(step.pass);
    }
  }
}

TEST_CASE("symbolic algebra basics") {
  const Schema* sc = schema_registry().front();
  const SymSet x = sc->full_set();
  const SymSet e = sc->empty_set();
  CHECK(sym_complement(sym_complement(x)) == x);
  CHECK(sym_union(e, x) == x);
  CHECK(sym_intersect(e, x) == e);
  for (std::uint32_t b = 0; b <= sc->full_bits(); ++b) {
    const SymSet s{sc, b};
    CHECK(sym_complement(sym_complement(s)) == s);  // involution
    CHECK(sym_union(s, sym_complement(s)) == x);
    CHECK(sym_intersect(s, sym_complement(s)) == e);
  }
}

TEST_CASE("schema mismatch is rejected") {
  const Schema* a = schema_registry()[0];
  const Schema* b = schema_registry()[1];
  CHECK_THROWS_AS(sym_union(a->full_set(), b->full_set()), Error);
  try {
    sym_union(a->full_set(), b->full_set());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::schema_mismatch);
  }
}

// The descriptor view of a class: cardinality arithmetic facts that the cell
// representation must reproduce.
TEST_CASE("bulk descriptors") {
  // cells: s2 (atom), A (countable), u1/u2 (uncountable), all in class irr
  const Schema* sc = nullptr;
  for (const Schema* s : schema_registry())
    if (s->cells().size() == 4 && s->cells()[1].name == "A") sc = s;
  REQUIRE(sc != nullptr);

  CHECK(bulk_descriptor(sc->empty_set(), "irr") == BulkDescriptor::empty);
  CHECK(bulk_descriptor(sc->full_set(), "irr") == BulkDescriptor::all);
  CHECK(bulk_descriptor(sc->set({"s2"}), "irr") == BulkDescriptor::finite_nonempty);
  CHECK(bulk_descriptor(sc->set({"A"}), "irr") == BulkDescriptor::countably_infinite);
  CHECK(bulk_descriptor(sc->set({"s2", "A"}), "irr") == BulkDescriptor::countably_infinite);
  CHECK(bulk_descriptor(sc->set({"u1", "u2"}), "irr") == BulkDescriptor::co_countable);
  CHECK(bulk_descriptor(sc->set({"A", "u1", "u2"}), "irr") == BulkDescriptor::co_countable);
  CHECK(bulk_descriptor(sc->set({"u1"}), "irr") == BulkDescriptor::uncountable);

  // complement maps: empty<->all, finite<->co-countable
  CHECK(bulk_descriptor(sym_complement(sc->set({"s2"})), "irr") == BulkDescriptor::co_countable);
  CHECK(bulk_descriptor(sym_complement(sc->empty_set()), "irr") == BulkDescriptor::all);

  // countable | countable = countable; co-countable & co-countable stays
  // co-countable; countable & co-countable is countable
  const SymSet c1 = sc->set({"A"});
  const SymSet c2 = sc->set({"s2"});
  CHECK(bulk_descriptor(sym_union(c1, c2), "irr") == BulkDescriptor::countably_infinite);
  const SymSet cc1 = sc->set({"A", "u1", "u2"});
  const SymSet cc2 = sc->set({"s2", "u1", "u2"});
  CHECK(bulk_descriptor(sym_intersect(cc1, cc2), "irr") == BulkDescriptor::co_countable);
  CHECK(bulk_descriptor(sym_intersect(c1, cc1), "irr") == BulkDescriptor::countably_infinite);
}

// Frozen operator values the catalog reproduces (stated values of the
// example spaces).
TEST_CASE("frozen kernel and closure values") {
  const Schema* pinned = nullptr;  // countable/cocountable opens through s2
  for (const Schema* s : schema_registry())
    if (s->name().find("cocountable opens") != std::string::npos) pinned = s;
  REQUIRE(pinned != nullptr);
  const SymSet a = pinned->set({"A"});
  CHECK(sym_kernel(a) == pinned->set({"s2", "A"}));
  CHECK(sym_closure(a) == a);
  CHECK(sym_closure(pinned->set({"s2"})) == pinned->full_set());

  const Schema* anchored = nullptr;  // sqrt3-anchored opens avoiding sqrt2
  for (const Schema* s : schema_registry())
    if (s->name().find("anchored") != std::string::npos) anchored = s;
  REQUIRE(anchored != nullptr);
  CHECK(sym_kernel(anchored->set({"s2"})) == anchored->full_set());
  CHECK(sym_closure(anchored->set({"s2"})) == anchored->set({"s2"}));
  CHECK(sym_kernel(anchored->set({"s3"})) == anchored->set({"s3"}));
  CHECK(sym_closure(anchored->set({"s3"})) == anchored->full_set());
  CHECK(sym_kernel(anchored->set({"r"})) == anchored->set({"s3", "r"}));
  CHECK(sym_closure(anchored->set({"r"})) == anchored->set({"s2", "r"}));
}

TEST_CASE("interior and vee are De Morgan duals of closure and kernel") {
  for (const Schema* sc : schema_registry()) {
    for (std::uint32_t b = 0; b <= sc->full_bits(); ++b) {
      const SymSet s{sc, b};
      CHECK(sym_vee(s) == sym_complement(sym_kernel(sym_complement(s))));
      CHECK(sym_interior(s) == sym_complement(sym_closure(sym_complement(s))));
      CHECK(sym_subset(sym_vee(s), s));
      CHECK(sym_subset(sym_interior(s), s));
    }
  }
}

TEST_CASE("claim ids are exactly the registered list") {
  const std::vector<std::string> expected = {
      "EX-3.12", "EX-3.17", "EX-3.26", "EX-3.29", "EX-3.32", "EX-3.33", "EX-3.35", "EX-5.2",
      "EX-5.10", "EX-5.12", "EX-5.17", "EX-6.5",  "EX-6.11", "EX-6.12", "EX-6.13", "EX-6.18",
      "EX-6.21"};
  CHECK(claim_ids() == expected);
}
