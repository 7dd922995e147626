#include "doctest.h"

#include <random>

#include "brunnel/catalog.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/surface.hpp"
#include "random_history.hpp"

using namespace brunnel;

TEST_CASE("bases") {
  for (const auto& name : base_names()) {
    CAPTURE(name);
    const SurfaceLinkDescriptor s = base_descriptor(name);
    CHECK(s.brunnian_status() == BrunnianStatus::Brunnian);
    CHECK(s.history().size() == 1);
    if (s.boundary()) CHECK(s.boundary()->component_count() == s.component_count());
  }
  CHECK(base_descriptor("D1").boundary()->crossing_count() == 42);
  CHECK(base_descriptor("D1").assumptions().size() == 3);
  CHECK_THROWS_AS(base_descriptor("nope"), ValidationError);
}

TEST_CASE("Bing doubling the first component") {
  const SurfaceLinkDescriptor s = base_descriptor("disk-genus1");
  const SurfaceLinkDescriptor b = bing_double_first(s);
  REQUIRE(b.component_count() == 3);
  CHECK(b.component(0).trivial_disk);
  CHECK(b.component(1).trivial_disk);
  CHECK(b.component(2) == s.component(1));
  CHECK(b.brunnian_status() == BrunnianStatus::Brunnian);
  CHECK_THROWS_AS(bing_double_first(base_descriptor("genus1")), PreconditionError);
  const SurfaceLinkDescriptor d = bing_double_first(base_descriptor("D1"));
  REQUIRE(d.boundary());
  CHECK(d.boundary()->component_count() == 2);
  CHECK(linking_matrix(*d.boundary())[0][1] == 0);
}

TEST_CASE("iterated doubling of a 2-component descriptor") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(iterate_bing_double_first(base_descriptor("disk-genus1"), n - 2).component_count() == n);
  }
  CHECK_THROWS_AS(iterate_bing_double_first(base_descriptor("disk"), -1), PreconditionError);
}

TEST_CASE("band join") {
  const SurfaceLinkDescriptor s = band_join(bing_double_first(base_descriptor("disk-genus1")), 2, 0);
  REQUIRE(s.component_count() == 2);
  CHECK(s.component(0).genus == 1);
  CHECK(s.brunnian_status() == BrunnianStatus::Unknown);
  CHECK_THROWS_AS(band_join(s, 0, 0), PreconditionError);
  CHECK_THROWS_AS(band_join(s, 0, 5), PreconditionError);
  const SurfaceLinkDescriptor d = band_join(bing_double_first(base_descriptor("trivial-disk")), 0, 1);
  CHECK(d.boundary()->component_count() == 1);
  CHECK(bing_double_first(d).brunnian_status() == BrunnianStatus::Unknown);
}

TEST_CASE("rim surgery") {
  const SurfaceLinkDescriptor s = rim_surgery(base_descriptor("disk"), "gamma", "trefoil");
  CHECK(s.components() == base_descriptor("disk").components());
  CHECK(s.brunnian_status() == BrunnianStatus::Brunnian);
  CHECK(s.assumptions().back().find("gamma") != std::string::npos);
  CHECK_THROWS_AS(rim_surgery(s, "gamma", "not-a-knot"), ValidationError);
  CHECK_THROWS_AS(rim_surgery(s, "", "trefoil"), ValidationError);
}

TEST_CASE("covering lift inverts Bing doubling") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const SurfaceLinkDescriptor s = testing_support::random_descriptor(rng);
    const SurfaceLinkDescriptor b = bing_double_first(s);
    CHECK(liftable(b, 2));
    CHECK(covering_lift(b, 2).descriptor == s);
    if (s.brunnian_status() == BrunnianStatus::Brunnian) CHECK(b.brunnian_status() == BrunnianStatus::Brunnian);
  }
}

TEST_CASE("covering lift preconditions") {
  const SurfaceLinkDescriptor b = bing_double_first(base_descriptor("trivial-disk"));
  CHECK_THROWS_AS(covering_lift(base_descriptor("disk"), 2), PreconditionError);
  CHECK_THROWS_AS(covering_lift(b, 3), UnsupportedError);
  CHECK_THROWS_AS(covering_lift(b, 0), PreconditionError);
  const CoverResult r = covering_lift(b, 2);
  REQUIRE(r.cover_boundary);
  CHECK(r.cover_boundary->component_count() == 1);
  CHECK(simplify(*r.cover_boundary).crossing_count() == 0);
}

TEST_CASE("liftability from linking numbers") {
  const SurfaceComponent disk;
  const SurfaceLinkDescriptor hopf = SurfaceLinkDescriptor().then(
      base_step("hopf", {disk, disk}, BrunnianStatus::Unknown, catalog_diagram("hopf")));
  CHECK_FALSE(liftable(hopf, 2));
  CHECK(liftable(hopf, 1));
  // Bing doubling kills every linking number with component 0.
  const SurfaceLinkDescriptor b = bing_double_first(hopf);
  CHECK(liftable(b, 2));
  CHECK(liftable(b, 3));
  CHECK(covering_lift(b, 2).descriptor == hopf);
  CHECK_THROWS_AS(covering_lift(b, 3), UnsupportedError);
  CHECK(liftable(base_descriptor("disk"), 7));
}

TEST_CASE("Omega values") {
  CHECK((OmegaValue::finite(2) + OmegaValue::finite(3)) == OmegaValue::finite(5));
  CHECK((OmegaValue::bottom() + OmegaValue::finite(3)).is_bottom());
  CHECK(rim_surgery_omega(OmegaValue::bottom(), 4).is_bottom());
  CHECK(OmegaValue::bottom().to_string() == "-inf");
  CHECK_THROWS_AS(OmegaValue::bottom().value(), PreconditionError);
  CHECK_THROWS_AS(OmegaValue::finite(-1), PreconditionError);
  for (int n = 0; n <= 4; ++n) CHECK(knot_factor_count("trefoil#" + std::to_string(n)) == n);
  CHECK(knot_factor_count("wh+trefoil") == 0);
  CHECK(knot_factor_count("granny") == 2);
}

TEST_CASE("Omega through rim surgeries") {
  SurfaceLinkDescriptor s = base_descriptor("disk");
  CHECK(omega_of(rim_surgery(s, "c", "trefoil#3"), OmegaValue::finite(0)) == OmegaValue::finite(3));
  CHECK(omega_of(rim_surgery(rim_surgery(s, "c", "trefoil"), "d", "figure-eight"), OmegaValue::finite(1)) ==
        OmegaValue::finite(3));
  CHECK(omega_of(rim_surgery(s, "c", "trefoil"), OmegaValue::bottom()).is_bottom());
  CHECK_THROWS_AS(omega_of(rim_surgery(s, "c", "trefoil", 2), OmegaValue::finite(0)), UnsupportedError);
}

TEST_CASE("distinctness ledger") {
  const SurfaceLinkDescriptor s = base_descriptor("disk");
  const std::vector<SurfaceLinkDescriptor> family = {
      s, rim_surgery(s, "c", "trefoil"), rim_surgery(s, "c", "left-trefoil"), rim_surgery(s, "c", "figure-eight"),
      rim_surgery(s, "c", "5_2")};
  const DistinctnessLedger l = distinctness_ledger(family, OmegaValue::finite(0));
  CHECK(l.labels[0] == "none");
  CHECK(l.verdicts[0][1] == Verdict::DistinguishedByOmega);
  CHECK(l.verdicts[1][2] == Verdict::Undistinguished);
  CHECK(l.verdicts[1][3] == Verdict::DistinguishedUpToUnits);
  CHECK(l.verdicts[3][3] == Verdict::Same);
  const DistinctnessLedger b = distinctness_ledger(family, OmegaValue::bottom());
  CHECK(b.verdicts[0][1] == Verdict::DistinguishedUpToUnits);
  CHECK_THROWS_AS(distinctness_ledger({s, base_descriptor("genus1")}, OmegaValue::finite(0)), PreconditionError);
}

TEST_CASE("descriptor JSON round trip") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const SurfaceLinkDescriptor s = testing_support::random_descriptor(rng);
    const nlohmann::json j = descriptor_to_json(s);
    CHECK(j.at("schema") == "brunnel.descriptor/1");
    CHECK(descriptor_from_json(j) == s);
  }
  nlohmann::json j = descriptor_to_json(bing_double_first(base_descriptor("disk")));
  j["brunnian_status"] = "not-brunnian";
  CHECK_THROWS_AS(descriptor_from_json(j), ValidationError);
}
