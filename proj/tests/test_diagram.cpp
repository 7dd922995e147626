#include "doctest.h"

#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/diagram.hpp"
#include "brunnel/diagram_json.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/satellite.hpp"

using namespace brunnel;

namespace {

LinkDiagram positive_hopf() { return from_gauss_code({{1, -2}, {-1, 2}}, {1, 1}); }

std::vector<std::string> corpus() { return {"trefoil", "figure-eight", "5_1", "5_2", "granny", "square"}; }

}  // namespace

TEST_CASE("constructor rejects malformed Gauss data") {
  CHECK_THROWS_AS(LinkDiagram({2}, {{{0, true}, {0, false}}}), ValidationError);
  CHECK_THROWS_AS(LinkDiagram({1}, {{{0, true}, {0, true}}}), ValidationError);
  CHECK_THROWS_AS(LinkDiagram({1}, {{{1, true}, {0, false}}}), ValidationError);
  CHECK_THROWS_AS(LinkDiagram({1, 1}, {{{0, true}, {0, false}}}), ValidationError);
}

TEST_CASE("virtual trefoil Gauss code is not planar") {
  LinkDiagram d({1, 1}, {{{0, true}, {1, true}, {0, false}, {1, false}}});
  CHECK_FALSE(d.is_planar());
  CHECK_THROWS_AS(d.validate_planar(), ValidationError);
  CHECK(catalog_diagram("trefoil").is_planar());
}

TEST_CASE("linking matrix of the positive Hopf link") {
  const IntMatrix m = linking_matrix(positive_hopf());
  CHECK(m == IntMatrix{{0, 1}, {1, 0}});
  CHECK(linking_matrix(positive_hopf().mirror()) == IntMatrix{{0, -1}, {-1, 0}});
  CHECK(linking_matrix(positive_hopf().reversed(1)) == IntMatrix{{0, -1}, {-1, 0}});
}

TEST_CASE("unlink and split union have zero linking") {
  CHECK(linking_matrix(LinkDiagram::unlink(3)) == IntMatrix(3, std::vector<long>(3, 0)));
  const LinkDiagram s = split_union(positive_hopf(), catalog_diagram("trefoil"));
  CHECK(s.component_count() == 3);
  CHECK(s.crossing_count() == 5);
  CHECK(linking_matrix(s) == IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, s.self_writhe(2)}});
}

TEST_CASE("writhe and mirror") {
  for (const auto& name : corpus()) {
    const LinkDiagram d = catalog_diagram(name);
    CHECK(d.mirror().writhe() == -d.writhe());
    CHECK(d.mirror().mirror() == d);
  }
  CHECK(catalog_diagram("trefoil").writhe() == 3);
  CHECK(catalog_diagram("figure-eight").writhe() == 0);
}

TEST_CASE("PD round trip") {
  for (const auto& name : corpus()) {
    const LinkDiagram d = catalog_diagram(name);
    const LinkDiagram e = parse_pd(to_pd(d));
    CHECK(e.crossing_count() == d.crossing_count());
    CHECK(e.writhe() == d.writhe());
    CHECK(to_pd(e) == to_pd(d));
  }
  const LinkDiagram h = parse_pd(to_pd(positive_hopf()));
  CHECK(linking_matrix(h) == linking_matrix(positive_hopf()));
}

TEST_CASE("PD syntax variants and loops") {
  const LinkDiagram a = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  const LinkDiagram b = parse_pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]");
  CHECK(a == b);
  const LinkDiagram u = parse_pd("PD[Loop(1), Loop(2)]");
  CHECK(u.component_count() == 2);
  CHECK(u.crossing_count() == 0);
  CHECK_THROWS_AS(parse_pd("PD[X[1,5,2,4],X[3,1,4,6]"), SyntaxError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,7]]"), ValidationError);
}

TEST_CASE("diagram JSON round trip") {
  for (const auto& name : {"trefoil", "hopf", "granny"}) {
    const LinkDiagram d = catalog_diagram(name);
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK(diagram_to_json(d).at("schema") == "brunnel.diagram/1");
  }
}

TEST_CASE("sublink keeps the listed components") {
  const LinkDiagram b = bing_double(positive_hopf(), 0);
  REQUIRE(b.component_count() == 3);
  const LinkDiagram s = sublink(b, {2});
  CHECK(s.component_count() == 1);
  CHECK(s.crossing_count() == 0);
  CHECK_THROWS_AS(sublink(b, {}), PreconditionError);
  CHECK_THROWS_AS(sublink(b, {0, 0}), PreconditionError);
  CHECK_THROWS_AS(sublink(b, {3}), PreconditionError);
}

TEST_CASE("band sum of split trefoils is the granny knot") {
  const LinkDiagram t = catalog_diagram("trefoil");
  const LinkDiagram g = band_sum(split_union(t, t), 0, 1);
  CHECK(g.component_count() == 1);
  CHECK(g.crossing_count() == 6);
  CHECK(alexander_of_knot(g) == LaurentPolynomial::parse("t^4 - 2*t^3 + 3*t^2 - 2*t + 1"));
}

TEST_CASE("band sum of the Hopf link components gives a knot") {
  const LinkDiagram k = band_sum(positive_hopf(), 0, 1);
  CHECK(k.component_count() == 1);
  CHECK(k.is_planar());
  CHECK_THROWS_AS(band_sum(positive_hopf(), 0, 0), PreconditionError);
  CHECK_THROWS_AS(band_sum(positive_hopf(), 0, 2), PreconditionError);
}

TEST_CASE("simplify removes kinks and never adds crossings") {
  const LinkDiagram kink = from_gauss_code({{1, -1}}, {1});
  CHECK(simplify(kink).crossing_count() == 0);
  for (const auto& name : corpus()) {
    const LinkDiagram d = catalog_diagram(name);
    SimplifyStats stats;
    const LinkDiagram s = simplify(d, &stats);
    CHECK(s.crossing_count() <= d.crossing_count());
    CHECK(s.is_planar());
    const LinkDiagram w = whitehead_double(d, 0, 1);
    CHECK(simplify(w).crossing_count() <= w.crossing_count());
  }
}

TEST_CASE("faces satisfy Euler's formula on connected diagrams") {
  for (const auto& name : corpus()) {
    const LinkDiagram d = catalog_diagram(name);
    const long v = d.crossing_count(), e = 2 * v;
    CHECK(static_cast<long>(d.faces().size()) == e - v + 2);
  }
}
