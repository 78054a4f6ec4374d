#include "doctest.h"
#include "khov/builder.hpp"
#include "khov/catalog.hpp"
#include "khov/diagram.hpp"
#include "khov/error.hpp"

using namespace khov;

namespace {

ErrorCode code_of(const char* pd) {
  try {
    parse_pd(pd);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << pd);
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("parse the smallest diagrams") {
  LinkDiagram o = parse_pd("O(1)");
  CHECK(o.num_crossings() == 0);
  CHECK(o.free_circles() == 1);
  CHECK(o.num_components() == 1);

  LinkDiagram k = parse_pd("X(1,1,2,2)");
  CHECK(k.num_crossings() == 1);
  CHECK(k.num_components() == 1);
  CHECK(k.sign(0) == 1);
  CHECK(parse_pd("X(1,2,2,1)").sign(0) == -1);
  CHECK(parse_pd("").num_components() == 0);
}

TEST_CASE("the standard trefoil PD is the negative trefoil") {
  LinkDiagram t = parse_pd(" X(1,4,2,5); X(3,6,4,1); X(5,2,6,3) ");
  CHECK(t.num_crossings() == 3);
  CHECK(t.c_minus() == 3);
  CHECK(t.writhe() == -3);
  CHECK(t.num_faces() == 5);
  CHECK(t.num_pieces() == 1);
  CHECK(catalog("trefoil").writhe() == -3);
  CHECK(catalog("trefoil+").writhe() == 3);
}

TEST_CASE("parse errors") {
  CHECK(code_of("X(1,4,2,3)") == ErrorCode::DanglingEdge);
  CHECK(code_of("X(1,1,1,2)") == ErrorCode::DuplicateEdge);
  CHECK(code_of("X(1,2,3") == ErrorCode::ParseError);
  CHECK(code_of("Y(1)") == ErrorCode::ParseError);
  CHECK(code_of("X(1,1,3,3)") == ErrorCode::BadNumbering);
  CHECK(code_of("O(1);O(1)") == ErrorCode::DuplicateEdge);
  // Under strand direction 1 -> 3 contradicts consecutive numbering.
  CHECK(code_of("X(1,5,3,6);X(2,6,4,1);X(4,2,5,3)") == ErrorCode::BadNumbering);
}

TEST_CASE("non-planar PD is rejected") {
  // Both strands close up through opposite slots: a torus picture.
  CHECK(code_of("X(1,2,1,2)") == ErrorCode::NonPlanar);
  CHECK(code_of("X(1,1,2,3);X(2,4,3,4)") == ErrorCode::NonPlanar);
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(catalog("hopf+"), 0, 1) == 1);
  CHECK(linking_number(catalog("hopf-"), 0, 1) == -1);
  CHECK(linking_number(catalog("hopf+"), 1, 0) == 1);
  CHECK(linking_number(catalog("unlink(2)"), 0, 1) == 0);
  CHECK(linking_number(mirror(catalog("hopf+")), 0, 1) == -1);
  CHECK(linking_number(catalog("torus_link(2,4)"), 0, 1) == -2);
  CHECK_THROWS_AS(linking_number(catalog("hopf+"), 0, 0), Error);
  CHECK_THROWS_AS(linking_number(catalog("hopf+"), 0, 2), Error);
}

TEST_CASE("linking number invariant under relabeling") {
  LinkDiagram h = catalog("hopf+");
  LinkDiagram again = parse_pd(h.to_pd());
  CHECK(linking_number(again, 0, 1) == linking_number(h, 0, 1));
  LinkDiagram l = disjoint_union(catalog("unknot"), h);
  CHECK(linking_number(l, 1, 2) == 1);
  CHECK(linking_number(l, 0, 1) == 0);
}

TEST_CASE("Euler characteristic per piece") {
  for (const auto& name : standard_catalog()) {
    LinkDiagram d = catalog(name);
    std::vector<int> faces(d.num_pieces(), 0), verts(d.num_pieces(), 0);
    for (int f = 0; f < d.num_faces(); ++f) ++faces[d.piece_of_face(f)];
    for (int x = 0; x < d.num_crossings(); ++x) ++verts[d.piece_of_crossing(x)];
    for (int p = 0; p < d.num_pieces(); ++p) CHECK(verts[p] - 2 * verts[p] + faces[p] == 2);
    CHECK(d.c_plus() + d.c_minus() == d.num_crossings());
  }
}

TEST_CASE("alternation") {
  CHECK(is_alternating(catalog("trefoil")));
  CHECK(is_alternating(catalog("figure_eight")));
  CHECK(is_alternating(catalog("unknot")));
  CHECK_FALSE(is_alternating(cable(catalog("trefoil"), {2})));
  CHECK_FALSE(is_alternating(catalog("trefoil_r2")));
}

TEST_CASE("framing coefficient equals writhe plus signed points") {
  LinkDiagram t = catalog("torus_link(2,4)");
  FramingData f = framing(t);
  CHECK(f.total == t.writhe());
  FramingData g = framing(t, {1, -3});
  CHECK(g.total == t.writhe() - 2);
  CHECK(g.component_framing[0] == 1);
}

TEST_CASE("PD round trip preserves orientation") {
  for (const auto& name : standard_catalog()) {
    LinkDiagram d = catalog(name);
    LinkDiagram e = parse_pd(d.to_pd());
    CHECK(e == d);
    for (int x = 0; x < d.num_crossings(); ++x) CHECK(e.sign(x) == d.sign(x));
  }
}

TEST_CASE("canonical code ignores relabeling") {
  LinkDiagram a = parse_pd("X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)");
  LinkDiagram b = parse_pd("X(3,6,4,1);X(5,2,6,3);X(1,4,2,5)");
  CHECK(same_diagram(a, b));
  CHECK_FALSE(same_diagram(a, mirror(a)));
}
