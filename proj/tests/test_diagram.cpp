#include <doctest.h>

#include <set>

#include "hdg/diagram.hpp"
#include "hdg/fixtures.hpp"
#include "hdg/invariants.hpp"
#include "hdg/schema.hpp"

using namespace hdg;

TEST_CASE("one-crossing torus diagram") {
    HeegaardDiagram d = build_lens(1, 0);
    CHECK(d.genus == 1);
    CHECK(d.crossings.size() == 1);
    auto traces = d.face_traces();
    REQUIRE(traces.size() == 1);
    CHECK(traces[0].size() == 4);  // one square face
    CHECK(validate(d).ok());
    CHECK(euler_characteristic(d) == 0);
    CHECK(is_filling(d));
    CHECK(!has_bigon(d));
}

TEST_CASE("L(5,2): five quadrilateral faces") {
    HeegaardDiagram d = build_lens(5, 2);
    CHECK(validate(d).ok());
    auto comps = complement_components(d);
    CHECK(comps.size() == 5);
    for (const auto& c : comps) {
        CHECK(c.is_disk);
        CHECK(c.side_count == 4);
    }
    IntMatrix m = algebraic_intersection_matrix(d);
    REQUIRE(m.rows() == 1);
    Int e = m.at(0, 0);
    CHECK((e == 5 || e == -5));
}

TEST_CASE("face traces partition the darts") {
    for (auto [p, q] : std::initializer_list<std::pair<int, int>>{{1, 0}, {5, 2}, {7, 3}, {12, 5}}) {
        HeegaardDiagram d = build_lens(p, q);
        auto traces = d.face_traces();
        std::set<int> seen;
        size_t total = 0;
        for (const auto& t : traces) {
            total += t.size();
            for (Dart dd : t) seen.insert(dd.id);
        }
        CHECK(total == size_t(d.dart_count()));
        CHECK(seen.size() == size_t(d.dart_count()));
    }
}

TEST_CASE("corrupted sign breaks the euler identity") {
    HeegaardDiagram d = build_lens(5, 2);
    d.crossings[2].sign = -d.crossings[2].sign;
    // the rotation changed, so the recorded component table no longer
    // matches the face traces
    auto rep = validate(d);
    CHECK(!rep.ok());
}

TEST_CASE("S2xS1 diagram: floating curves, zero matrix") {
    HeegaardDiagram d = s2xs1_diagram();
    CHECK(validate(d).ok());
    CHECK(euler_characteristic(d) == 0);
    CHECK(!is_filling(d));
    IntMatrix m = algebraic_intersection_matrix(d);
    CHECK(m.at(0, 0) == 0);
    CHECK(curve_homology_rank(d, Color::Blue) == 1);
    CHECK(curve_homology_rank(d, Color::Red) == 1);
}

TEST_CASE("connect sum of two L(2,1): neck component, genus sums") {
    HeegaardDiagram d = connect_sum(build_lens(2, 1), build_lens(2, 1));
    CHECK(d.genus == 2);
    CHECK(validate(d).ok());
    int non_disk = 0;
    for (const auto& c : complement_components(d)) {
        if (c.is_disk) continue;
        ++non_disk;
        CHECK(c.genus == 0);
        CHECK(c.circles.size() == 2);
    }
    CHECK(non_disk == 1);
    auto f = smith_normal_form(algebraic_intersection_matrix(d));
    CHECK(f.factors == std::vector<Int>{2, 2});
}

TEST_CASE("parallel blue curves on the torus are homologous") {
    // two parallel (1,0) blues each crossing one (0,1) red once; complement
    // is two squares. Not a valid Heegaard diagram (curve counts), but
    // curve_homology_rank runs pre-validation.
    HeegaardDiagram d;
    d.genus = 1;
    d.curves = {
        {0, Color::Blue, 1, {0}, -1},
        {1, Color::Blue, 2, {1}, -1},
        {2, Color::Red, 1, {0, 1}, -1},
    };
    d.crossings = {
        {0, 0, 0, 2, 0, +1},
        {1, 1, 0, 2, 1, +1},
    };
    auto traces = d.face_traces();
    REQUIRE(traces.size() == 2);
    for (const auto& t : traces) {
        ComplementComponent c;
        c.id = int(d.components.size());
        c.circles.push_back(CircleRef::face(t[0].id));
        d.components.push_back(c);
    }
    CHECK(euler_characteristic(d) == 0);
    CHECK(curve_homology_rank(d, Color::Blue) == 1);
    CHECK(curve_homology_rank(d, Color::Red) == 1);
}

TEST_CASE("separating blue curve is null-homologous") {
    // genus 2: a one-crossing torus piece (b0 x r0), a separating floating
    // blue b1, and a floating red r1 running over the far handle. The b1
    // class is zero, so the blue color class has rank 1 < 2.
    HeegaardDiagram d;
    d.genus = 2;
    d.curves = {
        {0, Color::Blue, 1, {0}, -1},
        {1, Color::Blue, 2, {}, 0},
        {2, Color::Red, 1, {0}, -1},
        {3, Color::Red, 2, {}, 1},
    };
    d.crossings = {{0, 0, 0, 2, 0, +1}};
    auto traces = d.face_traces();
    REQUIRE(traces.size() == 1);
    ComplementComponent annulus;  // between the square face and b1
    annulus.id = 0;
    annulus.circles = {CircleRef::face(traces[0][0].id), CircleRef::floating(1, Side::Left)};
    ComplementComponent pants;  // other side of b1, carrying r1 over a handle
    pants.id = 1;
    pants.circles = {CircleRef::floating(1, Side::Right), CircleRef::floating(3, Side::Left),
                     CircleRef::floating(3, Side::Right)};
    d.components = {annulus, pants};

    CHECK(euler_characteristic(d) == -2);
    CHECK(curve_homology_rank(d, Color::Blue) == 1);
    CHECK(curve_homology_rank(d, Color::Red) == 2);
    auto rep = validate(d);
    CHECK(rep.has("rank-deficient-blue"));
    CHECK(!rep.has("rank-deficient-red"));
}

TEST_CASE("canonicalize is stable under relabeling") {
    HeegaardDiagram d = connect_sum(build_lens(3, 1), build_lens(2, 1));
    HeegaardDiagram c1 = canonicalize(d);
    // relabel crossings by a rotation of one curve and re-canonicalize
    HeegaardDiagram shuffled = d;
    // swap two crossing ids (0 <-> last) consistently
    int last = int(d.crossings.size()) - 1;
    for (auto& cu : shuffled.curves)
        for (int& x : cu.sequence) x = x == 0 ? last : (x == last ? 0 : x);
    std::swap(shuffled.crossings[0], shuffled.crossings[last]);
    shuffled.crossings[0].id = 0;
    shuffled.crossings[last].id = last;
    // rebuild component refs from traces (disk faces only here is not true;
    // use canonicalize's own rebuild by reusing the existing components'
    // structure): adjust face refs
    for (auto& comp : shuffled.components)
        for (auto& ref : comp.circles)
            if (ref.kind == CircleRef::Face) {
                Dart old{ref.face_least_dart};
                int c = old.crossing() == 0 ? last : (old.crossing() == last ? 0 : old.crossing());
                Dart moved = Dart::make(c, old.selector());
                // recompute least dart of the trace containing moved
                Dart cur = moved, least = moved;
                do {
                    cur = shuffled.face_next(cur);
                    least = std::min(least, cur);
                } while (cur != moved);
                ref = CircleRef::face(least.id);
            }
    HeegaardDiagram c2 = canonicalize(shuffled);
    CHECK(c1 == c2);
}
