#include <doctest.h>

#include "hdg/diagram.hpp"
#include "hdg/invariants.hpp"

using namespace hdg;

TEST_CASE("build_lens structure") {
    for (int p = 1; p <= 12; ++p)
        for (int q = 0; q < std::max(p, 1); ++q) {
            if (gcd_int(p, q) != 1) continue;
            HeegaardDiagram d = build_lens(p, q);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(validate(d).ok());
            CHECK(int(d.crossings.size()) == p);
            auto f = smith_normal_form(algebraic_intersection_matrix(d));
            CHECK(f.factors == std::vector<Int>{p});
        }
    CHECK_THROWS_AS(build_lens(4, 2), LensError);
    CHECK_THROWS_AS(build_lens(0, 1), LensError);
}

TEST_CASE("recognize_lens round trip") {
    for (int p = 1; p <= 12; ++p)
        for (int q = 0; q < std::max(p, 1); ++q) {
            if (gcd_int(p, q) != 1) continue;
            LensParams got = recognize_lens(build_lens(p, q));
            CAPTURE(p);
            CAPTURE(q);
            CHECK(lens_equivalent(got, LensParams{p, q}));
        }
}

TEST_CASE("recognize_lens canonical cases and errors") {
    CHECK(recognize_lens(build_lens(5, 2)) == normalize_lens(5, 2));
    CHECK(recognize_lens(build_lens(1, 0)) == LensParams{1, 0});

    HeegaardDiagram genus2;
    genus2.genus = 2;
    CHECK_THROWS_AS(recognize_lens(genus2), LensError);

    HeegaardDiagram no_crossings;
    no_crossings.genus = 1;
    CHECK_THROWS_AS(recognize_lens(no_crossings), LensError);
}

TEST_CASE("|H1| equals p for genus one") {
    for (int p = 1; p <= 12; ++p)
        for (int q = 0; q < std::max(p, 1); ++q) {
            if (gcd_int(p, q) != 1) continue;
            auto f = smith_normal_form(algebraic_intersection_matrix(build_lens(p, q)));
            CHECK(homology_order(f) == p);
        }
}
