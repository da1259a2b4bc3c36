#include "hdg/check.hpp"
#include "hdg/fixtures.hpp"

#include <map>

#include "hdg/invariants.hpp"

namespace hdg {

HeegaardDiagram connect_sum(const HeegaardDiagram& a, const HeegaardDiagram& b) {
    HeegaardDiagram d;
    d.genus = a.genus + b.genus;
    int curve_off = int(a.curves.size());
    int cross_off = int(a.crossings.size());

    for (const auto& c : a.curves) d.curves.push_back(c);
    for (const auto& c : b.curves) {
        Curve nc = c;
        nc.id += curve_off;
        nc.generator += (c.color == Color::Blue) ? a.curve_count(Color::Blue)
                                                 : a.curve_count(Color::Red);
        for (int& x : nc.sequence) x += cross_off;
        nc.float_component = -1;  // reattached below
        d.curves.push_back(std::move(nc));
    }
    for (const auto& x : a.crossings) d.crossings.push_back(x);
    for (const auto& x : b.crossings) {
        Crossing nx = x;
        nx.id += cross_off;
        nx.blue_curve += curve_off;
        nx.red_curve += curve_off;
        d.crossings.push_back(nx);
    }

    auto shift_ref = [&](const CircleRef& r, bool from_b) {
        if (r.kind == CircleRef::Float)
            return CircleRef::floating(r.float_curve + (from_b ? curve_off : 0), r.float_side);
        if (!from_b) return r;
        Dart old{r.face_least_dart};
        return CircleRef::face(Dart::make(old.crossing() + cross_off, old.selector()).id);
    };

    // glue the least face of a to the least face of b: the two disks become
    // one genus-0 component with both circles on its boundary
    HDG_CHECK(!a.components.empty() && !b.components.empty(), "connect_sum needs components");
    auto pick_disk = [](const HeegaardDiagram& d2) -> const ComplementComponent& {
        for (const auto& c : d2.components)
            if (c.genus == 0 && c.circles.size() == 1 && c.circles[0].kind == CircleRef::Face)
                return c;
        HDG_CHECK(false, "connect_sum requires a disk face in each summand");
        return d2.components.front();
    };
    const ComplementComponent& fa = pick_disk(a);
    const ComplementComponent& fb = pick_disk(b);

    ComplementComponent neck;
    neck.id = 0;
    neck.genus = 0;
    neck.circles.push_back(shift_ref(fa.circles[0], false));
    neck.circles.push_back(shift_ref(fb.circles[0], true));
    d.components.push_back(std::move(neck));
    for (const auto& c : a.components) {
        if (c.id == fa.id) continue;
        ComplementComponent nc;
        nc.id = int(d.components.size());
        nc.genus = c.genus;
        for (const auto& r : c.circles) nc.circles.push_back(shift_ref(r, false));
        d.components.push_back(std::move(nc));
    }
    for (const auto& c : b.components) {
        if (c.id == fb.id) continue;
        ComplementComponent nc;
        nc.id = int(d.components.size());
        nc.genus = c.genus;
        for (const auto& r : c.circles) nc.circles.push_back(shift_ref(r, true));
        d.components.push_back(std::move(nc));
    }
    for (auto& c : d.curves)
        if (c.floating())
            c.float_component = d.component_of_circle(CircleRef::floating(c.id, Side::Left));
    return canonicalize(d);
}

HeegaardDiagram s2xs1_diagram() {
    HeegaardDiagram d;
    d.genus = 1;
    d.curves.push_back({0, Color::Blue, 1, {}, 0});
    d.curves.push_back({1, Color::Red, 1, {}, 0});
    ComplementComponent a;  // annulus between L sides
    a.id = 0;
    a.circles = {CircleRef::floating(0, Side::Left), CircleRef::floating(1, Side::Left)};
    ComplementComponent b;  // annulus between R sides
    b.id = 1;
    b.circles = {CircleRef::floating(0, Side::Right), CircleRef::floating(1, Side::Right)};
    d.components = {a, b};
    return d;
}

HeegaardDiagram stabilize(const HeegaardDiagram& d) {
    return connect_sum(d, build_lens(1, 0));
}

}  // namespace hdg
