#pragma once

// Internal surgery engine shared by the move operations and the dual-path
// machinery. Not part of the public API.

#include <map>
#include <vector>

#include "hdg/check.hpp"
#include "hdg/diagram.hpp"
#include "hdg/schema.hpp"

namespace hdg::surgery {

/// A point strictly inside a schema edge, ordered along the edge from tail
/// to head by its doubled station. Transverse bookkeeping positions sit at
/// even stations; freshly inserted offsets at odd ones.
struct Point {
    int edge = -1;  // original schema edge id
    int dstation = 0;
    auto operator<=>(const Point&) const = default;
};

class Engine {
public:
    explicit Engine(const HeegaardDiagram& d) : d_(d), ds_(build_schema(d)) {}

    const HeegaardDiagram& diagram() const { return d_; }
    Schema& schema() { return ds_.s; }
    const Schema& schema() const { return ds_.s; }
    const DiagramSchema& dschema() const { return ds_; }

    int arc_edge(int out_dart) const { return ds_.arc_edge.at(out_dart); }
    int float_loop(int curve) const { return ds_.float_edge.at(curve); }

    struct Pieces {
        std::vector<int> stations;  // sorted doubled stations of cut points
        std::vector<int> verts;     // vertex per cut point
        std::vector<int> edges;     // stations.size() + 1 pieces, tail to head
    };
    const Pieces& pieces(int orig_edge);

    /// Subdivision point; idempotent per (edge, dstation). Returns its vertex.
    int ensure_point(Point p);

    /// The piece edge a station interval falls into, for an uncut station.
    int piece_containing(int orig_edge, int dstation);

    struct Corner {
        int cell = -1;
        int pos = -1;
    };
    /// The corner of point p seen from the given side of its edge.
    /// Side::Left is the cell walking the edge forward.
    Corner corner_at(Point p, Side side);

    struct Via {
        Point at;
        Side enter_from;  // side the chord comes from when crossing
    };
    /// Lay a transverse chord chain from `from` (leaving into side sf) to
    /// `to` (arriving on side st), passing through the via points in order.
    /// Consecutive points not in a common cell are routed across Aux edges
    /// by shortest path with deterministic ties. Returns the chord edges in
    /// order; chords are directed along the chain.
    std::vector<int> lay_chain(Point from, Side sf, Point to, Side st, std::vector<Via> via,
                               EdgeKind kind, int curve);

    /// One cut from `from` leaving into side sf to `to` arriving from side
    /// st, inserting Aux waypoints as needed. Appends chord edges.
    void lay_step(Point from, Side sf, Point to, Side st, EdgeKind kind, int curve,
                  std::vector<int>& chords);

private:
    const HeegaardDiagram& d_;
    DiagramSchema ds_;
    std::map<int, Pieces> pieces_;
    int next_fresh_station_ = 1;  // odd stations for generated waypoints

public:
    int fresh_station() { return 2 * (next_fresh_station_++) + 1; }
};

}  // namespace hdg::surgery
