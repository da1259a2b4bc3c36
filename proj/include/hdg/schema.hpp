#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hdg/diagram.hpp"

namespace hdg {

// Internal surface engine used by the move operations and path machinery.
//
// The splitting surface is maintained as an oriented polygonal schema: a set
// of disk cells, each with a cyclic boundary word of directed edges, such
// that every directed edge occurs exactly once over all cell words. Diagram
// faces are single cells; a non-disk complement component of genus h with b
// boundary circles is modeled by one polygon whose word is
//   [a1,b1]...[ah,bh] t1 w1 t1^-1 ... tb wb tb^-1
// with aux loops a,b at an interior base vertex, aux connectors t, and the
// boundary circle words w. Because every cell is a disk, all surgery reduces
// to subdividing edges, cutting cells along chords, and retyping edges:
// deleting a curve segment is a retype to Aux, never a cell merge.

enum class EdgeKind : uint8_t { Arc, FloatLoop, Aux };
enum class VertKind : uint8_t { Crossing, Aux };

struct SchemaVertex {
    VertKind kind = VertKind::Aux;
    int crossing = -1;  // source crossing id for Crossing kind
};

struct SchemaEdge {
    EdgeKind kind = EdgeKind::Aux;
    int tail = -1;
    int head = -1;
    int curve = -1;    // owning curve for Arc / FloatLoop
    int src_arc = -1;  // out-dart id of the source diagram arc this is a piece of
    int piece = 0;     // order of the piece along the source arc (subdivision)
};

struct SideRef {
    int edge = -1;
    bool fwd = true;
    SideRef rev() const { return SideRef{edge, !fwd}; }
    auto operator<=>(const SideRef&) const = default;
};

struct SchemaCell {
    std::vector<SideRef> word;  // positively oriented boundary
    bool alive = true;
};

class Schema {
public:
    std::vector<SchemaVertex> verts;
    std::vector<SchemaEdge> edges;
    std::vector<SchemaCell> cells;

    int add_vertex(VertKind k, int crossing = -1);
    int add_edge(EdgeKind k, int tail, int head, int curve = -1, int src_arc = -1, int piece = 0);
    int add_cell(std::vector<SideRef> word);

    struct Occ {
        int cell = -1;
        int pos = -1;
    };
    /// Locate the unique occurrence of a directed side. Aborts if missing.
    Occ find_side(SideRef s) const;

    /// Vertex at the corner preceding word[pos] of a cell.
    int corner_vertex(int cell, int pos) const;

    /// Split edge e at a new vertex v; returns the two pieces (tail side,
    /// head side). Cell words are updated in place.
    std::pair<int, int> subdivide(int e, int v);

    /// Cut a cell along a chord between the corners before posA and posB.
    /// The chord becomes a new edge directed from corner(posA) to
    /// corner(posB). Replaces the cell with two cells; returns the edge id.
    int cut(int cell, int posA, int posB, EdgeKind kind, int curve = -1, int src_arc = -1,
            int piece = 0);

    void retype_aux(int e) { edges[e].kind = EdgeKind::Aux; }

    /// Reverse an edge's direction, updating every word occurrence.
    void flip_edge(int e);

    int alive_cells() const;
    int euler_characteristic() const;

    /// Invariant check: each directed side occurs exactly once, endpoints
    /// consistent around every cell. Aborts on violation.
    void check() const;

    /// Boundary walk step for component circles: the next non-Aux side after
    /// s, crossing Aux edges transparently.
    SideRef next_boundary(SideRef s) const;

    /// Groups cells into components across Aux edges. Returns for each cell
    /// a component index (dense, in first-seen order).
    std::vector<int> component_of_cells() const;

    struct ComponentShape {
        std::vector<int> cells;
        int chi = 0;  // Euler characteristic of the compact piece
        std::vector<std::vector<SideRef>> circles;  // boundary circles as side walks
        int genus() const { return (2 - chi - int(circles.size())) / 2; }
    };
    std::vector<ComponentShape> component_shapes() const;
};

/// Canonical schema of a diagram plus the bookkeeping that ties schema
/// objects back to diagram objects.
struct DiagramSchema {
    Schema s;
    std::vector<int> crossing_vertex;      // crossing id -> vertex
    std::map<int, int> arc_edge;           // arc out-dart id -> edge
    std::map<int, int> float_edge;         // float curve id -> loop edge
    std::map<int, int> float_vertex;       // float curve id -> aux vertex

    /// Directed side corresponding to a dart: the arc of d traversed with
    /// the dart's face on the left.
    SideRef side_of_dart(const HeegaardDiagram& d, Dart dart) const;
};

/// Build the canonical schema of a structurally valid diagram. Face traces
/// become cells; component annotations become canonical polygons.
DiagramSchema build_schema(const HeegaardDiagram& d);

/// H1 rank of the span of the given curve cycles in the surface described
/// by the schema (exact integer rank).
int homology_rank_of_curves(const HeegaardDiagram& d, const DiagramSchema& ds,
                            const std::vector<int>& curve_ids);

}  // namespace hdg
