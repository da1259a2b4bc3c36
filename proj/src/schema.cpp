#include "hdg/check.hpp"
#include "hdg/schema.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace hdg {

int Schema::add_vertex(VertKind k, int crossing) {
    verts.push_back({k, crossing});
    return int(verts.size()) - 1;
}

int Schema::add_edge(EdgeKind k, int tail, int head, int curve, int src_arc, int piece) {
    edges.push_back({k, tail, head, curve, src_arc, piece});
    return int(edges.size()) - 1;
}

int Schema::add_cell(std::vector<SideRef> word) {
    cells.push_back({std::move(word), true});
    return int(cells.size()) - 1;
}

Schema::Occ Schema::find_side(SideRef s) const {
    for (int c = 0; c < int(cells.size()); ++c) {
        if (!cells[c].alive) continue;
        const auto& w = cells[c].word;
        for (int p = 0; p < int(w.size()); ++p)
            if (w[p] == s) return {c, p};
    }
    HDG_CHECK(false, "side not found");
    std::abort();
}

int Schema::corner_vertex(int cell, int pos) const {
    SideRef s = cells[cell].word[pos];
    return s.fwd ? edges[s.edge].tail : edges[s.edge].head;
}

std::pair<int, int> Schema::subdivide(int e, int v) {
    SchemaEdge old = edges[e];
    int e1 = add_edge(old.kind, old.tail, v, old.curve, old.src_arc, old.piece * 2);
    int e2 = add_edge(old.kind, v, old.head, old.curve, old.src_arc, old.piece * 2 + 1);
    for (auto& cell : cells) {
        if (!cell.alive) continue;
        std::vector<SideRef> w;
        w.reserve(cell.word.size() + 1);
        for (SideRef s : cell.word) {
            if (s.edge != e) {
                w.push_back(s);
            } else if (s.fwd) {
                w.push_back({e1, true});
                w.push_back({e2, true});
            } else {
                w.push_back({e2, false});
                w.push_back({e1, false});
            }
        }
        cell.word = std::move(w);
    }
    // old edge goes dead: poison endpoints so stray references trip check()
    edges[e].tail = edges[e].head = -1;
    return {e1, e2};
}

int Schema::cut(int cell, int posA, int posB, EdgeKind kind, int curve, int src_arc, int piece) {
    HDG_CHECK(posA != posB, "cut positions must differ");
    const auto& w = cells[cell].word;
    int n = int(w.size());
    int va = corner_vertex(cell, posA);
    int vb = corner_vertex(cell, posB);
    int e = add_edge(kind, va, vb, curve, src_arc, piece);

    std::vector<SideRef> wa, wb;
    for (int i = posA; i != posB; i = (i + 1) % n) wa.push_back(w[i]);
    wa.push_back({e, false});
    for (int i = posB; i != posA; i = (i + 1) % n) wb.push_back(w[i]);
    wb.push_back({e, true});

    cells[cell].alive = false;
    add_cell(std::move(wa));
    add_cell(std::move(wb));
    return e;
}

void Schema::flip_edge(int e) {
    std::swap(edges[e].tail, edges[e].head);
    for (auto& cell : cells) {
        if (!cell.alive) continue;
        for (auto& s : cell.word)
            if (s.edge == e) s.fwd = !s.fwd;
    }
}

int Schema::alive_cells() const {
    int n = 0;
    for (const auto& c : cells)
        if (c.alive) ++n;
    return n;
}

int Schema::euler_characteristic() const {
    int e = 0;
    for (const auto& ed : edges)
        if (ed.tail >= 0) ++e;
    return int(verts.size()) - e + alive_cells();
}

void Schema::check() const {
    std::map<SideRef, int> occ;
    for (const auto& cell : cells) {
        if (!cell.alive) continue;
        HDG_CHECK(!cell.word.empty(), "empty cell word");
        int n = int(cell.word.size());
        for (int i = 0; i < n; ++i) {
            SideRef s = cell.word[i];
            SideRef p = cell.word[(i + n - 1) % n];
            const SchemaEdge& es = edges[s.edge];
            const SchemaEdge& ep = edges[p.edge];
            HDG_CHECK(es.tail >= 0 && ep.tail >= 0, "dead edge in cell word");
            int start = s.fwd ? es.tail : es.head;
            int prev_end = p.fwd ? ep.head : ep.tail;
            HDG_CHECK(start == prev_end, "cell word corner mismatch");
            occ[s]++;
        }
    }
    for (int e = 0; e < int(edges.size()); ++e) {
        int expected = edges[e].tail >= 0 ? 1 : 0;
        HDG_CHECK((occ[SideRef{e, true}] == expected), "side occurrence count");
        HDG_CHECK((occ[SideRef{e, false}] == expected), "side occurrence count");
    }
}

SideRef Schema::next_boundary(SideRef s) const {
    Occ o = find_side(s);
    while (true) {
        const auto& w = cells[o.cell].word;
        o.pos = (o.pos + 1) % int(w.size());
        SideRef t = w[o.pos];
        if (edges[t.edge].kind != EdgeKind::Aux) return t;
        o = find_side(t.rev());
    }
}

std::vector<int> Schema::component_of_cells() const {
    std::vector<int> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < int(edges.size()); ++e) {
        if (edges[e].tail < 0 || edges[e].kind != EdgeKind::Aux) continue;
        int a = find(find_side({e, true}).cell);
        int b = find(find_side({e, false}).cell);
        parent[find(a)] = find(b);
    }
    std::vector<int> comp(cells.size(), -1);
    int next = 0;
    for (int c = 0; c < int(cells.size()); ++c) {
        if (!cells[c].alive) continue;
        int r = find(c);
        if (comp[r] < 0) comp[r] = next++;
        comp[c] = comp[r];
    }
    return comp;
}

std::vector<Schema::ComponentShape> Schema::component_shapes() const {
    auto comp = component_of_cells();
    int ncomp = 0;
    for (int c = 0; c < int(cells.size()); ++c)
        if (cells[c].alive) ncomp = std::max(ncomp, comp[c] + 1);
    std::vector<ComponentShape> shapes(ncomp);
    for (int c = 0; c < int(cells.size()); ++c)
        if (cells[c].alive) shapes[comp[c]].cells.push_back(c);

    // interior aux vertices and aux edge counts per component
    std::vector<std::vector<int>> incident(verts.size());
    for (int e = 0; e < int(edges.size()); ++e) {
        if (edges[e].tail < 0) continue;
        incident[edges[e].tail].push_back(e);
        if (edges[e].head != edges[e].tail) incident[edges[e].head].push_back(e);
    }
    std::vector<int> aux_edges(ncomp, 0), interior_verts(ncomp, 0);
    for (int e = 0; e < int(edges.size()); ++e) {
        if (edges[e].tail < 0 || edges[e].kind != EdgeKind::Aux) continue;
        aux_edges[comp[find_side({e, true}).cell]]++;
    }
    for (int v = 0; v < int(verts.size()); ++v) {
        if (incident[v].empty()) continue;
        bool all_aux = true;
        for (int e : incident[v])
            if (edges[e].kind != EdgeKind::Aux) all_aux = false;
        if (all_aux) interior_verts[comp[find_side({incident[v][0], true}).cell]]++;
    }

    // boundary circles per component
    std::set<SideRef> seen;
    for (const auto& cell : cells) {
        if (!cell.alive) continue;
        for (SideRef s : cell.word) {
            if (edges[s.edge].kind == EdgeKind::Aux || seen.count(s)) continue;
            std::vector<SideRef> circle;
            SideRef t = s;
            while (!seen.count(t)) {
                seen.insert(t);
                circle.push_back(t);
                t = next_boundary(t);
            }
            shapes[comp[find_side(s).cell]].circles.push_back(std::move(circle));
        }
    }
    for (int k = 0; k < ncomp; ++k)
        shapes[k].chi = interior_verts[k] - aux_edges[k] + int(shapes[k].cells.size());
    return shapes;
}

SideRef DiagramSchema::side_of_dart(const HeegaardDiagram& d, Dart dart) const {
    Dart arc = d.arc_of(dart);
    return SideRef{arc_edge.at(arc.id), dart.is_out()};
}

DiagramSchema build_schema(const HeegaardDiagram& d) {
    DiagramSchema ds;
    Schema& s = ds.s;

    ds.crossing_vertex.resize(d.crossings.size());
    for (const auto& x : d.crossings)
        ds.crossing_vertex[x.id] = s.add_vertex(VertKind::Crossing, x.id);

    for (const auto& c : d.curves) {
        if (c.floating()) {
            int v = s.add_vertex(VertKind::Aux);
            ds.float_vertex[c.id] = v;
            ds.float_edge[c.id] = s.add_edge(EdgeKind::FloatLoop, v, v, c.id);
            continue;
        }
        int n = int(c.sequence.size());
        for (int i = 0; i < n; ++i) {
            Dart out = Dart::make(c.sequence[i],
                                  c.color == Color::Blue ? BlueOut : RedOut);
            int tail = ds.crossing_vertex[c.sequence[i]];
            int head = ds.crossing_vertex[c.sequence[(i + 1) % n]];
            ds.arc_edge[out.id] = s.add_edge(EdgeKind::Arc, tail, head, c.id, out.id);
        }
    }

    auto traces = d.face_traces();
    std::map<int, std::vector<SideRef>> trace_word;  // least dart -> word
    for (const auto& t : traces) {
        std::vector<SideRef> w;
        for (Dart dd : t) w.push_back(ds.side_of_dart(d, dd));
        trace_word[t[0].id] = std::move(w);
    }

    for (const auto& comp : d.components) {
        bool plain_disk = comp.genus == 0 && comp.circles.size() == 1 &&
                          comp.circles[0].kind == CircleRef::Face;
        if (plain_disk) {
            s.add_cell(trace_word.at(comp.circles[0].face_least_dart));
            continue;
        }
        if (comp.circles.empty()) {
            // closed piece (only arises for curve-free diagrams)
            int p = s.add_vertex(VertKind::Aux);
            if (comp.genus == 0) {
                int a = s.add_edge(EdgeKind::Aux, p, p);
                s.add_cell({{a, true}});
                s.add_cell({{a, false}});
            } else {
                std::vector<SideRef> w;
                for (int i = 0; i < comp.genus; ++i) {
                    int a = s.add_edge(EdgeKind::Aux, p, p);
                    int b = s.add_edge(EdgeKind::Aux, p, p);
                    w.insert(w.end(), {{a, true}, {b, true}, {a, false}, {b, false}});
                }
                s.add_cell(std::move(w));
            }
            continue;
        }
        int p = s.add_vertex(VertKind::Aux);
        std::vector<SideRef> w;
        for (int i = 0; i < comp.genus; ++i) {
            int a = s.add_edge(EdgeKind::Aux, p, p);
            int b = s.add_edge(EdgeKind::Aux, p, p);
            w.insert(w.end(), {{a, true}, {b, true}, {a, false}, {b, false}});
        }
        for (const auto& ref : comp.circles) {
            if (ref.kind == CircleRef::Face) {
                const auto& circle = trace_word.at(ref.face_least_dart);
                Dart d0{ref.face_least_dart};
                int foot = ds.crossing_vertex[d0.crossing()];
                int t = s.add_edge(EdgeKind::Aux, p, foot);
                w.push_back({t, true});
                w.insert(w.end(), circle.begin(), circle.end());
                w.push_back({t, false});
            } else {
                int foot = ds.float_vertex.at(ref.float_curve);
                int t = s.add_edge(EdgeKind::Aux, p, foot);
                w.push_back({t, true});
                w.push_back({ds.float_edge.at(ref.float_curve), ref.float_side == Side::Left});
                w.push_back({t, false});
            }
        }
        s.add_cell(std::move(w));
    }

    s.check();
    return ds;
}

int homology_rank_of_curves(const HeegaardDiagram& d, const DiagramSchema& ds,
                            const std::vector<int>& curve_ids) {
    const Schema& s = ds.s;
    std::vector<int> edge_row(s.edges.size(), -1);
    int nrows = 0;
    for (int e = 0; e < int(s.edges.size()); ++e)
        if (s.edges[e].tail >= 0) edge_row[e] = nrows++;

    int ncells = s.alive_cells();
    IntMatrix bounds(nrows, ncells);
    {
        int col = 0;
        for (const auto& cell : s.cells) {
            if (!cell.alive) continue;
            for (SideRef sr : cell.word) bounds.at(edge_row[sr.edge], col) += sr.fwd ? 1 : -1;
            ++col;
        }
    }
    IntMatrix both(nrows, ncells + int(curve_ids.size()));
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncells; ++c) both.at(r, c) = bounds.at(r, c);
    for (size_t k = 0; k < curve_ids.size(); ++k) {
        const Curve& cu = d.curves[curve_ids[k]];
        if (cu.floating()) {
            both.at(edge_row[ds.float_edge.at(cu.id)], ncells + int(k)) = 1;
        } else {
            for (int i = 0; i < int(cu.sequence.size()); ++i) {
                Dart out = Dart::make(cu.sequence[i],
                                      cu.color == Color::Blue ? BlueOut : RedOut);
                both.at(edge_row[ds.arc_edge.at(out.id)], ncells + int(k)) += 1;
            }
        }
    }
    return matrix_rank(both) - matrix_rank(bounds);
}

}  // namespace hdg
