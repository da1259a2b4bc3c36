#include "hdg/check.hpp"
#include "hdg/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hdg/schema.hpp"

namespace hdg {

int HeegaardDiagram::curve_count(Color c) const {
    int n = 0;
    for (const auto& cu : curves)
        if (cu.color == c) ++n;
    return n;
}

Dart HeegaardDiagram::reverse(Dart d) const {
    const Crossing& x = crossings[d.crossing()];
    bool blue = d.color() == Color::Blue;
    const Curve& c = curves[blue ? x.blue_curve : x.red_curve];
    int pos = blue ? x.blue_pos : x.red_pos;
    int n = int(c.sequence.size());
    if (d.is_out()) {
        int next = c.sequence[(pos + 1) % n];
        const Crossing& y = crossings[next];
        return Dart::make(next, blue ? BlueIn : RedIn);
    }
    int prev = c.sequence[(pos + n - 1) % n];
    return Dart::make(prev, blue ? BlueOut : RedOut);
}

Dart HeegaardDiagram::rotate_ccw(Dart d) const {
    static const Selector pos_cycle[4] = {RedOut, BlueIn, RedIn, BlueOut};  // next after bo,ro,bi,ri
    static const Selector neg_cycle[4] = {RedIn, BlueOut, RedOut, BlueIn};
    const Crossing& x = crossings[d.crossing()];
    Selector s = d.selector();
    return Dart::make(d.crossing(), x.sign > 0 ? pos_cycle[s] : neg_cycle[s]);
}

Dart HeegaardDiagram::rotate_cw(Dart d) const {
    static const Selector pos_cycle[4] = {RedIn, BlueOut, RedOut, BlueIn};
    static const Selector neg_cycle[4] = {RedOut, BlueIn, RedIn, BlueOut};
    const Crossing& x = crossings[d.crossing()];
    Selector s = d.selector();
    return Dart::make(d.crossing(), x.sign > 0 ? pos_cycle[s] : neg_cycle[s]);
}

int HeegaardDiagram::curve_of_dart(Dart d) const {
    const Crossing& x = crossings[d.crossing()];
    return d.color() == Color::Blue ? x.blue_curve : x.red_curve;
}

std::vector<std::vector<Dart>> HeegaardDiagram::face_traces() const {
    int n = dart_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Dart>> traces;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<Dart> trace;
        Dart d{i};
        while (!seen[d.id]) {
            seen[d.id] = true;
            trace.push_back(d);
            d = face_next(d);
        }
        // started at the least unseen dart, so trace[0] is the least dart
        traces.push_back(std::move(trace));
    }
    return traces;
}

int HeegaardDiagram::component_of_circle(const CircleRef& ref) const {
    for (const auto& c : components)
        for (const auto& r : c.circles)
            if (r == ref) return c.id;
    return -1;
}

bool HeegaardDiagram::operator==(const HeegaardDiagram& o) const {
    if (genus != o.genus || curves.size() != o.curves.size() ||
        crossings.size() != o.crossings.size() || components.size() != o.components.size())
        return false;
    for (size_t i = 0; i < curves.size(); ++i) {
        const Curve &a = curves[i], &b = o.curves[i];
        if (a.id != b.id || a.color != b.color || a.generator != b.generator ||
            a.sequence != b.sequence || a.float_component != b.float_component)
            return false;
    }
    for (size_t i = 0; i < crossings.size(); ++i) {
        const Crossing &a = crossings[i], &b = o.crossings[i];
        if (a.id != b.id || a.blue_curve != b.blue_curve || a.blue_pos != b.blue_pos ||
            a.red_curve != b.red_curve || a.red_pos != b.red_pos || a.sign != b.sign)
            return false;
    }
    for (size_t i = 0; i < components.size(); ++i) {
        const ComplementComponent &a = components[i], &b = o.components[i];
        if (a.id != b.id || a.genus != b.genus || a.circles != b.circles) return false;
    }
    return true;
}

bool ValidationReport::has(const std::string& code) const {
    for (const auto& i : issues)
        if (i.code == code) return true;
    return false;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& i : issues) {
        os << i.code;
        if (!i.detail.empty()) os << ": " << i.detail;
        os << "\n";
    }
    return os.str();
}

namespace {

void structural_issues(const HeegaardDiagram& d, ValidationReport& rep) {
    auto bad = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
    };

    for (size_t i = 0; i < d.curves.size(); ++i)
        if (d.curves[i].id != int(i)) bad("curve-id-order", "curve ids must be 0..n-1 in order");
    for (size_t i = 0; i < d.crossings.size(); ++i)
        if (d.crossings[i].id != int(i)) bad("crossing-id-order", "crossing ids must be 0..n-1 in order");
    for (size_t i = 0; i < d.components.size(); ++i)
        if (d.components[i].id != int(i)) bad("component-id-order", "component ids must be 0..n-1 in order");
    if (!rep.ok()) return;

    // slot tables: each (curve, position) referenced by exactly one crossing
    std::map<std::pair<int, int>, int> slot_use;
    for (const auto& x : d.crossings) {
        if (x.sign != 1 && x.sign != -1) bad("bad-sign", "crossing " + std::to_string(x.id));
        for (int side = 0; side < 2; ++side) {
            int cu = side == 0 ? x.blue_curve : x.red_curve;
            int pos = side == 0 ? x.blue_pos : x.red_pos;
            Color want = side == 0 ? Color::Blue : Color::Red;
            if (cu < 0 || cu >= int(d.curves.size())) {
                bad("bad-curve-ref", "crossing " + std::to_string(x.id));
                continue;
            }
            if (d.curves[cu].color != want) {
                bad("monochromatic-crossing", "crossing " + std::to_string(x.id) + " " +
                                                  color_name(want) + " ref is " +
                                                  color_name(d.curves[cu].color));
                continue;
            }
            if (pos < 0 || pos >= int(d.curves[cu].sequence.size())) {
                bad("bad-slot", "crossing " + std::to_string(x.id));
                continue;
            }
            if (d.curves[cu].sequence[pos] != x.id) {
                bad("slot-mismatch", "crossing " + std::to_string(x.id) + " vs curve " +
                                         std::to_string(cu) + " slot " + std::to_string(pos));
                continue;
            }
            if (!slot_use.emplace(std::make_pair(cu, pos), x.id).second)
                bad("slot-double-use", "curve " + std::to_string(cu) + " slot " + std::to_string(pos));
        }
    }
    for (const auto& c : d.curves)
        for (int pos = 0; pos < int(c.sequence.size()); ++pos) {
            int x = c.sequence[pos];
            if (x < 0 || x >= int(d.crossings.size())) {
                bad("bad-crossing-ref", "curve " + std::to_string(c.id));
                continue;
            }
            if (!slot_use.count({c.id, pos}))
                bad("unreferenced-slot", "curve " + std::to_string(c.id) + " slot " + std::to_string(pos));
        }
}

void component_partition_issues(const HeegaardDiagram& d, ValidationReport& rep) {
    auto bad = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
    };
    auto traces = d.face_traces();
    std::set<int> trace_ids;
    for (const auto& t : traces) trace_ids.insert(t[0].id);

    std::map<CircleRef, int> circle_use;
    for (const auto& comp : d.components) {
        if (comp.genus < 0) bad("negative-genus", "component " + std::to_string(comp.id));
        for (const auto& ref : comp.circles) {
            if (!circle_use.emplace(ref, comp.id).second)
                bad("circle-double-use", "component " + std::to_string(comp.id));
            if (ref.kind == CircleRef::Face) {
                if (!trace_ids.count(ref.face_least_dart))
                    bad("unknown-face-circle",
                        "component " + std::to_string(comp.id) + " dart " +
                            std::to_string(ref.face_least_dart));
            } else {
                if (ref.float_curve < 0 || ref.float_curve >= int(d.curves.size()) ||
                    !d.curves[ref.float_curve].floating())
                    bad("bad-float-circle", "component " + std::to_string(comp.id));
            }
        }
    }
    for (int t : trace_ids)
        if (!circle_use.count(CircleRef::face(t)))
            bad("unassigned-face", "face " + std::to_string(t));
    for (const auto& c : d.curves)
        if (c.floating())
            for (Side s : {Side::Left, Side::Right})
                if (!circle_use.count(CircleRef::floating(c.id, s)))
                    bad("unassigned-float-side", "curve " + std::to_string(c.id));
}

}  // namespace

bool structurally_valid(const HeegaardDiagram& d) {
    ValidationReport rep;
    structural_issues(d, rep);
    if (!rep.ok()) return false;
    component_partition_issues(d, rep);
    return rep.ok();
}

ValidationReport validate(const HeegaardDiagram& d) {
    ValidationReport rep;
    structural_issues(d, rep);
    if (!rep.ok()) return rep;
    component_partition_issues(d, rep);
    if (!rep.ok()) return rep;

    auto bad = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
    };

    for (Color color : {Color::Blue, Color::Red}) {
        int n = d.curve_count(color);
        if (n != d.genus)
            bad(std::string("wrong-curve-count-") + color_name(color),
                "expected " + std::to_string(d.genus) + " got " + std::to_string(n));
        std::set<int> gens;
        for (const auto& c : d.curves)
            if (c.color == color) gens.insert(c.generator);
        bool perm = int(gens.size()) == n && (n == 0 || (*gens.begin() == 1 && *gens.rbegin() == n));
        if (n == d.genus && !perm)
            bad(std::string("bad-generator-indexing-") + color_name(color),
                "generator indices must be a permutation of 1..g");
    }

    if (euler_characteristic(d) != 2 - 2 * d.genus)
        bad("euler-characteristic-mismatch",
            "got " + std::to_string(euler_characteristic(d)) + " expected " +
                std::to_string(2 - 2 * d.genus));

    if (rep.ok()) {
        for (Color color : {Color::Blue, Color::Red}) {
            int r = curve_homology_rank(d, color);
            if (r != d.genus)
                bad(std::string("rank-deficient-") + color_name(color),
                    "rank " + std::to_string(r) + " < genus " + std::to_string(d.genus));
        }
    }
    return rep;
}

std::vector<ComponentInfo> complement_components(const HeegaardDiagram& d) {
    auto traces = d.face_traces();
    std::map<int, int> trace_len;
    for (const auto& t : traces) trace_len[t[0].id] = int(t.size());

    std::vector<ComponentInfo> out;
    for (const auto& comp : d.components) {
        ComponentInfo info;
        info.id = comp.id;
        info.genus = comp.genus;
        info.circles = comp.circles;
        info.is_disk = comp.genus == 0 && comp.circles.size() == 1 &&
                       comp.circles[0].kind == CircleRef::Face;
        info.side_count = info.is_disk ? trace_len.at(comp.circles[0].face_least_dart) : 0;
        info.is_bigon = info.is_disk && info.side_count == 2;
        out.push_back(std::move(info));
    }
    return out;
}

bool is_filling(const HeegaardDiagram& d) {
    for (const auto& c : complement_components(d))
        if (!c.is_disk) return false;
    return true;
}

bool has_bigon(const HeegaardDiagram& d) {
    for (const auto& c : complement_components(d))
        if (c.is_bigon) return true;
    return false;
}

IntMatrix algebraic_intersection_matrix(const HeegaardDiagram& d) {
    IntMatrix m(d.genus, d.genus);
    for (const auto& x : d.crossings) {
        int i = d.curves[x.blue_curve].generator - 1;
        int j = d.curves[x.red_curve].generator - 1;
        m.at(i, j) += x.sign;
    }
    return m;
}

int curve_homology_rank(const HeegaardDiagram& d, Color color) {
    DiagramSchema ds = build_schema(d);
    std::vector<int> ids;
    for (const auto& c : d.curves)
        if (c.color == color) ids.push_back(c.id);
    return homology_rank_of_curves(d, ds, ids);
}

int euler_characteristic(const HeegaardDiagram& d) {
    int v = int(d.crossings.size());
    int e = 2 * v;
    int f = 0;
    for (const auto& c : d.components) f += 2 - 2 * c.genus - int(c.circles.size());
    return v - e + f;
}

namespace {

// Serialization of a relabeled diagram used for choosing the canonical
// basepoints. Mirrors the on-disk format closely enough to discriminate.
std::string encode_for_canon(const HeegaardDiagram& d) {
    std::ostringstream os;
    for (const auto& c : d.curves) {
        os << "c " << int(c.color) << " " << c.generator << " :";
        for (int x : c.sequence) os << " " << x;
        os << ";";
    }
    for (const auto& x : d.crossings)
        os << "x " << x.blue_curve << " " << x.blue_pos << " " << x.red_curve << " " << x.red_pos
           << " " << x.sign << ";";
    std::vector<std::string> comps;
    for (const auto& comp : d.components) {
        std::ostringstream cs;
        cs << "k " << comp.genus << " :";
        auto circles = comp.circles;
        std::sort(circles.begin(), circles.end());
        for (const auto& r : circles) {
            if (r.kind == CircleRef::Face)
                cs << " f" << r.face_least_dart;
            else
                cs << " l" << r.float_curve << (r.float_side == Side::Left ? "L" : "R");
        }
        comps.push_back(cs.str());
    }
    std::sort(comps.begin(), comps.end());
    for (const auto& c : comps) os << c << ";";
    return os.str();
}

HeegaardDiagram relabel(const HeegaardDiagram& d, const std::vector<int>& curve_new,
                        const std::vector<int>& crossing_new,
                        const std::vector<int>& rotation) {
    // curve_new[old] = new id; crossing_new[old] = new id;
    // rotation[old curve] = slot offset so new sequence starts there.
    HeegaardDiagram out;
    out.genus = d.genus;
    out.curves.resize(d.curves.size());
    out.crossings.resize(d.crossings.size());
    for (const auto& c : d.curves) {
        Curve nc;
        nc.id = curve_new[c.id];
        nc.color = c.color;
        nc.generator = c.generator;
        int n = int(c.sequence.size());
        nc.sequence.resize(n);
        for (int i = 0; i < n; ++i)
            nc.sequence[i] = crossing_new[c.sequence[(i + rotation[c.id]) % n]];
        nc.float_component = -1;  // reattached below
        out.curves[nc.id] = std::move(nc);
    }
    for (const auto& x : d.crossings) {
        Crossing nx;
        nx.id = crossing_new[x.id];
        nx.blue_curve = curve_new[x.blue_curve];
        nx.red_curve = curve_new[x.red_curve];
        int nb = int(d.curves[x.blue_curve].sequence.size());
        int nr = int(d.curves[x.red_curve].sequence.size());
        nx.blue_pos = (x.blue_pos - rotation[x.blue_curve] + nb) % nb;
        nx.red_pos = (x.red_pos - rotation[x.red_curve] + nr) % nr;
        nx.sign = x.sign;
        out.crossings[nx.id] = std::move(nx);
    }

    // Rebuild component circle references against the new labeling.
    auto old_traces = d.face_traces();
    std::map<int, int> old_least_to_new_least;
    for (const auto& t : old_traces) {
        int least = t[0].id;
        int nl = INT32_MAX;
        for (Dart dd : t)
            nl = std::min(nl, Dart::make(crossing_new[dd.crossing()], dd.selector()).id);
        old_least_to_new_least[least] = nl;
    }
    for (const auto& comp : d.components) {
        ComplementComponent nc;
        nc.genus = comp.genus;
        for (const auto& r : comp.circles) {
            if (r.kind == CircleRef::Face)
                nc.circles.push_back(CircleRef::face(old_least_to_new_least.at(r.face_least_dart)));
            else
                nc.circles.push_back(CircleRef::floating(curve_new[r.float_curve], r.float_side));
        }
        std::sort(nc.circles.begin(), nc.circles.end());
        out.components.push_back(std::move(nc));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const ComplementComponent& a, const ComplementComponent& b) {
                  return a.circles < b.circles;
              });
    for (size_t i = 0; i < out.components.size(); ++i) out.components[i].id = int(i);
    for (auto& c : out.curves)
        if (c.floating())
            c.float_component = out.component_of_circle(CircleRef::floating(c.id, Side::Left));
    return out;
}

}  // namespace

HeegaardDiagram canonicalize(const HeegaardDiagram& d) {
    // canonical curve order: (color, generator)
    std::vector<int> order(d.curves.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Curve &ca = d.curves[a], &cb = d.curves[b];
        return std::make_tuple(int(ca.color), ca.generator, ca.id) <
               std::make_tuple(int(cb.color), cb.generator, cb.id);
    });
    std::vector<int> curve_new(d.curves.size());
    for (size_t i = 0; i < order.size(); ++i) curve_new[order[i]] = int(i);

    // Crossing numbering by traversal from the least curve; basepoint of each
    // not-yet-anchored curve chosen to minimize the final encoding.
    std::vector<int> rotation(d.curves.size(), 0);
    std::vector<int> crossing_new(d.crossings.size(), -1);

    HeegaardDiagram best;
    std::string best_enc;
    bool have_best = false;

    // Greedy per-curve: enumerate candidate rotations for the first unseen
    // curve, number crossings, recurse on encoding comparison. Curves whose
    // sequence already contains a numbered crossing get a forced basepoint.
    struct Walker {
        const HeegaardDiagram& d;
        const std::vector<int>& order;
        std::vector<int>& rotation;

        explicit Walker(const HeegaardDiagram& dd, const std::vector<int>& o,
                        std::vector<int>& rot)
            : d(dd), order(o), rotation(rot) {}

        std::vector<int> number(const std::vector<std::vector<int>>& choices) const {
            std::vector<int> xn(d.crossings.size(), -1);
            int next = 0;
            size_t choice_i = 0;
            for (int cid : order) {
                const Curve& c = d.curves[cid];
                if (c.sequence.empty()) continue;
                int n = int(c.sequence.size());
                int rot = -1;
                for (int i = 0; i < n && rot < 0; ++i)
                    if (xn[c.sequence[i]] >= 0) {
                        // anchor at the occurrence of the least numbered crossing
                        int bestPos = i, bestNum = xn[c.sequence[i]];
                        for (int j = i + 1; j < n; ++j)
                            if (xn[c.sequence[j]] >= 0 && xn[c.sequence[j]] < bestNum) {
                                bestNum = xn[c.sequence[j]];
                                bestPos = j;
                            }
                        rot = bestPos;
                    }
                if (rot < 0) rot = choices[choice_i++].front();
                rotation[cid] = rot;
                for (int i = 0; i < n; ++i) {
                    int x = c.sequence[(i + rot) % n];
                    if (xn[x] < 0) xn[x] = next++;
                }
            }
            return xn;
        }
    };

    // Enumerate rotation choices for curves that start new connected pieces.
    // At desk scale a full product over those curves is affordable only when
    // there are few; pick greedily curve by curve instead.
    std::vector<int> free_curves;
    {
        std::vector<int> xn(d.crossings.size(), -1);
        int dummy = 0;
        for (int cid : order) {
            const Curve& c = d.curves[cid];
            if (c.sequence.empty()) continue;
            bool anchored = false;
            for (int x : c.sequence)
                if (xn[x] >= 0) anchored = true;
            if (!anchored) free_curves.push_back(cid);
            for (int x : c.sequence)
                if (xn[x] < 0) xn[x] = dummy++;
        }
    }

    std::vector<std::vector<int>> chosen;  // per free curve, singleton rotation
    for (size_t fi = 0; fi < free_curves.size(); ++fi) {
        int cid = free_curves[fi];
        int n = int(d.curves[cid].sequence.size());
        int best_rot = 0;
        std::string best_local;
        for (int r = 0; r < n; ++r) {
            auto trial = chosen;
            trial.push_back({r});
            for (size_t rest = fi + 1; rest < free_curves.size(); ++rest) trial.push_back({0});
            Walker w(d, order, rotation);
            auto xn = w.number(trial);
            HeegaardDiagram cand = relabel(d, curve_new, xn, rotation);
            std::string enc = encode_for_canon(cand);
            if (best_local.empty() || enc < best_local) {
                best_local = enc;
                best_rot = r;
            }
        }
        chosen.push_back({best_rot});
    }
    {
        Walker w(d, order, rotation);
        auto xn = w.number(chosen);
        best = relabel(d, curve_new, xn, rotation);
        best_enc = encode_for_canon(best);
        have_best = true;
    }
    HDG_CHECK(have_best, "canonicalize produced no labeling");
    (void)best_enc;
    return best;
}

}  // namespace hdg
