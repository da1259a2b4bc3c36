#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdg/intmatrix.hpp"

namespace hdg {

enum class Color : uint8_t { Blue = 0, Red = 1 };

inline Color opposite(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }
inline const char* color_name(Color c) { return c == Color::Blue ? "blue" : "red"; }

// Strand-end selector at a crossing. The counterclockwise rotation at a
// crossing of sign +1 is (BlueOut, RedOut, BlueIn, RedIn); at sign -1 it is
// (BlueOut, RedIn, BlueIn, RedOut). Surface orientation is the
// counterclockwise rotation at every crossing.
enum Selector : uint8_t { BlueOut = 0, RedOut = 1, BlueIn = 2, RedIn = 3 };

inline const char* selector_name(Selector s) {
    static const char* names[4] = {"bo", "ro", "bi", "ri"};
    return names[s];
}

/// A dart is one of the four strand-ends at a crossing. Encoded as
/// 4*crossing + selector so that dart order (crossing, bo < ro < bi < ri)
/// is plain integer order.
struct Dart {
    int id = -1;

    int crossing() const { return id >> 2; }
    Selector selector() const { return Selector(id & 3); }
    bool is_out() const { Selector s = selector(); return s == BlueOut || s == RedOut; }
    Color color() const { Selector s = selector(); return (s == BlueOut || s == BlueIn) ? Color::Blue : Color::Red; }

    static Dart make(int crossing, Selector s) { return Dart{crossing * 4 + int(s)}; }
    auto operator<=>(const Dart&) const = default;
};

enum class Side : uint8_t { Left = 0, Right = 1 };
inline Side other_side(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline const char* side_name(Side s) { return s == Side::Left ? "L" : "R"; }

struct Curve {
    int id = -1;
    Color color = Color::Blue;
    int generator = 0;  // 1..g within its color class
    // Cyclic sequence of crossing ids along the curve, in the direction of
    // its orientation. Empty for a floating curve.
    std::vector<int> sequence;
    // Host component for a floating curve (else -1, derived data).
    int float_component = -1;

    bool floating() const { return sequence.empty(); }
};

struct Crossing {
    int id = -1;
    int blue_curve = -1;
    int blue_pos = -1;  // slot in the blue curve's cyclic sequence
    int red_curve = -1;
    int red_pos = -1;
    int sign = +1;  // +1 or -1, see Selector comment
};

/// Reference to a boundary circle of a complement component: either a face
/// trace (identified by the least dart it contains) or a side of a floating
/// curve.
struct CircleRef {
    enum Kind : uint8_t { Face, Float } kind = Face;
    int face_least_dart = -1;  // Face
    int float_curve = -1;      // Float
    Side float_side = Side::Left;

    static CircleRef face(int least_dart) { return CircleRef{Face, least_dart, -1, Side::Left}; }
    static CircleRef floating(int curve, Side s) { return CircleRef{Float, -1, curve, s}; }
    auto operator<=>(const CircleRef&) const = default;
};

struct ComplementComponent {
    int id = -1;
    int genus = 0;
    std::vector<CircleRef> circles;
};

/// A Heegaard diagram as a decorated combinatorial map: a rotation system at
/// bichromatic 4-valent crossings plus per-component genus annotations. The
/// annotations are what make non-filling diagrams representable; for filling
/// diagrams they are derivable.
struct HeegaardDiagram {
    int genus = 0;
    std::vector<Curve> curves;
    std::vector<Crossing> crossings;
    std::vector<ComplementComponent> components;

    int curve_count(Color c) const;
    int dart_count() const { return int(crossings.size()) * 4; }

    // -- combinatorial map structure --

    /// Involution pairing the two darts of each arc. The arc of curve c from
    /// slot i exits at the out-dart of crossing seq[i] and enters at the
    /// in-dart of crossing seq[i+1].
    Dart reverse(Dart d) const;
    /// Counterclockwise rotation at the dart's crossing.
    Dart rotate_ccw(Dart d) const;
    Dart rotate_cw(Dart d) const;
    /// Next dart of the face lying on the left of d (traveling away from
    /// d's crossing).
    Dart face_next(Dart d) const { return rotate_cw(reverse(d)); }

    /// Arcs are named by their out-dart.
    Dart arc_of(Dart d) const { return d.is_out() ? d : reverse(d); }
    int curve_of_dart(Dart d) const;
    /// The side of the underlying curve that the face containing d touches.
    Side side_of_dart(Dart d) const { return d.is_out() ? Side::Left : Side::Right; }

    /// All face traces, each a cyclic dart sequence rotated to start at its
    /// least dart; traces sorted by least dart. Faces partition the darts.
    std::vector<std::vector<Dart>> face_traces() const;

    /// Component whose boundary contains the given circle; -1 if unassigned.
    int component_of_circle(const CircleRef& ref) const;

    bool operator==(const HeegaardDiagram& o) const;
};

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    bool has(const std::string& code) const;
    std::string to_string() const;
};

/// Structural and topological validation. Never aborts: every failure is a
/// report entry. Empty report iff d is a valid genus-g Heegaard diagram.
ValidationReport validate(const HeegaardDiagram& d);

/// True when the structural half of validation passes (slots, references,
/// component partition); topological operations require this much.
bool structurally_valid(const HeegaardDiagram& d);

struct ComponentInfo {
    int id = -1;
    int genus = 0;
    std::vector<CircleRef> circles;
    bool is_disk = false;
    int side_count = 0;  // boundary arcs when the component is a single face
    bool is_bigon = false;
};

std::vector<ComponentInfo> complement_components(const HeegaardDiagram& d);
bool is_filling(const HeegaardDiagram& d);
bool has_bigon(const HeegaardDiagram& d);

/// Entry (i,j) = sum of crossing signs between blue generator i+1 and red
/// generator j+1; a presentation matrix for H1 of the encoded manifold.
IntMatrix algebraic_intersection_matrix(const HeegaardDiagram& d);

/// Rank in H1 of the splitting surface of the classes of one color's curves.
int curve_homology_rank(const HeegaardDiagram& d, Color color);

/// Euler characteristic computed from the decorated map:
/// V - E + sum_c (2 - 2h_c - b_c).
int euler_characteristic(const HeegaardDiagram& d);

/// Renumber curves and crossings into canonical form: curves ordered by
/// (color, generator), crossings by traversal order from the least curve,
/// basepoint chosen to minimize the overall encoding. Equal diagrams produce
/// identical canonical forms.
HeegaardDiagram canonicalize(const HeegaardDiagram& d);

}  // namespace hdg
