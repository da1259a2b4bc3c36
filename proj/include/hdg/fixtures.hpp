#pragma once

#include <cstdint>
#include <vector>

#include "hdg/diagram.hpp"

namespace hdg {

/// Connect sum: remove a disk face of each summand and glue along the
/// circle. The two faces become one genus-0 component with two boundary
/// circles. Faces are chosen canonically (least face of each diagram).
HeegaardDiagram connect_sum(const HeegaardDiagram& a, const HeegaardDiagram& b);

/// Genus-1 diagram of S2 x S1: disjoint parallel floating blue and red
/// curves; two annulus components.
HeegaardDiagram s2xs1_diagram();

/// Connect sum with the one-crossing torus diagram (genus-1 S3).
HeegaardDiagram stabilize(const HeegaardDiagram& d);

/// Genus-2 diagram with exactly one problem, sitting on a hexagonal face.
HeegaardDiagram problem_pair_left();

/// Genus-2, 11-crossing, taut, filling diagram of the lens space with H1 of
/// order 13, together with the reducing dual path whose disk has area 15.
/// Returns false when the stored encoding fails its self checks; callers
/// then treat the fixture as quarantined.
struct OsborneFixture {
    HeegaardDiagram diagram;
    // reducing path as (component id, arc out-dart id, sign) steps
    std::vector<std::array<int, 3>> eta_steps;
};
bool osborne_fixture(OsborneFixture& out);

/// Deterministic random diagrams for stress tests: taut genus-2 seed plus
/// `slides` random handle slides (bands crossing only opposite-color
/// curves).
HeegaardDiagram random_genus2_diagram(uint64_t seed, int slides);

}  // namespace hdg
