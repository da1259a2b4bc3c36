#pragma once

#include <stdexcept>
#include <vector>

#include "hdg/diagram.hpp"
#include "hdg/intmatrix.hpp"

namespace hdg {

struct SmithForm {
    std::vector<Int> factors;  // d1 | d2 | ... , non-negative
    IntMatrix row_transform;   // U
    IntMatrix col_transform;   // V, with U * A * V = diag(factors)

    bool operator==(const SmithForm& o) const { return factors == o.factors; }
};

/// Exact Smith normal form with verifying unimodular transforms.
SmithForm smith_normal_form(const IntMatrix& m);

/// |H1| when finite (product of nonzero invariant factors); 0 when H1 is
/// infinite (some invariant factor vanishes).
Int homology_order(const SmithForm& f);

struct LensParams {
    Int p = 0;
    Int q = 0;

    bool operator==(const LensParams& o) const = default;
};

/// Normalize q into [0, p) and pick the canonical representative of the
/// class, which is closed under q -> -q and q -> q^-1 (mod p).
LensParams normalize_lens(Int p, Int q);

bool lens_equivalent(const LensParams& a, const LensParams& b);

struct LensError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Genus-1 diagram with p crossings whose dual is the p-square cylinder
/// closed with a q/p twist. Requires p >= 1 and gcd(p, q) = 1.
HeegaardDiagram build_lens(const Int& p, const Int& q);

/// Read (p, q) off a genus-1 diagram: p is the crossing count, q is the
/// constant step when crossings numbered along the blue curve are read
/// along the red curve. All direction and basepoint choices are normalized
/// away. Errors on genus != 1 or zero crossings.
LensParams recognize_lens(const HeegaardDiagram& d);

Int gcd_int(Int a, Int b);
Int mod_inverse(const Int& a, const Int& p);

}  // namespace hdg
