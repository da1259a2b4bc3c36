#include "hdg/check.hpp"
#include "hdg/invariants.hpp"

#include <algorithm>

namespace hdg {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int mod_inverse(const Int& a, const Int& p) {
    // extended euclid; requires gcd(a, p) = 1
    Int old_r = a % p, r = p;
    if (old_r < 0) old_r += p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int quot = old_r / r;
        Int tr = old_r - quot * r;
        old_r = r;
        r = tr;
        Int ts = old_s - quot * s;
        old_s = s;
        s = ts;
    }
    HDG_CHECK(old_r == 1, "mod_inverse of non-unit");
    Int inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    int rows = a.rows(), cols = a.cols();
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };

    int t = 0;
    int n = std::min(rows, cols);
    while (t < n) {
        // find a nonzero pivot of minimal absolute value in the trailing block
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (a.at(r, c) != 0 && (pr < 0 || abs_int(a.at(r, c)) < best)) {
                    pr = r;
                    pc = c;
                    best = abs_int(a.at(r, c));
                }
        if (pr < 0) break;
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < rows; ++r) {
                if (a.at(r, t) == 0) continue;
                Int k = a.at(r, t) / a.at(t, t);
                a.add_row(r, t, -k);
                u.add_row(r, t, -k);
                if (a.at(r, t) != 0) {
                    a.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (a.at(t, c) == 0) continue;
                Int k = a.at(t, c) / a.at(t, t);
                a.add_col(c, t, -k);
                v.add_col(c, t, -k);
                if (a.at(t, c) != 0) {
                    a.swap_cols(t, c);
                    v.swap_cols(t, c);
                    dirty = true;
                }
            }
        }
        // divisibility fix-up: pivot must divide the rest of the block
        bool fixed = true;
        for (int r = t + 1; r < rows && fixed; ++r)
            for (int c = t + 1; c < cols && fixed; ++c)
                if (a.at(r, c) % a.at(t, t) != 0) {
                    a.add_row(t, r, 1);
                    u.add_row(t, r, 1);
                    fixed = false;
                }
        if (!fixed) continue;
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }

    SmithForm f;
    for (int i = 0; i < n; ++i) f.factors.push_back(a.at(i, i));
    f.row_transform = std::move(u);
    f.col_transform = std::move(v);
    return f;
}

Int homology_order(const SmithForm& f) {
    Int prod = 1;
    for (const Int& d : f.factors) {
        if (d == 0) return 0;
        prod *= d;
    }
    return prod;
}

LensParams normalize_lens(Int p, Int q) {
    if (p < 0) p = -p;
    if (p == 0) return {0, 1};
    q %= p;
    if (q < 0) q += p;
    if (p == 1) return {1, 0};
    // orbit of q under negation and inversion mod p
    std::vector<Int> orbit{q, (p - q) % p};
    if (gcd_int(q, p) == 1) {
        Int qi = mod_inverse(q, p);
        orbit.push_back(qi);
        orbit.push_back((p - qi) % p);
    }
    return {p, *std::min_element(orbit.begin(), orbit.end())};
}

bool lens_equivalent(const LensParams& a, const LensParams& b) {
    return normalize_lens(a.p, a.q) == normalize_lens(b.p, b.q);
}

HeegaardDiagram build_lens(const Int& p_in, const Int& q_in) {
    if (p_in < 1) throw LensError("build_lens: p must be >= 1");
    if (gcd_int(p_in, q_in) != 1) throw LensError("build_lens: gcd(p, q) must be 1");
    int p = int(p_in);
    Int qm = q_in % p;
    if (qm < 0) qm += p;
    int q = int(qm);

    HeegaardDiagram d;
    d.genus = 1;
    Curve blue{0, Color::Blue, 1, {}, -1};
    Curve red{1, Color::Red, 1, {}, -1};
    for (int i = 0; i < p; ++i) blue.sequence.push_back(i);
    for (int i = 0; i < p; ++i) red.sequence.push_back((int64_t(i) * q) % p);
    // red slot of crossing k: position i with i*q = k (mod p)
    std::vector<int> red_pos(p);
    for (int i = 0; i < p; ++i) red_pos[(int64_t(i) * q) % p] = i;
    for (int k = 0; k < p; ++k) d.crossings.push_back({k, 0, k, 1, red_pos[k], +1});
    d.curves = {blue, red};

    // filling: every face is a disk
    auto traces = d.face_traces();
    for (const auto& t : traces) {
        ComplementComponent c;
        c.id = int(d.components.size());
        c.circles.push_back(CircleRef::face(t[0].id));
        d.components.push_back(c);
    }
    return canonicalize(d);
}

LensParams recognize_lens(const HeegaardDiagram& d) {
    if (d.genus != 1) throw LensError("recognize_lens: genus must be 1");
    if (d.crossings.empty()) throw LensError("recognize_lens: zero crossings");
    int p = int(d.crossings.size());

    const Curve* blue = nullptr;
    const Curve* red = nullptr;
    for (const auto& c : d.curves)
        (c.color == Color::Blue ? blue : red) = &c;
    HDG_CHECK(blue && red && !blue->floating() && !red->floating(), "lens curves");

    // number crossings along the blue curve, read along the red curve; the
    // step must be constant modulo p. All basepoint and direction choices
    // land in one lens-equivalence class; normalize and return the canonical
    // representative.
    std::vector<int> number(p);
    for (int i = 0; i < p; ++i) number[blue->sequence[i]] = i;

    std::optional<LensParams> result;
    for (int bdir : {+1, -1}) {
        for (int rdir : {+1, -1}) {
            std::vector<int> reading;
            for (int i = 0; i < p; ++i) {
                int idx = rdir > 0 ? i : (p - i) % p;
                int num = number[red->sequence[idx]];
                reading.push_back(bdir > 0 ? num : (p - num) % p);
            }
            if (p == 1) {
                result = LensParams{1, 0};
                continue;
            }
            int q = ((reading[1] - reading[0]) % p + p) % p;
            for (int i = 0; i < p; ++i)
                if ((reading[(i + 1) % p] - reading[i] - q) % p != 0)
                    throw LensError("recognize_lens: non-constant step (not a lens diagram)");
            LensParams cand = normalize_lens(p, q);
            if (result && !(cand == *result))
                throw LensError("recognize_lens: direction choices disagree");
            result = cand;
        }
    }
    return *result;
}

}  // namespace hdg
