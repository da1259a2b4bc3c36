#include <doctest.h>

#include <functional>

#include "hdg/intmatrix.hpp"
#include "hdg/invariants.hpp"

using namespace hdg;

namespace {

IntMatrix mat(int r, int c, std::initializer_list<long long> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}

// Independent oracle for invariant factors: d_1...d_k = gcd of all k x k
// minors, so d_k = gcd(minors_k) / gcd(minors_{k-1}).
Int minor_gcd(const IntMatrix& m, int k) {
    std::vector<int> rows(k), cols(k);
    Int g = 0;
    std::function<Int(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rs, std::vector<int> cs) -> Int {
        if (rs.size() == 1) return m.at(rs[0], cs[0]);
        Int acc = 0;
        for (size_t i = 0; i < rs.size(); ++i) {
            std::vector<int> sub(rs.begin(), rs.end());
            sub.erase(sub.begin() + i);
            Int term = m.at(rs[i], cs[0]) * det(sub, std::vector<int>(cs.begin() + 1, cs.end()));
            acc += (i % 2 == 0) ? term : -term;
        }
        return acc;
    };
    std::function<void(int, int)> walk_rows;
    std::function<void(int, int, const std::vector<int>&)> walk_cols =
        [&](int start, int left, const std::vector<int>& rs) {
            if (left == 0) {
                std::vector<int> cs(cols.begin(), cols.begin() + k);
                g = gcd(g, det(rs, cs));
                return;
            }
            for (int c = start; c <= m.cols() - left; ++c) {
                cols[k - left] = c;
                walk_cols(c + 1, left - 1, rs);
            }
        };
    walk_rows = [&](int start, int left) {
        if (left == 0) {
            std::vector<int> rs(rows.begin(), rows.begin() + k);
            walk_cols(0, k, rs);
            return;
        }
        for (int r = start; r <= m.rows() - left; ++r) {
            rows[k - left] = r;
            walk_rows(r + 1, left - 1);
        }
    };
    walk_rows(0, k);
    return g < 0 ? Int(-g) : g;
}

std::vector<Int> snf_oracle(const IntMatrix& m) {
    int n = std::min(m.rows(), m.cols());
    std::vector<Int> out;
    Int prev = 1;
    for (int k = 1; k <= n; ++k) {
        Int g = minor_gcd(m, k);
        if (g == 0) {
            out.push_back(0);
            continue;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(matrix_rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(matrix_rank(mat(2, 2, {1, 2, 3, 4})) == 2);
    CHECK(matrix_rank(mat(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(matrix_rank(mat(3, 2, {1, 0, 0, 1, 1, 1})) == 2);
}

TEST_CASE("smith normal form basics") {
    auto f = smith_normal_form(mat(1, 1, {5}));
    CHECK(f.factors == std::vector<Int>{5});

    f = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
    CHECK(f.factors == std::vector<Int>{1, 6});

    f = smith_normal_form(mat(2, 2, {0, 0, 0, 0}));
    CHECK(f.factors == std::vector<Int>{0, 0});

    f = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
    CHECK(f.factors == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form transforms reconstruct the input") {
    std::vector<IntMatrix> cases = {
        mat(2, 2, {2, 4, 6, 8}),
        mat(2, 3, {1, 2, 3, 4, 5, 6}),
        mat(3, 3, {6, 10, 15, 10, 15, 6, 15, 6, 10}),
        mat(2, 2, {1, 3, 5, 2}),
        mat(3, 2, {0, 0, 4, 6, 6, 4}),
    };
    for (const auto& a : cases) {
        auto f = smith_normal_form(a);
        IntMatrix d = f.row_transform * a * f.col_transform;
        for (int r = 0; r < d.rows(); ++r)
            for (int c = 0; c < d.cols(); ++c) {
                Int want = (r == c && r < int(f.factors.size())) ? f.factors[r] : Int(0);
                CHECK(d.at(r, c) == want);
            }
        // divisibility chain
        for (size_t i = 0; i + 1 < f.factors.size(); ++i) {
            if (f.factors[i + 1] == 0) continue;
            CHECK(f.factors[i] != 0);
            CHECK(f.factors[i + 1] % f.factors[i] == 0);
        }
        // against the minor-gcd oracle
        CHECK(f.factors == snf_oracle(a));
    }
}

TEST_CASE("lens parameter arithmetic") {
    CHECK(lens_equivalent({7, 2}, {7, 5}));   // -2 = 5 mod 7
    CHECK(lens_equivalent({7, 2}, {7, 4}));   // 2^-1 = 4 mod 7
    CHECK(!lens_equivalent({7, 2}, {5, 2}));
    CHECK(normalize_lens(7, 5) == normalize_lens(7, 2));
    CHECK(normalize_lens(1, 0).p == 1);
}
