#include "hdg/intmatrix.hpp"

#include <sstream>
#include <utility>

namespace hdg {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += v * o.at(k, c);
        }
    return p;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::negate_row(int r) {
    for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(int c) {
    for (int r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

void IntMatrix::add_row(int a, int b, const Int& k) {
    for (int c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntMatrix::add_col(int a, int b, const Int& k) {
    for (int r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << at(r, c);
        }
    }
    os << "]";
    return os.str();
}

int matrix_rank(const IntMatrix& m) {
    IntMatrix a = m;
    int rank = 0;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (a.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int r = rank + 1; r < a.rows(); ++r) {
            if (a.at(r, col) == 0) continue;
            // Fraction-free elimination: scale then subtract.
            Int p = a.at(rank, col), q = a.at(r, col);
            Int g = gcd(p, q);
            Int pr = p / g, qr = q / g;
            for (int c = 0; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) * pr - a.at(rank, c) * qr;
        }
        ++rank;
    }
    return rank;
}

}  // namespace hdg
