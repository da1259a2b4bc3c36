#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace hdg {

// All arithmetic in this project is exact. There are no floating point
// numbers and no tolerances anywhere.
using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void negate_row(int r);
    void negate_col(int c);
    // row a += k * row b
    void add_row(int a, int b, const Int& k);
    void add_col(int a, int b, const Int& k);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Rank over Q (equivalently over Z for subgroup ranks), by fraction-free
/// Gaussian elimination.
int matrix_rank(const IntMatrix& m);

}  // namespace hdg
