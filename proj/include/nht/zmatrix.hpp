#pragma once

#include <optional>
#include <vector>

#include "nht/laurent.hpp"

namespace nht {

// Dense matrix over arbitrary-precision integers.  Everything downstream
// needs exact answers (lattice bases, ranks, membership), so there is no
// floating point anywhere.
class ZMat {
public:
    ZMat() = default;
    ZMat(int rows, int cols) : r_(rows), c_(cols), a_((size_t)rows * cols) {}

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int r, int c) { return a_[(size_t)r * c_ + c]; }
    const Int& at(int r, int c) const { return a_[(size_t)r * c_ + c]; }

    bool is_zero() const {
        for (auto& v : a_) if (v != 0) return false;
        return true;
    }

    std::vector<Int> column(int j) const {
        std::vector<Int> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = at(i, j);
        return v;
    }

    bool operator==(const ZMat&) const = default;

    friend ZMat operator+(const ZMat& a, const ZMat& b);
    friend ZMat operator-(const ZMat& a, const ZMat& b);
    friend ZMat operator*(const ZMat& a, const ZMat& b);
    friend std::vector<Int> operator*(const ZMat& a, const std::vector<Int>& v);

private:
    int r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

// Basis of the lattice spanned by the columns of M, in column echelon form:
// pivot rows strictly increase and every entry above a pivot is zero.
// Obtained by unimodular column operations, so the lattice is preserved
// exactly.  Zero columns are dropped and pivots are made positive.
ZMat lattice_column_echelon(const ZMat& M);

int rank(const ZMat& M);

// Integer coordinates of v in the columns of an echelon basis B, or nullopt
// when v is not in the lattice.
std::optional<std::vector<Int>> solve_in_columns(const ZMat& B, std::vector<Int> v);

}  // namespace nht
