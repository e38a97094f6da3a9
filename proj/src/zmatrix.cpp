#include "nht/zmatrix.hpp"

#include <stdexcept>

namespace nht {

ZMat operator+(const ZMat& a, const ZMat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("ZMat +: shape mismatch");
    ZMat r(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

ZMat operator-(const ZMat& a, const ZMat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("ZMat -: shape mismatch");
    ZMat r(a.r_, a.c_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

ZMat operator*(const ZMat& a, const ZMat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("ZMat *: shape mismatch");
    ZMat r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;  // module action matrices are sparse
            for (int j = 0; j < b.c_; ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

std::vector<Int> operator*(const ZMat& a, const std::vector<Int>& v) {
    if (a.c_ != (int)v.size()) throw std::invalid_argument("ZMat * vec: shape mismatch");
    std::vector<Int> r(a.r_);
    for (int k = 0; k < a.c_; ++k) {
        if (v[k] == 0) continue;
        for (int i = 0; i < a.r_; ++i) {
            const Int& aik = a.at(i, k);
            if (aik != 0) r[i] += aik * v[k];
        }
    }
    return r;
}

ZMat lattice_column_echelon(const ZMat& M) {
    const int rows = M.rows();
    std::vector<std::vector<Int>> cols;
    for (int j = 0; j < M.cols(); ++j) {
        auto c = M.column(j);
        for (auto& x : c)
            if (x != 0) { cols.push_back(std::move(c)); break; }
    }
    std::vector<std::vector<Int>> basis;
    size_t start = 0;
    for (int r = 0; r < rows && start < cols.size(); ++r) {
        // all columns from `start` on have zeros in rows < r
        while (true) {
            int jp = -1;
            for (size_t j = start; j < cols.size(); ++j)
                if (cols[j][r] != 0) { jp = (int)j; break; }
            if (jp < 0) break;
            int jq = -1;
            for (size_t j = jp + 1; j < cols.size(); ++j)
                if (cols[j][r] != 0) { jq = (int)j; break; }
            if (jq < 0) {
                // unique pivot candidate at this row
                std::swap(cols[start], cols[(size_t)jp]);
                if (cols[start][r] < 0)
                    for (auto& x : cols[start]) x = -x;
                basis.push_back(std::move(cols[start]));
                ++start;
                break;
            }
            // gcd step on the pair (jp, jq), unimodular on the column set
            Int a = cols[jp][r], b = cols[jq][r];
            if (abs(a) > abs(b)) { std::swap(cols[jp], cols[jq]); std::swap(a, b); }
            Int t = b / a;  // truncated division shrinks |b|
            for (int i = r; i < rows; ++i) cols[jq][i] -= t * cols[jp][i];
            bool zero = true;
            for (int i = r; i < rows; ++i)
                if (cols[jq][i] != 0) { zero = false; break; }
            if (zero) cols.erase(cols.begin() + jq);
        }
    }
    ZMat B(rows, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j)
        for (int i = 0; i < rows; ++i) B.at(i, j) = basis[j][i];
    return B;
}

int rank(const ZMat& M) { return lattice_column_echelon(M).cols(); }

std::optional<std::vector<Int>> solve_in_columns(const ZMat& B, std::vector<Int> v) {
    if (B.rows() != (int)v.size()) throw std::invalid_argument("solve_in_columns: shape mismatch");
    std::vector<Int> coeff(B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        int p = 0;
        while (p < B.rows() && B.at(p, j) == 0) ++p;
        if (p == B.rows()) throw std::invalid_argument("solve_in_columns: zero basis column");
        const Int& piv = B.at(p, j);
        if (v[p] % piv != 0) return std::nullopt;
        coeff[j] = v[p] / piv;
        if (coeff[j] != 0)
            for (int i = p; i < B.rows(); ++i) v[i] -= coeff[j] * B.at(i, j);
    }
    for (auto& x : v)
        if (x != 0) return std::nullopt;
    return coeff;
}

}  // namespace nht
