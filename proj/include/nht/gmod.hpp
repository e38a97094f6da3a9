#pragma once

#include <string>
#include <vector>

#include "nht/nilhecke.hpp"
#include "nht/zmatrix.hpp"

namespace nht {

// A finite-dimensional graded module over NH_n, presented by one integer
// matrix per generator acting on column vectors: x matrices raise the
// degree by 2, d matrices lower it by 2.
struct GradedModule {
    int n = 0;
    std::vector<int> degrees;  // degree of each basis vector
    std::vector<ZMat> x;       // n matrices
    std::vector<ZMat> d;       // n-1 matrices

    int dim() const { return (int)degrees.size(); }
    const ZMat& x_mat(int i) const { return x[i - 1]; }  // 1-based
    const ZMat& d_mat(int i) const { return d[i - 1]; }
};

// Every defining relation of NH_n holds as a matrix identity and the
// degree constraints are respected.
bool check_module(const GradedModule& M);

Laurent gdim(const GradedModule& M);
GradedModule shift(const GradedModule& M, int dshift);

// Evaluate a normal-form element through the generator matrices.
std::vector<Int> act(const GradedModule& M, const NHElement& a, const std::vector<Int>& v);
ZMat matrix_of(const GradedModule& M, const NHElement& a);

// The staircase monomial basis of the coinvariant quotient: exponents with
// 0 <= a_i <= n-i, sorted by (degree, graded-lex).
const std::vector<Monomial>& staircase_basis(int n);

// Class of p modulo the positive-degree symmetric polynomials, expressed in
// the staircase basis.
std::vector<Int> reduce_coinvariant(int n, const Poly& p);
Poly reduce_coinvariant_poly(int n, const Poly& p);

// The graded simple L_n = k[x_1..x_n]/(Sym_n^+) of dimension n!, with x_i
// acting by multiplication and d_i by the divided difference, both followed
// by reduction.
GradedModule coinvariant_simple(int n);

// Image lattice e.M of a degree-0 idempotent, with its induced grading.
// `basis` holds one homogeneous integer column per basis vector, in the
// coordinates of M.
struct Truncation {
    std::vector<int> degrees;
    ZMat basis;
};
Truncation idempotent_truncation(const GradedModule& M, const NHElement& e);

std::string to_json(const GradedModule& M);
GradedModule module_from_json(const std::string& text);

}  // namespace nht
