#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nht/poly.hpp"

namespace nht {

// Element of the nilHecke algebra on n strands in normal form: a finite sum
// of p_w(x_1..x_n) * d_w with d_w the divided-difference operator attached
// to the permutation w.  Grading: deg x_i = 2, deg d_i = -2.
//
// Normal form is unique, so operator== decides equality in the algebra.
class NHElement {
public:
    NHElement() = default;
    explicit NHElement(int n) : n_(n) {}

    int strands() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Permutation, Poly>& terms() const { return t_; }

    void add_term(const Permutation& w, const Poly& p);

    NHElement& operator+=(const NHElement& o);
    NHElement& operator-=(const NHElement& o);
    NHElement& operator*=(const Int& c);
    friend NHElement operator+(NHElement a, const NHElement& b) { a += b; return a; }
    friend NHElement operator-(NHElement a, const NHElement& b) { a -= b; return a; }
    friend NHElement operator-(const NHElement& a);
    friend NHElement operator*(const Int& c, NHElement a) { a *= c; return a; }
    bool operator==(const NHElement&) const = default;

    // Grading degree when every term is homogeneous of the same degree:
    // 2 * (exponent total) - 2 * length(w).
    std::optional<int> homogeneous_degree() const;

    std::string str() const;  // "(poly) d[one-line] + ..."
    static NHElement parse(const std::string& s, int n);

private:
    int n_ = 0;
    std::map<Permutation, Poly> t_;  // w -> nonzero p_w
};

NHElement nh_zero(int n);
NHElement nh_one(int n);
NHElement nh_x(int n, int i);                          // x_i, 1-based
NHElement nh_d(int n, int i);                          // d_i, 1-based
NHElement nh_poly(const Poly& p);
NHElement nh_dw(int n, const Permutation& w);          // d_w

// Product in normal form.  Polynomials of the right factor slide leftwards
// across each d via d_i f = s_i(f) d_i + dd_i(f); divided-difference parts
// contract through length-additivity (d_u d_v = d_{uv} or 0).
NHElement nh_mul(const NHElement& a, const NHElement& b);
inline NHElement operator*(const NHElement& a, const NHElement& b) { return nh_mul(a, b); }

// The anti-automorphism fixing every x_i and d_i and reversing products.
NHElement psi(const NHElement& a);

// e_n = x_1^{n-1} x_2^{n-2} ... x_{n-1} d_{w_0}; degree-0 idempotent.
NHElement idempotent_e(int n);

// Relabel a k-strand element onto strands offset+1..offset+k of n_total.
NHElement embed(const NHElement& a, int n_total, int offset);

// e_k == x_1...x_{k-1} d_{k-1}...d_1 e_{k-1} in NH_k.
bool check_idem_recursion(int k);

// The embedded d_{w_0(k)} on the last k strands of NH_{n+1} kills d_i for
// n+2-k <= i <= n and survives against d_r d_{r+1} ... d_n for r <= n+1-k.
bool check_vanishing(int n, int k);

// Decompositions against the parabolic subalgebra NH_n (x) NH_m inside
// NH_{n+m}.  Left: a = sum_v d_v * c_v over block-increasing minimal reps;
// right: a = sum_v c_v * d_v over coset_reps_parabolic(n, m).  Every c_v
// has all its permutations inside S_n x S_m.
std::map<Permutation, NHElement> decompose_left(const NHElement& a, int n, int m);
std::map<Permutation, NHElement> decompose_right(const NHElement& a, int n, int m);

// Split a parabolic-subalgebra element into simple tensors: a list of
// (first-factor element over n strands, second-factor element over m
// strands) whose outer products recombine to c.
std::vector<std::pair<NHElement, NHElement>> split_tensor(const NHElement& c, int n, int m);

}  // namespace nht
