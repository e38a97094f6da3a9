#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nht/laurent.hpp"
#include "nht/perm.hpp"

namespace nht {

// Dense exponent vector; entry t is the exponent of x_{t+1}.
using Monomial = std::vector<int>;

// Graded-lex order: total degree first, then the earlier variable with the
// larger exponent wins.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Integer-coefficient polynomial in x_1..x_n with graded-lex-sorted terms,
// so equality and rendering are canonical.  Each x_i carries degree 2 in
// the algebra grading.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}

    static Poly constant(int nvars, const Int& c);
    static Poly variable(int nvars, int i);  // x_i, 1-based
    static Poly monomial(int nvars, const Monomial& e, const Int& c);

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Monomial, Int, GrlexLess>& terms() const { return t_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Int& c);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Int& c, Poly a) { a *= c; return a; }
    bool operator==(const Poly&) const = default;

    // Largest total exponent degree; -1 for the zero polynomial.
    int total_degree() const;
    // Total exponent degree when all terms share it.
    std::optional<int> homogeneous_degree() const;

    // Substitution x_j -> x_{w(j)}.
    Poly apply_perm(const Permutation& w) const;
    Poly swap_adjacent(int i) const { return apply_perm(Permutation::simple(n_, i)); }

    void add_term(const Monomial& e, const Int& c);

    std::string str() const;
    static Poly parse(const std::string& s, int nvars);

private:
    int n_ = 0;
    std::map<Monomial, Int, GrlexLess> t_;
};

// Divided difference (p - s_i p)/(x_i - x_{i+1}), computed termwise by the
// exact telescoping formula; lowers degree by one exponent unit and kills
// s_i-symmetric polynomials.
Poly divided_difference(int i, const Poly& p);

// Complete homogeneous symmetric polynomial of degree k in x_1..x_j,
// embedded in nvars variables.
Poly complete_homogeneous(int nvars, int j, int k);

}  // namespace nht
