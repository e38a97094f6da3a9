#pragma once

#include <map>
#include <string>
#include <utility>

#include "nht/laurent.hpp"

namespace nht {

// Polynomial in x over the Laurent ring in v.
struct QPoly {
    std::map<int, Laurent> coeff;  // x-exponent -> nonzero coefficient

    void add(int n, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeff.try_emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeff.erase(it);
        }
    }
    bool operator==(const QPoly&) const = default;
    std::string str() const;
};

// Element of the divided-power Weyl algebra in normal form
// sum c_{a,m} x^a del^(m), coefficients in the Laurent ring in v.
struct DElement {
    std::map<std::pair<int, int>, Laurent> terms;  // (a, m) -> coefficient

    void add(int a, int m, const Laurent& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(a, m);
        auto [it, fresh] = terms.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool operator==(const DElement&) const = default;
    std::string str() const;
};

DElement d_x(int a = 1);    // x^a
DElement d_del(int m);      // del^(m)
DElement d_one();

// Normal form of the product: del^(m) x -> v^m x del^(m) + del^(m-1) and
// del^(m) del^(n) -> qbinom(m+n,n) del^(m+n), with del^(-1) = 0 and
// del^(0) = 1.
DElement d_mul(const DElement& a, const DElement& b);
DElement d_add(const DElement& a, const DElement& b);

// Defining action on v-Laurent polynomials in x:
// del^(m)(x^n) = qbinom(n,m) x^{n-m} (zero for m > n); x multiplies.
QPoly d_act(const DElement& a, const QPoly& p);

// All m, n <= bound: the relations annihilate every monomial x^j, j <= bound,
// and the action is multiplicative on generator pairs.
bool rep_check(int bound);

// Normal form of del^(m) x^k agrees with the closed action formula on every
// monomial up to the bound.
bool confluence_check(int bound);

}  // namespace nht
