#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

namespace nht {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one formal variable.  This is the scalar
// ring of every graded dimension and Grothendieck class in the library.
// The variable renders as "q" by default; code working in v = q^{-2}
// passes "v" to str().
//
// Invariant: no stored coefficient is zero, exponents are kept sorted, so
// equality is structural.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) c_[0] = c; }
    Laurent(const Int& c) { if (c != 0) c_[0] = c; }

    // c * q^exp
    static Laurent monomial(const Int& c, int exp) {
        Laurent r;
        if (c != 0) r.c_[exp] = c;
        return r;
    }
    static Laurent q(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    const std::map<int, Int>& terms() const { return c_; }

    Int coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Int(0) : it->second;
    }
    int min_exp() const { return c_.begin()->first; }   // nonzero only
    int max_exp() const { return c_.rbegin()->first; }  // nonzero only

    Int eval_one() const {
        Int s = 0;
        for (auto& [e, c] : c_) s += c;
        return s;
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (auto& [e, c] : a.c_) r.c_[e] = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const Laurent&) const = default;

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = c_.try_emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::string str(const std::string& var = "q") const;
    // Parses the output of str(); accepts "q" or "v" as the variable.
    static Laurent parse(const std::string& s);

private:
    std::map<int, Int> c_;  // exponent -> nonzero coefficient
};

// q -> q^k applied to every exponent; k must be nonzero.
Laurent substitute_power(const Laurent& a, int k);

// q -> q^{-1}
inline Laurent bar(const Laurent& a) { return substitute_power(a, -1); }

// Exact division; nullopt when b does not divide a over the integers.
std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b);

// Quantum integer (a)_v = 1 + v + ... + v^{a-1}.
Laurent qint(int a);
// (a)_v! = (1)_v (2)_v ... (a)_v
Laurent qfact(int a);
// Gaussian binomial in v, computed by the Pascal recursion
//   qbinom(a,b) = qbinom(a-1,b-1) + v^b qbinom(a-1,b).
Laurent qbinom(int a, int b);

// Balanced quantum integer [a]_q = q^{a-1} + q^{a-3} + ... + q^{1-a}.
Laurent qint_balanced(int a);
// Bar-invariant Gaussian binomial prod_{i<b} [a-i]_q / [b-i]_q, computed by
// exact division; throws if a division step is inexact.
Laurent qbinom_balanced(int a, int b);

}  // namespace nht
