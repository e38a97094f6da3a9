#include "nht/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nht {

std::string Laurent::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : c_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return s[i]; }
};

Int parse_int(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) digits += c.s[c.i++];
    if (digits.empty()) throw std::invalid_argument("Laurent::parse: expected digits in '" + c.s + "'");
    return Int(digits);
}

int parse_exponent(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) {
        neg = c.s[c.i] == '-';
        ++c.i;
    }
    Int v = parse_int(c);
    long e = v.convert_to<long>();
    return (int)(neg ? -e : e);
}

}  // namespace

Laurent Laurent::parse(const std::string& s) {
    Laurent out;
    Cursor c{s};
    if (c.done()) throw std::invalid_argument("Laurent::parse: empty input");
    bool neg = false;
    if (c.peek() == '-') { neg = true; ++c.i; }
    else if (c.peek() == '+') ++c.i;
    while (true) {
        Int coeff = 1;
        bool have_coeff = false;
        if (std::isdigit((unsigned char)c.peek())) {
            coeff = parse_int(c);
            have_coeff = true;
        }
        int exp = 0;
        if (!c.done() && (c.peek() == '*' || c.peek() == 'q' || c.peek() == 'v')) {
            if (c.peek() == '*') ++c.i;
            c.skip_ws();
            if (c.i >= c.s.size() || (c.s[c.i] != 'q' && c.s[c.i] != 'v'))
                throw std::invalid_argument("Laurent::parse: expected variable in '" + s + "'");
            ++c.i;
            exp = 1;
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                exp = parse_exponent(c);
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("Laurent::parse: dangling sign in '" + s + "'");
        }
        out.add_term(exp, neg ? Int(-coeff) : coeff);
        if (c.done()) break;
        char op = c.peek();
        if (op != '+' && op != '-')
            throw std::invalid_argument("Laurent::parse: unexpected character in '" + s + "'");
        neg = op == '-';
        ++c.i;
    }
    return out;
}

Laurent substitute_power(const Laurent& a, int k) {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
    Laurent r;
    for (auto& [e, c] : a.terms()) r.add_term(e * k, c);
    return r;
}

std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) return std::nullopt;
    Laurent rem = a, quot;
    const int be = b.min_exp();
    const Int bc = b.coeff(be);
    while (!rem.is_zero()) {
        const int re = rem.min_exp();
        const Int rc = rem.coeff(re);
        if (rc % bc != 0) return std::nullopt;
        Laurent t = Laurent::monomial(rc / bc, re - be);
        quot += t;
        rem -= t * b;
        if (!rem.is_zero() && rem.min_exp() <= re) return std::nullopt;  // no progress
    }
    return quot;
}

Laurent qint(int a) {
    if (a < 0) throw std::invalid_argument("qint: negative argument");
    Laurent r;
    for (int i = 0; i < a; ++i) r.add_term(i, 1);
    return r;
}

Laurent qfact(int a) {
    Laurent r(1);
    for (int i = 1; i <= a; ++i) r *= qint(i);
    return r;
}

Laurent qbinom(int a, int b) {
    if (b < 0 || b > a) throw std::invalid_argument("qbinom: need 0 <= b <= a");
    // Pascal triangle row by row; row[k] = qbinom(r, k).
    std::vector<Laurent> row{Laurent(1)};
    for (int r = 1; r <= a; ++r) {
        std::vector<Laurent> next(std::min(r, b) + 1);
        next[0] = Laurent(1);
        for (int k = 1; k < (int)next.size(); ++k) {
            Laurent up = k < (int)row.size() ? row[k] : Laurent(0);
            next[k] = (k - 1 < (int)row.size() ? row[k - 1] : Laurent(0)) +
                      Laurent::q(k) * up;
        }
        row = std::move(next);
    }
    return row[b];
}

Laurent qint_balanced(int a) {
    if (a < 0) throw std::invalid_argument("qint_balanced: negative argument");
    Laurent r;
    for (int e = 1 - a; e <= a - 1; e += 2) r.add_term(e, 1);
    return r;
}

Laurent qbinom_balanced(int a, int b) {
    if (b < 0 || b > a) throw std::invalid_argument("qbinom_balanced: need 0 <= b <= a");
    Laurent num(1), den(1);
    for (int i = 0; i < b; ++i) {
        num *= qint_balanced(a - i);
        den *= qint_balanced(b - i);
    }
    auto q = div_exact(num, den);
    if (!q) throw std::runtime_error("qbinom_balanced: inexact division (arithmetic bug)");
    return *q;
}

}  // namespace nht
