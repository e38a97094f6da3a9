#include "nht/poly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nht {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly Poly::constant(int nvars, const Int& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("Poly::variable: index out of range");
    Monomial e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, e, 1);
}

Poly Poly::monomial(int nvars, const Monomial& e, const Int& c) {
    if ((int)e.size() != nvars) throw std::invalid_argument("Poly::monomial: exponent size mismatch");
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Monomial& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Int& c) {
    if (c == 0) { t_.clear(); return *this; }
    for (auto& [e, v] : t_) v *= c;
    return *this;
}

Poly operator-(const Poly& a) {
    Poly r(a.n_);
    for (auto& [e, c] : a.t_) r.t_[e] = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_);
    Monomial e(a.n_);
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) {
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

int Poly::total_degree() const {
    if (t_.empty()) return -1;
    auto& e = t_.rbegin()->first;  // grlex max has max total degree
    return std::accumulate(e.begin(), e.end(), 0);
}

std::optional<int> Poly::homogeneous_degree() const {
    std::optional<int> d;
    for (auto& [e, c] : t_) {
        int de = std::accumulate(e.begin(), e.end(), 0);
        if (!d) d = de;
        else if (*d != de) return std::nullopt;
    }
    return d;
}

Poly Poly::apply_perm(const Permutation& w) const {
    if (w.size() != n_) throw std::invalid_argument("Poly::apply_perm: size mismatch");
    Poly r(n_);
    Monomial e(n_);
    for (auto& [m, c] : t_) {
        for (int j = 0; j < n_; ++j) e[w.map0(j)] = m[j];
        r.add_term(e, c);
    }
    return r;
}

Poly divided_difference(int i, const Poly& p) {
    const int n = p.nvars();
    if (i < 1 || i > n - 1) throw std::invalid_argument("divided_difference: index out of range");
    Poly r(n);
    const int a = i - 1, b = i;  // 0-based slots
    Monomial e;
    for (auto& [m, c] : p.terms()) {
        const int al = m[a], be = m[b];
        if (al == be) continue;
        e = m;
        if (al > be) {
            for (int t = 0; t <= al - be - 1; ++t) {
                e[a] = be + t;
                e[b] = al - 1 - t;
                r.add_term(e, c);
            }
        } else {
            for (int t = 0; t <= be - al - 1; ++t) {
                e[a] = al + t;
                e[b] = be - 1 - t;
                r.add_term(e, -c);
            }
        }
    }
    return r;
}

namespace {
void compositions(Monomial& e, int slot, int last, int rem, Poly& out) {
    if (slot == last) {
        e[slot] = rem;
        out.add_term(e, 1);
        e[slot] = 0;
        return;
    }
    for (int t = 0; t <= rem; ++t) {
        e[slot] = t;
        compositions(e, slot + 1, last, rem - t, out);
    }
    e[slot] = 0;
}
}  // namespace

Poly complete_homogeneous(int nvars, int j, int k) {
    if (j < 1 || j > nvars) throw std::invalid_argument("complete_homogeneous: bad variable count");
    if (k < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
    Poly r(nvars);
    Monomial e(nvars, 0);
    compositions(e, 0, j - 1, k, r);
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any = false;
        std::ostringstream mono;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (any) mono << "*";
            mono << "x" << j + 1;
            if (e[j] != 1) mono << "^" << e[j];
            any = true;
        }
        if (!any) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << mono.str();
        }
    }
    return os.str();
}

Poly Poly::parse(const std::string& s, int nvars) {
    Poly out(nvars);
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip();
    if (i >= s.size()) throw std::invalid_argument("Poly::parse: empty input");
    if (s.compare(i, 1, "0") == 0 && i + 1 >= s.size()) return out;
    bool neg = false;
    if (s[i] == '-') { neg = true; ++i; }
    else if (s[i] == '+') ++i;
    while (true) {
        skip();
        Int coeff = 1;
        bool have = false;
        std::string digits;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
        if (!digits.empty()) { coeff = Int(digits); have = true; }
        Monomial e(nvars, 0);
        skip();
        while (i < s.size() && (s[i] == '*' || s[i] == 'x')) {
            if (s[i] == '*') { ++i; skip(); }
            if (i >= s.size() || s[i] != 'x') throw std::invalid_argument("Poly::parse: expected variable");
            ++i;
            std::string vd;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) vd += s[i++];
            if (vd.empty()) throw std::invalid_argument("Poly::parse: missing variable index");
            int vi = std::stoi(vd);
            if (vi < 1 || vi > nvars) throw std::invalid_argument("Poly::parse: variable out of range");
            int ex = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                skip();
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ed += s[i++];
                if (ed.empty()) throw std::invalid_argument("Poly::parse: missing exponent");
                ex = std::stoi(ed);
            }
            e[vi - 1] += ex;
            have = true;
            skip();
        }
        if (!have) throw std::invalid_argument("Poly::parse: dangling sign");
        out.add_term(e, neg ? Int(-coeff) : coeff);
        skip();
        if (i >= s.size()) break;
        if (s[i] != '+' && s[i] != '-') throw std::invalid_argument("Poly::parse: unexpected character");
        neg = s[i] == '-';
        ++i;
    }
    return out;
}

}  // namespace nht
