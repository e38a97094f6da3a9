#include "nht/nilhecke.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nht {

void NHElement::add_term(const Permutation& w, const Poly& p) {
    if (p.is_zero()) return;
    if (w.size() != n_ || p.nvars() != n_)
        throw std::invalid_argument("NHElement::add_term: strand mismatch");
    auto [it, fresh] = t_.try_emplace(w, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NHElement& NHElement::operator+=(const NHElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("NHElement +: strand mismatch");
    for (auto& [w, p] : o.t_) add_term(w, p);
    return *this;
}

NHElement& NHElement::operator-=(const NHElement& o) {
    if (n_ != o.n_) throw std::invalid_argument("NHElement -: strand mismatch");
    for (auto& [w, p] : o.t_) add_term(w, -p);
    return *this;
}

NHElement& NHElement::operator*=(const Int& c) {
    if (c == 0) { t_.clear(); return *this; }
    for (auto& [w, p] : t_) p *= c;
    return *this;
}

NHElement operator-(const NHElement& a) {
    NHElement r(a.n_);
    for (auto& [w, p] : a.t_) r.t_[w] = -p;
    return r;
}

std::optional<int> NHElement::homogeneous_degree() const {
    std::optional<int> deg;
    for (auto& [w, p] : t_) {
        auto pd = p.homogeneous_degree();
        if (!pd) return std::nullopt;
        int d = 2 * *pd - 2 * w.length();
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

NHElement nh_zero(int n) { return NHElement(n); }

NHElement nh_one(int n) {
    NHElement r(n);
    r.add_term(Permutation::identity(n), Poly::constant(n, 1));
    return r;
}

NHElement nh_x(int n, int i) {
    NHElement r(n);
    r.add_term(Permutation::identity(n), Poly::variable(n, i));
    return r;
}

NHElement nh_d(int n, int i) {
    NHElement r(n);
    r.add_term(Permutation::simple(n, i), Poly::constant(n, 1));
    return r;
}

NHElement nh_poly(const Poly& p) {
    NHElement r(p.nvars());
    r.add_term(Permutation::identity(p.nvars()), p);
    return r;
}

NHElement nh_dw(int n, const Permutation& w) {
    NHElement r(n);
    r.add_term(w, Poly::constant(n, 1));
    return r;
}

namespace {

// Normal form of d_u * r for a polynomial r: a table z -> c_z(x) meaning
// sum_z c_z d_z.  Processes a reduced word of u right to left with
// d_i f = s_i(f) d_i + dd_i(f).
std::map<Permutation, Poly> push_poly_left(const Permutation& u, const Poly& r) {
    const int n = u.size();
    std::map<Permutation, Poly> table;
    table.emplace(Permutation::identity(n), r);
    Word word = reduced_word(u);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const int i = *it;
        const Permutation si = Permutation::simple(n, i);
        std::map<Permutation, Poly> next;
        auto put = [&](const Permutation& z, const Poly& c) {
            if (c.is_zero()) return;
            auto [slot, fresh] = next.try_emplace(z, c);
            if (!fresh) {
                slot->second += c;
                if (slot->second.is_zero()) next.erase(slot);
            }
        };
        for (auto& [z, c] : table) {
            if (auto siz = mul_length_additive(si, z)) put(*siz, c.swap_adjacent(i));
            put(z, divided_difference(i, c));
        }
        table = std::move(next);
    }
    return table;
}

}  // namespace

NHElement nh_mul(const NHElement& a, const NHElement& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("nh_mul: strand count mismatch");
    const int n = a.strands();
    NHElement out(n);
    for (auto& [u, p] : a.terms()) {
        for (auto& [v, r] : b.terms()) {
            auto table = push_poly_left(u, r);
            for (auto& [z, c] : table) {
                if (auto zv = mul_length_additive(z, v)) out.add_term(*zv, p * c);
            }
        }
    }
    return out;
}

NHElement psi(const NHElement& a) {
    const int n = a.strands();
    NHElement out(n);
    for (auto& [w, p] : a.terms()) {
        // psi(p d_w) = d_{w^{-1}} p, renormalized
        out += nh_mul(nh_dw(n, w.inverse()), nh_poly(p));
    }
    return out;
}

NHElement idempotent_e(int n) {
    if (n < 0) throw std::invalid_argument("idempotent_e: negative strand count");
    if (n == 0) return nh_one(0);
    Monomial e(n);
    for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
    NHElement r(n);
    r.add_term(Permutation::longest(n), Poly::monomial(n, e, 1));
    return r;
}

NHElement embed(const NHElement& a, int n_total, int offset) {
    const int k = a.strands();
    if (offset < 0 || offset + k > n_total)
        throw std::invalid_argument("embed: window out of range");
    NHElement out(n_total);
    for (auto& [w, p] : a.terms()) {
        std::vector<int> img(n_total);
        for (int i = 0; i < n_total; ++i) img[i] = i + 1;
        for (int i = 0; i < k; ++i) img[offset + i] = offset + w.map0(i) + 1;
        Permutation wext = Permutation::from_one_line(img);
        Poly pe(n_total);
        Monomial ee(n_total, 0);
        for (auto& [m, c] : p.terms()) {
            std::fill(ee.begin(), ee.end(), 0);
            for (int i = 0; i < k; ++i) ee[offset + i] = m[i];
            pe.add_term(ee, c);
        }
        out.add_term(wext, pe);
    }
    return out;
}

bool check_idem_recursion(int k) {
    if (k < 2) throw std::invalid_argument("check_idem_recursion: need k >= 2");
    Monomial e(k, 0);
    for (int i = 0; i < k - 1; ++i) e[i] = 1;
    Word word;
    for (int i = k - 1; i >= 1; --i) word.letters.push_back(i);
    NHElement head(k);
    head.add_term(evaluate(word, k), Poly::monomial(k, e, 1));
    NHElement rhs = nh_mul(head, embed(idempotent_e(k - 1), k, 0));
    return rhs == idempotent_e(k);
}

bool check_vanishing(int n, int k) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("check_vanishing: need 1 <= k <= n+1");
    const int N = n + 1;
    NHElement top = embed(nh_dw(k, Permutation::longest(k)), N, N - k);
    for (int i = n + 2 - k; i <= n; ++i) {
        if (!nh_mul(top, nh_d(N, i)).is_zero()) return false;
    }
    for (int r = 1; r <= n + 1 - k; ++r) {
        NHElement prod = top;
        for (int i = r; i <= n; ++i) prod = nh_mul(prod, nh_d(N, i));
        if (prod.is_zero()) return false;
    }
    return true;
}

namespace {

bool in_parabolic(const Permutation& w, int n) {
    // block {0..n-1} preserved implies the complement is preserved too
    for (int i = 0; i < n; ++i)
        if (w.map0(i) >= n) return false;
    return true;
}

}  // namespace

std::map<Permutation, NHElement> decompose_left(const NHElement& a, int n, int m) {
    if (a.strands() != n + m) throw std::invalid_argument("decompose_left: strand mismatch");
    const int N = n + m;
    std::map<Permutation, NHElement> out;
    NHElement work = a;
    while (!work.is_zero()) {
        // take a term of maximal length
        const Permutation* wbest = nullptr;
        const Poly* pbest = nullptr;
        int lbest = -1;
        for (auto& [w, p] : work.terms()) {
            int l = w.length();
            if (l > lbest) { lbest = l; wbest = &w; pbest = &p; }
        }
        auto [v, u] = factor_parabolic_left(*wbest, n, m);
        NHElement c(N);
        c.add_term(u, pbest->apply_perm(v.inverse()));
        auto [it, fresh] = out.try_emplace(v, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
        // subtract d_v * c; its top term reproduces p d_w exactly and every
        // other term is strictly shorter
        work -= nh_mul(nh_dw(N, v), c);
    }
    return out;
}

std::map<Permutation, NHElement> decompose_right(const NHElement& a, int n, int m) {
    if (a.strands() != n + m) throw std::invalid_argument("decompose_right: strand mismatch");
    const int N = n + m;
    std::map<Permutation, NHElement> out;
    for (auto& [w, p] : a.terms()) {
        auto [u, v] = factor_parabolic_right(w, n, m);
        NHElement c(N);
        c.add_term(u, p);
        auto [it, fresh] = out.try_emplace(v, c);
        if (!fresh) it->second += c;
    }
    return out;
}

std::vector<std::pair<NHElement, NHElement>> split_tensor(const NHElement& c, int n, int m) {
    if (c.strands() != n + m) throw std::invalid_argument("split_tensor: strand mismatch");
    std::vector<std::pair<NHElement, NHElement>> out;
    for (auto& [u, p] : c.terms()) {
        if (!in_parabolic(u, n))
            throw std::invalid_argument("split_tensor: permutation not in the parabolic subgroup");
        std::vector<int> u1(n), u2(m);
        for (int i = 0; i < n; ++i) u1[i] = u.map0(i) + 1;
        for (int i = 0; i < m; ++i) u2[i] = u.map0(n + i) - n + 1;
        Permutation w1 = n > 0 ? Permutation::from_one_line(u1) : Permutation::identity(0);
        Permutation w2 = m > 0 ? Permutation::from_one_line(u2) : Permutation::identity(0);
        for (auto& [e, coeff] : p.terms()) {
            Monomial e1(e.begin(), e.begin() + n), e2(e.begin() + n, e.end());
            NHElement a1(n), a2(m);
            a1.add_term(w1, Poly::monomial(n, e1, coeff));
            a2.add_term(w2, Poly::monomial(m, e2, 1));
            out.emplace_back(std::move(a1), std::move(a2));
        }
    }
    return out;
}

std::string NHElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, p] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ") d" << w.str();
    }
    return os.str();
}

NHElement NHElement::parse(const std::string& s, int n) {
    NHElement out(n);
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip();
    if (i < s.size() && s[i] == '0' && i + 1 >= s.size()) return out;
    while (i < s.size()) {
        skip();
        if (s[i] == '+') { ++i; skip(); }
        if (s[i] != '(') throw std::invalid_argument("NHElement::parse: expected '('");
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("NHElement::parse: missing ')'");
        Poly p = Poly::parse(s.substr(i + 1, close - i - 1), n);
        i = close + 1;
        skip();
        if (i >= s.size() || s[i] != 'd') throw std::invalid_argument("NHElement::parse: expected 'd'");
        ++i;
        if (i >= s.size() || s[i] != '[') throw std::invalid_argument("NHElement::parse: expected '['");
        size_t rb = s.find(']', i);
        if (rb == std::string::npos) throw std::invalid_argument("NHElement::parse: missing ']'");
        std::vector<int> img;
        std::string body = s.substr(i + 1, rb - i - 1);
        std::istringstream bs(body);
        std::string tok;
        while (std::getline(bs, tok, ',')) img.push_back(std::stoi(tok));
        if ((int)img.size() != n) throw std::invalid_argument("NHElement::parse: permutation size mismatch");
        out.add_term(Permutation::from_one_line(img), p);
        i = rb + 1;
        skip();
    }
    return out;
}

}  // namespace nht
