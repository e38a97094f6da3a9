#include "nht/qweyl.hpp"

#include <sstream>
#include <vector>

namespace nht {

std::string QPoly::str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [n, c] : coeff) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str("v") << ")";
        if (n > 0) {
            os << "*x";
            if (n > 1) os << "^" << n;
        }
    }
    return os.str();
}

std::string DElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str("v") << ")";
        if (key.first > 0) {
            os << "*x";
            if (key.first > 1) os << "^" << key.first;
        }
        if (key.second > 0) os << "*del^(" << key.second << ")";
    }
    return os.str();
}

DElement d_x(int a) {
    DElement r;
    r.add(a, 0, Laurent(1));
    return r;
}

DElement d_del(int m) {
    DElement r;
    r.add(0, m, Laurent(1));
    return r;
}

DElement d_one() { return d_x(0); }

DElement d_add(const DElement& a, const DElement& b) {
    DElement r = a;
    for (auto& [k, c] : b.terms) r.add(k.first, k.second, c);
    return r;
}

namespace {

// Normal form of del^(m) x^b, memoized.
const DElement& nf_del_x(int m, int b) {
    static std::map<std::pair<int, int>, DElement> cache;
    auto key = std::make_pair(m, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    DElement r;
    if (m == 0) {
        r.add(b, 0, Laurent(1));
    } else if (b == 0) {
        r.add(0, m, Laurent(1));
    } else {
        // del^(m) x^b = v^m x del^(m) x^{b-1} + del^(m-1) x^{b-1}
        for (auto& [k, c] : nf_del_x(m, b - 1).terms)
            r.add(k.first + 1, k.second, Laurent::q(m) * c);
        for (auto& [k, c] : nf_del_x(m - 1, b - 1).terms) r.add(k.first, k.second, c);
    }
    return cache.emplace(key, std::move(r)).first->second;
}

}  // namespace

DElement d_mul(const DElement& a, const DElement& b) {
    DElement out;
    for (auto& [ka, ca] : a.terms) {
        const auto [aa, ma] = ka;
        for (auto& [kb, cb] : b.terms) {
            const auto [ab, mb] = kb;
            const Laurent coeff = ca * cb;
            // x^{aa} del^(ma) x^{ab} del^(mb)
            for (auto& [k, c] : nf_del_x(ma, ab).terms) {
                const auto [xc, mc] = k;
                out.add(aa + xc, mc + mb, coeff * c * qbinom(mc + mb, mb));
            }
        }
    }
    return out;
}

QPoly d_act(const DElement& a, const QPoly& p) {
    QPoly out;
    for (auto& [k, c] : a.terms) {
        const auto [xa, m] = k;
        for (auto& [n, pc] : p.coeff) {
            if (m > n) continue;
            out.add(xa + n - m, c * pc * qbinom(n, m));
        }
    }
    return out;
}

namespace {

QPoly qp_scale(const Laurent& c, const QPoly& p) {
    QPoly r;
    for (auto& [n, v] : p.coeff) r.add(n, c * v);
    return r;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    for (auto& [n, v] : b.coeff) r.add(n, v);
    return r;
}

}  // namespace

bool rep_check(int bound) {
    std::vector<DElement> gens;
    gens.push_back(d_x());
    for (int m = 0; m <= bound; ++m) gens.push_back(d_del(m));
    for (int j = 0; j <= bound; ++j) {
        QPoly xj;
        xj.add(j, Laurent(1));
        // the action respects the normal-form product on generator pairs
        for (auto& a : gens)
            for (auto& b : gens)
                if (!(d_act(d_mul(a, b), xj) == d_act(a, d_act(b, xj)))) return false;
        // both defining relation families annihilate x^j through the action
        for (int m = 0; m <= bound; ++m) {
            for (int n = 0; m + n <= bound; ++n) {
                QPoly lhs = d_act(d_del(m), d_act(d_del(n), xj));
                QPoly rhs = qp_scale(qbinom(m + n, n), d_act(d_del(m + n), xj));
                if (!(lhs == rhs)) return false;
            }
            QPoly lhs = d_act(d_del(m), d_act(d_x(), xj));
            QPoly rhs = qp_scale(Laurent::q(m), d_act(d_x(), d_act(d_del(m), xj)));
            if (m >= 1) rhs = qp_add(rhs, d_act(d_del(m - 1), xj));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

bool confluence_check(int bound) {
    for (int m = 0; m <= bound; ++m)
        for (int k = 0; k <= bound; ++k) {
            const DElement nf = d_mul(d_del(m), d_x(k));
            for (int j = 0; j <= bound; ++j) {
                QPoly xj;
                xj.add(j, Laurent(1));
                QPoly via_nf = d_act(nf, xj);
                QPoly direct;
                if (m <= k + j) direct.add(k + j - m, qbinom(k + j, m));
                if (!(via_nf == direct)) return false;
            }
        }
    return true;
}

}  // namespace nht
