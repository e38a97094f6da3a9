#include "nht/gmod.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace nht {

namespace {

bool degree_step_ok(const GradedModule& M, const ZMat& G, int step) {
    for (int r = 0; r < G.rows(); ++r)
        for (int c = 0; c < G.cols(); ++c)
            if (G.at(r, c) != 0 && M.degrees[r] != M.degrees[c] + step) return false;
    return true;
}

}  // namespace

bool check_module(const GradedModule& M) {
    const int n = M.n;
    const int dim = M.dim();
    if ((int)M.x.size() != n || (int)M.d.size() != std::max(0, n - 1)) return false;
    for (auto& g : M.x)
        if (g.rows() != dim || g.cols() != dim) return false;
    for (auto& g : M.d)
        if (g.rows() != dim || g.cols() != dim) return false;

    for (auto& g : M.x)
        if (!degree_step_ok(M, g, 2)) return false;
    for (auto& g : M.d)
        if (!degree_step_ok(M, g, -2)) return false;

    const ZMat id = ZMat::identity(dim);
    ZMat zero(dim, dim);
    // d_i^2 = 0
    for (int i = 1; i <= n - 1; ++i)
        if (!(M.d_mat(i) * M.d_mat(i) == zero)) return false;
    // braid and far commutation for the d's
    for (int i = 1; i <= n - 2; ++i) {
        if (!(M.d_mat(i) * M.d_mat(i + 1) * M.d_mat(i) ==
              M.d_mat(i + 1) * M.d_mat(i) * M.d_mat(i + 1)))
            return false;
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            if (!(M.d_mat(i) * M.d_mat(j) == M.d_mat(j) * M.d_mat(i))) return false;
    // polynomial part commutes
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!(M.x_mat(i) * M.x_mat(j) == M.x_mat(j) * M.x_mat(i))) return false;
    // x_j commutes with d_i unless j is i or i+1
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            if (!(M.x_mat(j) * M.d_mat(i) == M.d_mat(i) * M.x_mat(j))) return false;
        }
    // x_i d_i - d_i x_{i+1} = 1 and d_i x_i - x_{i+1} d_i = 1
    for (int i = 1; i <= n - 1; ++i) {
        if (!(M.x_mat(i) * M.d_mat(i) - M.d_mat(i) * M.x_mat(i + 1) == id)) return false;
        if (!(M.d_mat(i) * M.x_mat(i) - M.x_mat(i + 1) * M.d_mat(i) == id)) return false;
    }
    return true;
}

Laurent gdim(const GradedModule& M) {
    Laurent g;
    for (int d : M.degrees) g.add_term(d, 1);
    return g;
}

GradedModule shift(const GradedModule& M, int dshift) {
    GradedModule S = M;
    for (auto& d : S.degrees) d += dshift;
    return S;
}

std::vector<Int> act(const GradedModule& M, const NHElement& a, const std::vector<Int>& v) {
    if (a.strands() != M.n) throw std::invalid_argument("act: strand mismatch");
    if ((int)v.size() != M.dim()) throw std::invalid_argument("act: dimension mismatch");
    std::vector<Int> out(M.dim());
    for (auto& [w, p] : a.terms()) {
        // rightmost factor acts first: first d_w, then the monomials
        std::vector<Int> cur = v;
        Word word = reduced_word(w);
        for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
            cur = M.d_mat(*it) * cur;
        for (auto& [e, c] : p.terms()) {
            std::vector<Int> t = cur;
            for (int i = 0; i < M.n; ++i)
                for (int k = 0; k < e[i]; ++k) t = M.x_mat(i + 1) * t;
            for (int r = 0; r < M.dim(); ++r)
                if (t[r] != 0) out[r] += c * t[r];
        }
    }
    return out;
}

ZMat matrix_of(const GradedModule& M, const NHElement& a) {
    ZMat out(M.dim(), M.dim());
    std::vector<Int> e(M.dim());
    for (int j = 0; j < M.dim(); ++j) {
        std::fill(e.begin(), e.end(), Int(0));
        e[j] = 1;
        auto col = act(M, a, e);
        for (int i = 0; i < M.dim(); ++i) out.at(i, j) = col[i];
    }
    return out;
}

const std::vector<Monomial>& staircase_basis(int n) {
    static std::map<int, std::vector<Monomial>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Monomial> basis;
    Monomial e(n, 0);
    // odometer over 0 <= e[i] <= n-1-i
    while (true) {
        basis.push_back(e);
        int i = n - 1;
        while (i >= 0 && e[i] == n - 1 - i) --i;
        if (i < 0) break;
        ++e[i];
        for (int j = i + 1; j < n; ++j) e[j] = 0;
    }
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        return GrlexLess{}(a, b);
    });
    return cache.emplace(n, std::move(basis)).first->second;
}

Poly reduce_coinvariant_poly(int n, const Poly& p) {
    if (p.nvars() != n) throw std::invalid_argument("reduce_coinvariant: variable mismatch");
    // rewrite x_i^{n-i+1} using the staircase relation whose head it is;
    // every replacement monomial is smaller in right-to-left lex
    std::vector<Poly> h(n + 1, Poly(n));
    for (int i = 1; i <= n; ++i) h[i] = complete_homogeneous(n, i, n - i + 1);
    Poly cur = p;
    while (true) {
        bool found = false;
        for (auto& [e, c] : cur.terms()) {
            int bad = -1;
            for (int i = n; i >= 1 && bad < 0; --i)
                if (e[i - 1] > n - i) bad = i;
            if (bad < 0) continue;
            Monomial rest = e;
            rest[bad - 1] -= n - bad + 1;
            // x^e  ->  x^e - x^rest * h_{n-bad+1}(x_1..x_bad)
            cur -= Poly::monomial(n, rest, c) * h[bad];
            found = true;
            break;
        }
        if (!found) break;
    }
    return cur;
}

std::vector<Int> reduce_coinvariant(int n, const Poly& p) {
    Poly red = reduce_coinvariant_poly(n, p);
    auto& basis = staircase_basis(n);
    std::vector<Int> v(basis.size());
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = (int)i;
    for (auto& [e, c] : red.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw std::runtime_error("reduce_coinvariant: reduction left a non-staircase monomial");
        v[it->second] = c;
    }
    return v;
}

GradedModule coinvariant_simple(int n) {
    if (n < 0) throw std::invalid_argument("coinvariant_simple: negative strand count");
    GradedModule M;
    M.n = n;
    if (n == 0) {
        M.degrees = {0};
        return M;
    }
    auto& basis = staircase_basis(n);
    const int dim = (int)basis.size();
    M.degrees.resize(dim);
    for (int j = 0; j < dim; ++j)
        M.degrees[j] = 2 * std::accumulate(basis[j].begin(), basis[j].end(), 0);
    M.x.assign(n, ZMat(dim, dim));
    M.d.assign(n - 1, ZMat(dim, dim));
    for (int j = 0; j < dim; ++j) {
        Poly mono = Poly::monomial(n, basis[j], 1);
        for (int i = 1; i <= n; ++i) {
            auto col = reduce_coinvariant(n, Poly::variable(n, i) * mono);
            for (int r = 0; r < dim; ++r) M.x[i - 1].at(r, j) = col[r];
        }
        for (int i = 1; i <= n - 1; ++i) {
            auto col = reduce_coinvariant(n, divided_difference(i, mono));
            for (int r = 0; r < dim; ++r) M.d[i - 1].at(r, j) = col[r];
        }
    }
    return M;
}

Truncation idempotent_truncation(const GradedModule& M, const NHElement& e) {
    ZMat E = matrix_of(M, e);
    if (!(E * E == E)) throw std::invalid_argument("idempotent_truncation: element is not idempotent");
    ZMat B = lattice_column_echelon(E);
    Truncation T;
    T.basis = B;
    T.degrees.resize(B.cols());
    for (int j = 0; j < B.cols(); ++j) {
        int p = 0;
        while (p < B.rows() && B.at(p, j) == 0) ++p;
        T.degrees[j] = M.degrees[p];
    }
    return T;
}

std::string to_json(const GradedModule& M) {
    nlohmann::ordered_json j;
    j["n"] = M.n;
    j["degrees"] = M.degrees;
    auto pack = [](const ZMat& G) {
        nlohmann::ordered_json m = nlohmann::ordered_json::array();
        for (int r = 0; r < G.rows(); ++r)
            for (int c = 0; c < G.cols(); ++c)
                if (G.at(r, c) != 0)
                    m.push_back({r, c, G.at(r, c).str()});
        return m;
    };
    j["x"] = nlohmann::ordered_json::array();
    for (auto& g : M.x) j["x"].push_back(pack(g));
    j["d"] = nlohmann::ordered_json::array();
    for (auto& g : M.d) j["d"].push_back(pack(g));
    return j.dump(2);
}

GradedModule module_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GradedModule M;
    M.n = j.at("n").get<int>();
    M.degrees = j.at("degrees").get<std::vector<int>>();
    const int dim = (int)M.degrees.size();
    auto unpack = [&](const nlohmann::json& m) {
        ZMat G(dim, dim);
        for (auto& entry : m) {
            int r = entry.at(0).get<int>();
            int c = entry.at(1).get<int>();
            G.at(r, c) = Int(entry.at(2).get<std::string>());
        }
        return G;
    };
    for (auto& m : j.at("x")) M.x.push_back(unpack(m));
    for (auto& m : j.at("d")) M.d.push_back(unpack(m));
    return M;
}

}  // namespace nht
