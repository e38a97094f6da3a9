#include "nht/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nht {

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("Permutation::simple: index out of range");
    Permutation w(n);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
}

Permutation Permutation::longest(int n) {
    Permutation w(n);
    std::reverse(w.img_.begin(), w.img_.end());
    return w;
}

Permutation Permutation::from_one_line(const std::vector<int>& images_1based) {
    Permutation w((int)images_1based.size());
    std::vector<bool> seen(images_1based.size(), false);
    for (size_t i = 0; i < images_1based.size(); ++i) {
        int v = images_1based[i] - 1;
        if (v < 0 || v >= (int)images_1based.size() || seen[v])
            throw std::invalid_argument("Permutation::from_one_line: not a bijection");
        seen[v] = true;
        w.img_[i] = v;
    }
    return w;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[i] = img_[i] + 1;
    return r;
}

Permutation Permutation::inverse() const {
    Permutation w(size());
    for (int i = 0; i < size(); ++i) w.img_[img_[i]] = i;
    return w;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Permutation product: size mismatch");
    Permutation w(u.size());
    for (int i = 0; i < u.size(); ++i) w.img_[i] = u.img_[v.img_[i]];
    return w;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << img_[i] + 1;
    os << "]";
    return os.str();
}

Permutation evaluate(const Word& w, int n) {
    Permutation p(n);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        p = Permutation::simple(n, *it) * p;
    return p;
}

bool is_reduced(const Word& w, int n) {
    return (int)w.letters.size() == evaluate(w, n).length();
}

Word reduced_word(const Permutation& w) {
    Word out;
    Permutation cur = w;
    const int n = w.size();
    while (!cur.is_identity()) {
        // a right descent: cur(i) > cur(i+1); peeling s_i shortens by one
        int i = 1;
        while (i <= n - 1 && cur.map0(i - 1) < cur.map0(i)) ++i;
        out.letters.push_back(i);
        cur = cur * Permutation::simple(n, i);
    }
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

std::optional<Permutation> mul_length_additive(const Permutation& u, const Permutation& v) {
    Permutation w = u * v;
    if (w.length() != u.length() + v.length()) return std::nullopt;
    return w;
}

std::vector<Permutation> coset_reps_parabolic(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("coset_reps_parabolic: negative block size");
    const int N = n + m;
    std::vector<Permutation> reps;
    // One representative per n-subset A of {0..N-1}: the inverse maps the
    // first value block onto A in increasing order.
    std::vector<int> pick(N, 0);
    std::fill(pick.begin(), pick.begin() + n, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
        std::vector<int> img(N);
        int a = 0, b = 0;
        for (int pos = 0; pos < N; ++pos) {
            if (pick[pos]) img[pos] = a++;
            else img[pos] = n + b++;
        }
        std::vector<int> img1(N);
        for (int i = 0; i < N; ++i) img1[i] = img[i] + 1;
        reps.push_back(Permutation::from_one_line(img1));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(reps.begin(), reps.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        return la != lb ? la < lb : a < b;
    });
    return reps;
}

std::vector<Permutation> coset_reps_last(int n) {
    auto reps = coset_reps_parabolic(n, 1);  // already sorted by length 0..n
    return reps;
}

std::pair<Permutation, Permutation> factor_parabolic_left(const Permutation& w, int n, int m) {
    if (w.size() != n + m) throw std::invalid_argument("factor_parabolic_left: size mismatch");
    const int N = n + m;
    std::vector<int> vimg(N), uimg(N);
    for (int blk = 0; blk < 2; ++blk) {
        const int b0 = blk == 0 ? 0 : n;
        const int b1 = blk == 0 ? n : N;
        std::vector<int> vals;
        for (int i = b0; i < b1; ++i) vals.push_back(w.map0(i));
        std::vector<int> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        for (int t = 0; t < b1 - b0; ++t) vimg[b0 + t] = sorted[t];
        for (int i = b0; i < b1; ++i) {
            int rank = (int)(std::lower_bound(sorted.begin(), sorted.end(), vals[i - b0]) - sorted.begin());
            uimg[i] = b0 + rank;
        }
    }
    std::vector<int> v1(N), u1(N);
    for (int i = 0; i < N; ++i) { v1[i] = vimg[i] + 1; u1[i] = uimg[i] + 1; }
    return {Permutation::from_one_line(v1), Permutation::from_one_line(u1)};
}

std::pair<Permutation, Permutation> factor_parabolic_right(const Permutation& w, int n, int m) {
    auto [vl, ul] = factor_parabolic_left(w.inverse(), n, m);
    return {ul.inverse(), vl.inverse()};  // w = u * v
}

}  // namespace nht
