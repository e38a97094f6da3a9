#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nht {

// A permutation of {1..n}, stored as 0-based images.  Composition applies
// the right factor first: (u*v)(i) = u(v(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(n) {
        for (int i = 0; i < n; ++i) img_[i] = i;
    }

    static Permutation identity(int n) { return Permutation(n); }
    // Simple reflection s_i swapping i and i+1 (1-based, 1 <= i <= n-1).
    static Permutation simple(int n, int i);
    // The longest element i -> n+1-i.
    static Permutation longest(int n);
    static Permutation from_one_line(const std::vector<int>& images_1based);

    int size() const { return (int)img_.size(); }
    // 0-based image of a 0-based position.
    int map0(int i) const { return img_[i]; }
    std::vector<int> one_line() const;  // 1-based images

    Permutation inverse() const;
    int length() const;  // inversion count
    bool is_identity() const;

    friend Permutation operator*(const Permutation& u, const Permutation& v);

    auto operator<=>(const Permutation&) const = default;

    std::string str() const;  // "[3,1,2]"

private:
    std::vector<int> img_;
};

// A word in the simple reflections; letters are 1-based indices.  The word
// [i1, i2, ..., il] evaluates to s_{i1} * s_{i2} * ... * s_{il}.
struct Word {
    std::vector<int> letters;
};

Permutation evaluate(const Word& w, int n);
bool is_reduced(const Word& w, int n);
// A reduced word for w, produced by repeatedly peeling a descent.
Word reduced_word(const Permutation& w);

// u*v when length(u*v) = length(u) + length(v), otherwise nullopt.
std::optional<Permutation> mul_length_additive(const Permutation& u, const Permutation& v);

// Minimal-length representatives r of the cosets (S_n x S_m)\S_{n+m}:
// length(u*r) = length(u) + length(r) for every u in the parabolic
// subgroup.  Exactly binom(n+m, n) of them, sorted by (length, one-line).
std::vector<Permutation> coset_reps_parabolic(int n, int m);

// Representatives of S_n inside S_{n+1} (the m = 1 case), ordered so the
// r-th entry has length r.
std::vector<Permutation> coset_reps_last(int n);

// w = v*u with u in S_n x S_m and v minimal for the left factorization
// (one-line of v increasing on each position block); lengths add.
std::pair<Permutation, Permutation> factor_parabolic_left(const Permutation& w, int n, int m);
// w = u*v with u in S_n x S_m and v as produced by coset_reps_parabolic.
std::pair<Permutation, Permutation> factor_parabolic_right(const Permutation& w, int n, int m);

}  // namespace nht
