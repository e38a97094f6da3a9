#pragma once

#include <map>
#include <string>
#include <utility>

#include "nht/gmod.hpp"

namespace nht {

// A module restricted to the two parabolic factors: same underlying graded
// space, generator matrices of the embedded NH_n and NH_m.
struct BiModulePair {
    GradedModule left;   // over NH_n, acting on strands 1..n
    GradedModule right;  // over NH_m, acting on strands n+1..n+m
};

// Induction along NH_n (x) NH_m -> NH_{n+m}.  Basis d_v (x) (n_i (x) m_j)
// over the left-minimal coset representatives v; degree of a basis vector
// is deg n_i + deg m_j - 2 length(v).
GradedModule induce(const GradedModule& N, const GradedModule& M);

// Graded dimension of induce(N, M) without building the action.
Laurent induce_gdim(const GradedModule& N, const GradedModule& M);

BiModulePair restrict_module(const GradedModule& M, int n, int m);
// Both factors satisfy their relations and the two generator sets commute.
bool check_bimodule(const BiModulePair& B);

// Induction by the one-strand simple: N -> induce(N, L_1).
GradedModule functor_I(const GradedModule& N);

// Truncation by the idempotent e_k placed on the last k strands, with the
// leading NH_{n-k} action on the image; the zero module when k > n.
GradedModule functor_TR(const GradedModule& N, int k);

struct ClaimReport {
    std::string id;
    std::string lhs;
    std::string rhs;
    int shift = 0;
    bool pass = false;
};

// gdim TR_k(I(N)) = gdim TR_{k-1}(N) + q^{-2k} gdim I(TR_k(N)), plus the
// witness that e_k applied to the embedded copy of N inside I(N) spans a
// subspace with the graded dimension of TR_{k-1}(N).
ClaimReport ses_check(const GradedModule& N, int k);

// gdim TR_l(TR_k(N)) = qbinom(l+k,k)|_{v=q^{-2}} * gdim TR_{l+k}(N).
ClaimReport compose_TR_check(const GradedModule& N, int k, int l);

// gdim I(I(N)) = gdim of induction by the two-strand induced module.
ClaimReport compose_I_check(const GradedModule& N);

// The record of "isomorphism up to one q-power" normalizations.  c(n,m) is
// the empirical shift in gdim IND(L_n (x) L_m) = q^{c(n,m)} gdim L_{n+m};
// the whole system is consistent iff one function sigma with sigma(0) =
// sigma(1) = 0 satisfies c(n,m) = sigma(n+m) - sigma(n) - sigma(m).
class ShiftLedger {
public:
    int c(int n, int m);
    int sigma(int n);
    bool consistent(int upto);
    const std::map<std::pair<int, int>, int>& recorded() const { return c_; }

private:
    const GradedModule& simple(int n);
    std::map<int, GradedModule> simples_;
    std::map<std::pair<int, int>, int> c_;
    std::map<int, int> sigma_;
};

}  // namespace nht
