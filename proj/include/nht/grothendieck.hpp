#pragma once

#include <map>
#include <vector>

#include "nht/functors.hpp"
#include "nht/qweyl.hpp"

namespace nht {

// An element of the projective-side ring K (basis [P_n]) or the
// finite-dimensional-side ring G (basis [L_n]), with Laurent coefficients.
enum class Side { K, G };

struct GrothClass {
    Side side = Side::G;
    std::map<int, Laurent> coeff;  // tower degree -> nonzero coefficient

    void add(int n, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeff.try_emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeff.erase(it);
        }
    }
    bool operator==(const GrothClass&) const = default;
    std::string str() const;
};

GrothClass k_basis(int n);  // [P_n]
GrothClass g_basis(int n);  // [L_n]

// The unique c [L_n] with c = gdim(M)/gdim(L_n); exact division, errors if
// the quotient is not an integer Laurent polynomial.
GrothClass class_of_module(const GradedModule& M);

// [P_n][P_m] = qbinom(n+m,n)|_{v=q^{-2}} [P_{n+m}], extended bilinearly.
GrothClass k_mul(const GrothClass& a, const GrothClass& b);

// [L_n][L_m] = q^{c(n,m)} [L_{n+m}] with the ledger's recorded shifts.
GrothClass g_mul(const GrothClass& a, const GrothClass& b, ShiftLedger& ledger);

// <[P_n], [L_n]> = gdim of the e_n truncation of L_n; classes in different
// tower degrees pair to zero.  Bilinear over the Laurent coefficients.
Laurent pairing(const GrothClass& p, const GrothClass& m);
Laurent pairing_basis(int np, int nl);

struct AxiomReport {
    std::string id;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// dual1 at (p, p') = ([P_n], [P_m]) against [L_{n+m}]: product-then-pair
// versus pair-against-the-restriction-coproduct.
AxiomReport bialgebra_dual1(int n, int m);
// dual2 at [P_{n+m}] against ([L_n], [L_m]): pair-with-product versus the
// projective coproduct evaluated through e_{n+m} IND(L_n (x) L_m).
AxiomReport bialgebra_dual2(int n, int m, ShiftLedger& ledger);
// dual3: [P_0] and [L_0] act as counits.
AxiomReport bialgebra_dual3(int n);

// The normalized decategorification map: a [L_n] -> subst(a) v^{sigma(n)/2} x^n,
// where subst sends q^{-2} to v.  Throws when a class has odd q-powers.
QPoly to_fock(const GrothClass& g, ShiftLedger& ledger);

// [I(N)] = [N] t and [TR_k(N)] = del^(k) [N] through to_fock.
struct DecatReport {
    std::string id;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};
std::vector<DecatReport> decategorify_check(const std::vector<GradedModule>& family,
                                            int k_max, ShiftLedger& ledger);

}  // namespace nht
