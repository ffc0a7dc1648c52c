// Demazure and Demazure-Lusztig operators on localized K-theory classes,
// their inverses and the bar involution, Grothendieck-Serre duality, and
// the algebraic "tilde" operators on K_T(pt)[y].
//
// Composition convention: for a reduced word w = s_{i1}...s_{ik} the word
// operator applies the i_k factor first, so that O_w = ∂_{w⁻¹}(ι_id) and
// MC_y(X(w)°) = T_{w⁻¹}(ι_id).
#pragma once

#include "kflag/kclasses.hpp"

namespace kflag {

struct NonPolynomialResult : std::runtime_error {
    NonPolynomialResult() : std::runtime_error("operator value failed to clear denominators") {}
};

enum class OpKind { Demazure, T, TDual, TInv, TDualInv };

// single-generator operators, i is 1-based
KClass demazure(int i, const KClass& f);
KClass t_op(int i, const KClass& f);
KClass t_dual_op(int i, const KClass& f);
KClass t_inv_op(int i, const KClass& f);
KClass t_dual_inv_op(int i, const KClass& f);

KClass apply_op(OpKind kind, int i, const KClass& f);

// A_w along the reduced word of w (rightmost factor applied first)
KClass apply_weyl_word(OpKind kind, int w, const KClass& f);
// bar(T_w) = T_{w⁻¹}^{-1} = TInv(i1)∘...∘TInv(ik)
KClass apply_bar_t(int w, const KClass& f);
KClass apply_bar_t_dual(int w, const KClass& f);

// D(f)|_w = (-1)^{dim X} (f|_w)^∨ · e^{2wρ}
KClass serre_dual(const KClass& f);

// algebraic operators on K_T(pt)[y] (arbitrary rational inputs)
RatChar tilde_demazure(const RootSystem& rs, int i, const RatChar& f);
RatChar tilde_t(const RootSystem& rs, int i, const RatChar& f);
RatChar tilde_t_dual(const RootSystem& rs, int i, const RatChar& f);

// Ã_w(e^λ); clears denominators, throws NonPolynomialResult on failure
CharPoly tilde_op(const RootSystem& rs, OpKind kind, int w, const Weight& lambda);

}  // namespace kflag
