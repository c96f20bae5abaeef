#pragma once

#include "hopfforge/report.hpp"

namespace hopfforge {

struct AlgebraData {
    Obj obj;
    Mor mul;   // A⊗A → A
    Mor unit;  // 1 → A
};

struct CoalgebraData {
    Obj obj;
    Mor comul;   // B → B⊗B
    Mor counit;  // B → 1
};

/// An object with any subset of {mul, unit, comul, counit, antipode} and
/// flags recording which axiom groups have been verified.
struct HopfBundle {
    Obj obj;
    std::optional<Mor> mul, unit, comul, counit, antipode;
    bool algebra_verified = false;
    bool coalgebra_verified = false;
    bool bialgebra_verified = false;
    bool hopf_verified = false;

    AlgebraData algebra() const;
    CoalgebraData coalgebra() const;

    static HopfBundle from(const AlgebraData& a, const CoalgebraData& c);
};

CheckReport check_algebra(const AlgebraData& a);
CheckReport check_coalgebra(const CoalgebraData& c);

/// The seven displayed braided-bialgebra axioms plus ε∘η = id.
CheckReport check_bialgebra(const HopfBundle& h);

/// m∘(S⊗id)∘Δ = η∘ε = m∘(id⊗S)∘Δ for a candidate antipode
CheckReport check_antipode_axioms(const HopfBundle& h, const Mor& S);

/// antipode is an anti-algebra and anti-coalgebra morphism
CheckReport check_antipode_antimorphism(const HopfBundle& h);

/// runs all applicable checks and updates the verified flags
CheckReport verify(HopfBundle& h);

/// η_A ∘ ε_C, the convolution unit of Hom(C, A)
Mor convolution_unit(const CoalgebraData& c, const AlgebraData& a);

/// f * g = m_A ∘ (f⊗g) ∘ Δ_C
Mor convolution(const Mor& f, const Mor& g, const CoalgebraData& c, const AlgebraData& a);

enum class Sidedness { TwoSided, LeftOnly, RightOnly, None };

struct ConvInverse {
    std::optional<Mor> inv;
    Sidedness side = Sidedness::None;
};

/// Decides convolution invertibility by exact linear solvability. Absence is
/// a value, not an error. `seed` permutes the elimination order (used by the
/// uniqueness re-check); 0 keeps the canonical order.
ConvInverse convolution_inverse(const Mor& f, const CoalgebraData& c, const AlgebraData& a,
                                std::uint64_t seed = 0);

/// Convolution inverse of the identity; attaches it to h and flags Hopf when
/// it exists (h must be a verified bialgebra).
std::optional<Mor> antipode_of(HopfBundle& h);

// module / comodule axiom checks (left action B⊗X→X, right action X acting
// on the right of Y via Y⊗?; shapes as used throughout: ract: B⊗A→B means B
// is a right A-module carried on the left tensor factor)

CheckReport check_left_module(const Mor& lact, const AlgebraData& b);
CheckReport check_right_module_on_left(const Mor& ract, const AlgebraData& a);
CheckReport check_left_comodule(const Mor& lcoact, const CoalgebraData& b);
CheckReport check_right_comodule_on_left(const Mor& rcoact, const CoalgebraData& a);

/// left action of B on X⊗Y: (lactX⊗lactY)∘(id⊗c⊗id)∘(Δ_B⊗id⊗id)
Mor tensor_module_action(const Mor& lact_x, const Mor& lact_y, const CoalgebraData& b_co);
/// left coaction on X⊗Y: (m_B⊗id⊗id)∘(id⊗c⊗id)∘(lcoX⊗lcoY)
Mor tensor_comodule_coaction(const Mor& lco_x, const Mor& lco_y, const AlgebraData& b_alg);

/// plain transpose of every structure map: mul <-> comul, unit <-> counit
HopfBundle dual_bundle(const HopfBundle& h);

}  // namespace hopfforge
