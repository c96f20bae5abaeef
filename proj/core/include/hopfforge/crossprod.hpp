#pragma once

#include "hopfforge/structures.hpp"

namespace hopfforge {

/// (A, B, ψ, φ): two algebra-and-coalgebra bundles plus the two local
/// braidings ψ: B⊗A → A⊗B and φ: A⊗B → B⊗A.
struct CrossDatum {
    HopfBundle A, B;
    Mor psi, phi;
};

/// the four derived (co)actions of Lemmas 2.2/2.4
struct ActionCoactionDatum {
    Mor lact;    // B⊗A → A
    Mor ract;    // B⊗A → B
    Mor lcoact;  // A → B⊗A
    Mor rcoact;  // B → B⊗A
};

/// ψ/φ shapes and matching carriers; throws ShapeMismatch
void validate_cross_shapes(const CrossDatum& d);

/// (m_A⊗m_B)∘(id⊗ψ⊗id) on (A⊗B)⊗(A⊗B)
Mor build_cross_mul(const CrossDatum& d);
Mor cross_unit(const CrossDatum& d);
/// (id⊗φ⊗id)∘(Δ_A⊗Δ_B)
Mor build_cross_comul(const CrossDatum& d);
Mor cross_counit(const CrossDatum& d);
/// the A⊗B bundle carrying the cross structure maps (no antipode attached)
HopfBundle assemble_bundle(const CrossDatum& d);

CheckReport check_cross_product_algebra(const CrossDatum& d);    // (crossprodalg a-d)
CheckReport check_cross_product_coalgebra(const CrossDatum& d);  // (crossprodcoalg a-d)

/// (action1)/(coaction1) formulas without any verification
ActionCoactionDatum derived_actions_raw(const CrossDatum& d);
/// verified version: cross-product checks, (co)unit compatibilities and the
/// module/comodule axioms must hold, else PreconditionFailed
ActionCoactionDatum derive_actions(const CrossDatum& d);

/// ψ = (lact⊗ract)∘(id⊗c⊗id)∘(Δ_B⊗Δ_A), φ = (m_B⊗m_A)∘(id⊗c⊗id)∘(lcoact⊗rcoact)
std::pair<Mor, Mor> reconstruct_psi_phi(const ActionCoactionDatum& acts, const HopfBundle& A, const HopfBundle& B);

/// (crossbialgcond a-d) + (comultunitcomp a-c) + (multcounitcomp a-c) + ε∘η ids
CheckReport check_bat_direct(const CrossDatum& d);

/// subset is a string over "a".."h"
CheckReport check_neccconds(const CrossDatum& d, const std::string& subset = "abcdefgh");
/// subset over "a".."f"
CheckReport check_bespdrab(const CrossDatum& d, const std::string& subset = "abcdef");
/// which over "ab"; requires (neccconds c,g) to hold
CheckReport check_twoanothYD(const CrossDatum& d, const std::string& which = "ab");

enum class ConditionSet { II, III, IV, V, VI, VII };
ConditionSet condition_set_from_name(const std::string& name);
CheckReport check_condition_set(const CrossDatum& d, ConditionSet set);

enum class CharacterizationVariant { VII1, VII2, VII3, VII4 };
/// clauses (i)-(vi) plus the chosen (vii.k)
CheckReport check_action_coaction_conditions(const ActionCoactionDatum& acts, const HopfBundle& A, const HopfBundle& B,
                           CharacterizationVariant variant);

/// list is "crossprodalg2" or "crossprodcoalg2"
CheckReport check_aux_lists(const CrossDatum& d, const std::string& list);

/// ψ∘(s_B⊗S_A)∘φ, verified against the antipode axioms, the (defantcpHa) and
/// (deriveddefantcpHa) specializations, and the action/coaction formula
Mor build_cross_antipode(const CrossDatum& d, const Mor& S_A, const Mor& s_B);

struct Normality {
    bool psi_left_conormal = false;
    bool psi_right_conormal = false;
    bool phi_left_normal = false;
    bool phi_right_normal = false;
};
Normality normality(const CrossDatum& d);

struct Classification {
    bool smash_left = false, smash_right = false;
    bool cosmash_left = false, cosmash_right = false;
    bool biproduct_left = false, biproduct_right = false;
    bool double_cross_coproduct = false, double_cross_product = false;
    bool plain = false;
};
/// requires check_bat_direct to pass
Classification classify(const CrossDatum& d);

enum class SmashSide { Product, Coproduct };
/// the compatibility list of the smash cross (co)product structure theorem
CheckReport check_smash_conditions(const ActionCoactionDatum& acts, const HopfBundle& A, const HopfBundle& B,
                                   SmashSide side);

struct SmashDetection {
    bool psi_smash = false;
    bool phi_smash = false;
};
/// (psismashprod)/(phismashprod): does ψ (φ) equal the composite built from
/// its own derived (co)action?
SmashDetection check_smash_detection(const CrossDatum& d);

}  // namespace hopfforge
