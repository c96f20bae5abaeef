#pragma once

#include "hopfforge/crossprod.hpp"

namespace hopfforge {

enum class ProjectionDirection { Equalizer, Coequalizer };

/// Split pair i: B→H, π: H→B with π∘i = id. In the equalizer direction π is
/// a bialgebra morphism and i an algebra morphism; in the coequalizer
/// direction i is a bialgebra morphism and π a coalgebra morphism.
struct ProjectionDatum {
    HopfBundle H;  // bialgebra; a Hopf algebra where antipode clauses apply
    HopfBundle B;  // Hopf algebra with antipode
    Mor i;         // B → H
    Mor pi;        // H → B
    ProjectionDirection direction = ProjectionDirection::Equalizer;
};

/// the direction-appropriate morphism and colinearity conditions, as exact
/// matrix identities keyed by stable equation labels
CheckReport check_projection_conditions(const ProjectionDatum& pd);

struct Reconstruction {
    Obj A;
    Mor j;   // A → H
    Mor p;   // H → A
    HopfBundle A_bundle;
    CrossDatum datum;
    HopfBundle bundle;  // assembled A⊗B bundle; antipode attached when H is Hopf
    Mor zeta;           // A⊗B → H
    Mor zeta_inv;       // H → A⊗B
    CheckReport report;
};

/// (A, j) = ker((id⊗π)Δ_H − id⊗η_B); structure induced through j and p
Reconstruction reconstruct_equalizer(const ProjectionDatum& pd);
/// (A, p) = coker(m_H(id⊗i) − id⊗ε_B); the dual route
Reconstruction reconstruct_coequalizer(const ProjectionDatum& pd);

struct SpecialProjections {
    bool biproduct = false;
    bool double_cross_coproduct = false;
    bool double_cross_product = false;
};

/// flags per Cor (biprodfromproj), Eq. (doblecrosscoprproj) and the
/// Cor (wpdoublecrossprod) identity; cross-validated against classify()
/// applied to the reconstructed datum
SpecialProjections check_special_projections(const ProjectionDatum& pd);

}  // namespace hopfforge
