#include "hopfforge/projection.hpp"

namespace hopfforge {

namespace {

struct Pr {
    Obj H, B, U;
    Mor mH, uH, dH, eH;
    Mor mB, uB, dB, eB;
    Mor i, pi, sB;
    Mor idH, idB;
    std::optional<Mor> SH;
    Mor ptilde;  // m_H ∘ (id ⊗ i s̲ π) ∘ Δ_H

    explicit Pr(const ProjectionDatum& pd)
        : H(pd.H.obj),
          B(pd.B.obj),
          U(Obj::unit(pd.H.obj.ctx())),
          mH(pd.H.algebra().mul),
          uH(pd.H.algebra().unit),
          dH(pd.H.coalgebra().comul),
          eH(pd.H.coalgebra().counit),
          mB(pd.B.algebra().mul),
          uB(pd.B.algebra().unit),
          dB(pd.B.coalgebra().comul),
          eB(pd.B.coalgebra().counit),
          i(pd.i),
          pi(pd.pi),
          sB(pd.B.antipode ? *pd.B.antipode : throw MissingStructure("antipode of B")),
          idH(Mor::identity(H)),
          idB(Mor::identity(B)),
          SH(pd.H.antipode),
          ptilde(Pipe(H, {Stage{dH}, Stage{idH, compose(i, compose(sB, pi))}, Stage{mH}}).eval()) {
        if (!i.dom().graded_equal(B) || !i.cod().graded_equal(H)) throw ShapeMismatch("i must be B→H");
        if (!pi.dom().graded_equal(H) || !pi.cod().graded_equal(B)) throw ShapeMismatch("pi must be H→B");
    }
};

void add_algebra_morphism(CheckReport& rep, const std::string& prefix, const Pr& q, const Mor& f,
                          const AlgebraData& from, const AlgebraData& to) {
    rep.add(prefix + "mult", pipe_diff(Pipe(from.obj.tensor(from.obj), {Stage{from.mul}, Stage{f}}),
                                       Pipe(from.obj.tensor(from.obj), {Stage{f, f}, Stage{to.mul}})));
    rep.add(prefix + "unit",
            pipe_diff(Pipe(q.U, {Stage{from.unit}, Stage{f}}), Pipe(q.U, {Stage{to.unit}})));
}

void add_coalgebra_morphism(CheckReport& rep, const std::string& prefix, const Pr& q, const Mor& f,
                            const CoalgebraData& from, const CoalgebraData& to) {
    rep.add(prefix + "comult", pipe_diff(Pipe(from.obj, {Stage{f}, Stage{to.comul}}),
                                         Pipe(from.obj, {Stage{from.comul}, Stage{f, f}})));
    rep.add(prefix + "counit",
            pipe_diff(Pipe(from.obj, {Stage{f}, Stage{to.counit}}), Pipe(from.obj, {Stage{from.counit}})));
    (void)q;
}

}  // namespace

CheckReport check_projection_conditions(const ProjectionDatum& pd) {
    Pr q(pd);
    AlgebraData Ha = pd.H.algebra(), Ba = pd.B.algebra();
    CoalgebraData Hc = pd.H.coalgebra(), Bc = pd.B.coalgebra();
    CheckReport rep;
    rep.add("pi∘i=id", mor_diff(compose(q.pi, q.i), q.idB));

    if (pd.direction == ProjectionDirection::Equalizer) {
        add_algebra_morphism(rep, "pi.bialgebra_morphism.", q, q.pi, Ha, Ba);
        add_coalgebra_morphism(rep, "pi.bialgebra_morphism.", q, q.pi, Hc, Bc);
        add_algebra_morphism(rep, "i.algebra_morphism.", q, q.i, Ba, Ha);
        // (piiscpb a): i is right B-colinear
        rep.add("piiscpb.a", pipe_diff(Pipe(q.B, {Stage{q.i}, Stage{q.dH}, Stage{q.idH, q.pi}}),
                                       Pipe(q.B, {Stage{q.dB}, Stage{q.i, q.idB}})));
        // (piiscpb b)
        rep.add("piiscpb.b",
                pipe_diff(Pipe(q.B, {Stage{q.dB}, Stage{q.i, compose(q.i, q.sB)}, Stage{q.dH, q.idH},
                                     Stage{q.idH, q.mH}}),
                          Pipe(q.B, {Stage{q.i}, Stage{q.dH}, Stage{compose(q.i, q.pi), q.ptilde}})));
        // (antscpb b), when H carries an antipode
        if (q.SH)
            rep.add("antscpb.b",
                    pipe_diff(Pipe(q.B, {Stage{q.i}, Stage{q.dH}, Stage{compose(q.i, q.pi), *q.SH},
                                         Stage{q.mH}}),
                              Pipe(q.B, {Stage{q.eB}, Stage{q.uH}})));
    } else {
        add_algebra_morphism(rep, "i.bialgebra_morphism.", q, q.i, Ba, Ha);
        add_coalgebra_morphism(rep, "i.bialgebra_morphism.", q, q.i, Bc, Hc);
        add_coalgebra_morphism(rep, "pi.coalgebra_morphism.", q, q.pi, Hc, Bc);
        // (carprofcccHa a): π is right B-linear
        rep.add("carprofcccHa.a",
                pipe_diff(Pipe(q.H.tensor(q.B), {Stage{q.idH, q.i}, Stage{q.mH}, Stage{q.pi}}),
                          Pipe(q.H.tensor(q.B), {Stage{q.pi, q.idB}, Stage{q.mB}})));
        // (carprofcccHa b)
        rep.add("carprofcccHa.b",
                pipe_diff(Pipe(q.H.tensor(q.H), {Stage{q.idH, q.dH}, Stage{q.mH, q.pi}, Stage{q.pi, q.sB},
                                                 Stage{q.mB}}),
                          Pipe(q.H.tensor(q.H),
                               {Stage{compose(q.i, q.pi), q.ptilde}, Stage{q.mH}, Stage{q.pi}})));
        if (q.SH)
            rep.add("carprofcccHaAnt",
                    pipe_diff(Pipe(q.H, {Stage{q.dH}, Stage{compose(q.i, q.pi), *q.SH}, Stage{q.mH},
                                         Stage{q.pi}}),
                              Pipe(q.H, {Stage{q.eH}, Stage{q.uB}})));
    }
    return rep;
}

namespace {

Mor factor_through_injection(const Mor& j, const Mor& target, const std::string& context) {
    // solve j ∘ x = target; j has full column rank, so x is unique
    auto x = solve_columns(j.mat(), target.mat());
    if (!x) throw FactorizationFailed(context);
    if (!j.mat().mul(*x).equal(target.mat())) throw FactorizationFailed(context);
    return Mor(target.dom(), j.dom(), std::move(*x));
}

Mor factor_through_surjection(const Mor& p, const Mor& target, const std::string& context) {
    // solve x ∘ p = target
    auto x = solve_rows(p.mat(), target.mat());
    if (!x) throw FactorizationFailed(context);
    if (!x->mul(p.mat()).equal(target.mat())) throw FactorizationFailed(context);
    return Mor(p.cod(), target.cod(), std::move(*x));
}

struct CommonOut {
    HopfBundle A_bundle;
    CrossDatum datum;
    HopfBundle bundle;
    Mor zeta, zeta_inv;
};

// everything after (A, j, p) exist is shared between the two routes
CommonOut finish_reconstruction(const ProjectionDatum& pd, const Pr& q, const Obj& A, const Mor& j,
                                const Mor& p, bool conormal_side_left, CheckReport& rep) {
    // algebra structure through j
    Mor mA = factor_through_injection(j, Pipe(A.tensor(A), {Stage{j, j}, Stage{q.mH}}).eval(), "m_A through j");
    Mor uA = factor_through_injection(j, Pipe(q.U, {Stage{q.uH}}).eval(), "eta_A through j");
    // coalgebra structure transported by p
    Mor dA = Pipe(A, {Stage{j}, Stage{q.dH}, Stage{p, p}}).eval();
    Mor eA = compose(q.eH, j);

    HopfBundle Ab;
    Ab.obj = A;
    Ab.mul = mA;
    Ab.unit = uA;
    Ab.comul = dA;
    Ab.counit = eA;
    rep.merge_prefixed(check_algebra(Ab.algebra()), "A.");
    rep.merge_prefixed(check_coalgebra(Ab.coalgebra()), "A.");
    rep.add("p∘j=id", mor_diff(compose(p, j), Mor::identity(A)));
    Ab.algebra_verified = Ab.coalgebra_verified = true;

    // ζ = m_H(j⊗i), ζ⁻¹ = (p⊗π)Δ_H
    Mor zeta = Pipe(A.tensor(q.B), {Stage{j, q.i}, Stage{q.mH}}).eval();
    Mor zeta_inv = Pipe(q.H, {Stage{q.dH}, Stage{p, q.pi}}).eval();
    rep.add("zeta.left_inverse", mor_diff(compose(zeta_inv, zeta), Mor::identity(A.tensor(q.B))));
    rep.add("zeta.right_inverse", mor_diff(compose(zeta, zeta_inv), Mor::identity(q.H)));

    // (psiphifromexts)
    Mor psi = Pipe(q.B.tensor(A), {Stage{q.i, j}, Stage{q.mH}, Stage{q.dH}, Stage{p, q.pi}}).eval();
    Mor phi = Pipe(A.tensor(q.B), {Stage{j, q.i}, Stage{q.mH}, Stage{q.dH}, Stage{q.pi, p}}).eval();

    CrossDatum d{Ab, pd.B, psi, phi};
    rep.merge(check_cross_product_algebra(d));
    rep.merge(check_cross_product_coalgebra(d));
    rep.merge(check_bat_direct(d));
    Normality n = normality(d);
    if (conormal_side_left)
        rep.add_bool("normal.psi_left_conormal", n.psi_left_conormal);
    else
        rep.add_bool("normal.phi_left_normal", n.phi_left_normal);

    CommonOut out{Ab, d, assemble_bundle(d), zeta, zeta_inv};
    verify(out.bundle);

    // bialgebra isomorphism through ζ
    Obj AB = A.tensor(q.B);
    rep.add("zeta.mult", pipe_diff(Pipe(AB.tensor(AB), {Stage{*out.bundle.mul}, Stage{zeta}}),
                                   Pipe(AB.tensor(AB), {Stage{zeta, zeta}, Stage{q.mH}})));
    rep.add("zeta.unit", mor_diff(compose(zeta, *out.bundle.unit), q.uH));
    rep.add("zeta.comult", pipe_diff(Pipe(AB, {Stage{zeta}, Stage{q.dH}}),
                                     Pipe(AB, {Stage{*out.bundle.comul}, Stage{zeta, zeta}})));
    rep.add("zeta.counit", mor_diff(compose(q.eH, zeta), *out.bundle.counit));
    return out;
}

void finish_antipode(const Pr& q, const Mor& j, const Mor& p, CommonOut& out, CheckReport& rep,
                     bool via_equalizer) {
    if (!q.SH) return;
    // f̃ = m_H((iπ)⊗S̲)Δ_H factors through the (co)equalizer
    Mor ftilde = Pipe(q.H, {Stage{q.dH}, Stage{compose(q.i, q.pi), *q.SH}, Stage{q.mH}}).eval();
    Mor S_A = via_equalizer ? compose(factor_through_injection(j, ftilde, "S_A through j"), j)
                            : compose(p, factor_through_surjection(p, ftilde, "S_A through p"));

    CoalgebraData Ac = out.A_bundle.coalgebra();
    AlgebraData Aa = out.A_bundle.algebra();
    Mor e = convolution_unit(Ac, Aa);
    Mor idA = Mor::identity(out.A_bundle.obj);
    rep.add("S_A.left", mor_diff(convolution(S_A, idA, Ac, Aa), e));
    rep.add("S_A.right", mor_diff(convolution(idA, S_A, Ac, Aa), e));
    if (!rep.pass()) return;

    Mor S = build_cross_antipode(out.datum, S_A, q.sB);
    out.bundle.antipode = S;
    verify(out.bundle);
    rep.add_bool("bundle.hopf", out.bundle.hopf_verified);
    rep.add("zeta.antipode", pipe_diff(Pipe(out.bundle.obj, {Stage{S}, Stage{out.zeta}}),
                                       Pipe(out.bundle.obj, {Stage{out.zeta}, Stage{*q.SH}})));
}

}  // namespace

Reconstruction reconstruct_equalizer(const ProjectionDatum& pd) {
    if (pd.direction != ProjectionDirection::Equalizer)
        throw PreconditionFailed("reconstruct_equalizer: datum direction");
    CheckReport conds = check_projection_conditions(pd);
    conds.require_pass("check_projection_conditions");
    Pr q(pd);
    CheckReport rep;

    // (A, j) = ker((id⊗π)Δ_H − id⊗η_B)
    Mor lhs = Pipe(q.H, {Stage{q.dH}, Stage{q.idH, q.pi}}).eval();
    Mor rhs = Pipe(q.H, {Stage{q.idH, q.uB}}).eval();
    auto [A, j] = kernel(lhs.sub(rhs));
    rep.add("defofA", mor_diff(compose(lhs, j), compose(rhs, j)));

    // early sanity: p̃j = j and p̃i = η_H ε_B
    rep.add("p2oftildep.j", mor_diff(compose(q.ptilde, j), j));
    rep.add("p2oftildep.i", mor_diff(compose(q.ptilde, q.i), compose(q.uH, q.eB)));
    rep.require_pass("reconstruct_equalizer sanity");

    // p through j from p̃
    Mor p = factor_through_injection(j, q.ptilde, "p through j");

    CommonOut out = finish_reconstruction(pd, q, A, j, p, /*conormal_side_left=*/true, rep);
    finish_antipode(q, j, p, out, rep, /*via_equalizer=*/true);
    return {A, j, p, out.A_bundle, out.datum, out.bundle, out.zeta, out.zeta_inv, rep};
}

Reconstruction reconstruct_coequalizer(const ProjectionDatum& pd) {
    if (pd.direction != ProjectionDirection::Coequalizer)
        throw PreconditionFailed("reconstruct_coequalizer: datum direction");
    CheckReport conds = check_projection_conditions(pd);
    conds.require_pass("check_projection_conditions");
    Pr q(pd);
    CheckReport rep;

    // (A, p) = coker(m_H(id⊗i) − id⊗ε_B)
    Mor lhs = Pipe(q.H.tensor(q.B), {Stage{q.idH, q.i}, Stage{q.mH}}).eval();
    Mor rhs = Pipe(q.H.tensor(q.B), {Stage{q.idH, q.eB}}).eval();
    auto [A, p] = cokernel(lhs.sub(rhs));
    rep.add("dualconstrA", mor_diff(compose(p, lhs), compose(p, rhs)));

    // j̃ = p̃ factors through p
    rep.add("p2oftildep.i", mor_diff(compose(q.ptilde, q.i), compose(q.uH, q.eB)));
    rep.require_pass("reconstruct_coequalizer sanity");
    Mor j = factor_through_surjection(p, q.ptilde, "j through p");

    CommonOut out = finish_reconstruction(pd, q, A, j, p, /*conormal_side_left=*/false, rep);
    finish_antipode(q, j, p, out, rep, /*via_equalizer=*/false);
    return {A, j, p, out.A_bundle, out.datum, out.bundle, out.zeta, out.zeta_inv, rep};
}

SpecialProjections check_special_projections(const ProjectionDatum& pd) {
    CheckReport conds = check_projection_conditions(pd);
    conds.require_pass("check_projection_conditions");
    Pr q(pd);
    CoalgebraData Hc = pd.H.coalgebra(), Bc = pd.B.coalgebra();

    SpecialProjections flags;
    {
        CheckReport r;
        add_coalgebra_morphism(r, "i.", q, q.i, Bc, Hc);
        flags.biproduct = r.pass();
    }
    {
        // (doblecrosscoprproj): adjoint action of B trivial on the image of p̃
        Mor cHH = braiding(q.H, q.H);
        auto diff = pipe_diff(
            Pipe(q.B.tensor(q.H), {Stage{q.dB, q.ptilde}, Stage{q.i, compose(q.i, q.sB), q.idH},
                                   Stage{q.idH, cHH}, Stage{q.mH, q.idH}, Stage{q.mH}}),
            Pipe(q.B.tensor(q.H), {Stage{q.eB, q.ptilde}}));
        flags.double_cross_coproduct = !diff.has_value();
    }
    {
        // the Cor (wpdoublecrossprod) identity: coadjoint coaction trivial on im p̃
        Mor cHH = braiding(q.H, q.H);
        auto diff = pipe_diff(Pipe(q.H, {Stage{q.dH}, Stage{q.dH, q.idH}, Stage{q.pi, cHH},
                                         Stage{q.idB, q.pi, q.dH}, Stage{q.idB, q.sB, q.idH, q.pi},
                                         Stage{q.mB, q.idH, compose(q.i, q.sB)}, Stage{q.idB, q.mH}}),
                              Pipe(q.H, {Stage{q.uB, q.ptilde}}));
        flags.double_cross_product = !diff.has_value();
    }

    // cross-validation against the classification of the reconstructed datum
    Reconstruction rec = pd.direction == ProjectionDirection::Equalizer ? reconstruct_equalizer(pd)
                                                                        : reconstruct_coequalizer(pd);
    Classification c = classify(rec.datum);
    if (flags.biproduct != c.biproduct_left) throw CheckFailed("special projection flag biproduct vs classify");
    if (flags.double_cross_coproduct != c.double_cross_coproduct)
        throw CheckFailed("special projection flag doblecrosscoprproj vs classify");
    if (flags.double_cross_product != c.double_cross_product)
        throw CheckFailed("special projection flag wpdoublecrossprod vs classify");
    return flags;
}

}  // namespace hopfforge
