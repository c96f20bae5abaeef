#include "hopfforge/structures.hpp"

namespace hopfforge {

AlgebraData HopfBundle::algebra() const {
    if (!mul || !unit) throw MissingStructure("algebra maps");
    return {obj, *mul, *unit};
}

CoalgebraData HopfBundle::coalgebra() const {
    if (!comul || !counit) throw MissingStructure("coalgebra maps");
    return {obj, *comul, *counit};
}

HopfBundle HopfBundle::from(const AlgebraData& a, const CoalgebraData& c) {
    if (!a.obj.graded_equal(c.obj)) throw ShapeMismatch("algebra and coalgebra carried by different objects");
    HopfBundle h;
    h.obj = a.obj;
    h.mul = a.mul;
    h.unit = a.unit;
    h.comul = c.comul;
    h.counit = c.counit;
    return h;
}

namespace {

void check_algebra_shapes(const AlgebraData& a) {
    const Obj& A = a.obj;
    if (!a.mul.dom().graded_equal(A.tensor(A)) || !a.mul.cod().graded_equal(A))
        throw ShapeMismatch("multiplication must be A⊗A→A");
    if (!a.unit.dom().is_unit() || !a.unit.cod().graded_equal(A)) throw ShapeMismatch("unit must be 1→A");
}

void check_coalgebra_shapes(const CoalgebraData& c) {
    const Obj& B = c.obj;
    if (!c.comul.dom().graded_equal(B) || !c.comul.cod().graded_equal(B.tensor(B)))
        throw ShapeMismatch("comultiplication must be B→B⊗B");
    if (!c.counit.dom().graded_equal(B) || !c.counit.cod().is_unit()) throw ShapeMismatch("counit must be B→1");
}

}  // namespace

CheckReport check_algebra(const AlgebraData& a) {
    check_algebra_shapes(a);
    const Obj& A = a.obj;
    Mor idA = Mor::identity(A);
    CheckReport rep;
    rep.add("algebra.assoc", pipe_diff(Pipe(A.tensor(A).tensor(A), {Stage{a.mul, idA}, Stage{a.mul}}),
                                       Pipe(A.tensor(A).tensor(A), {Stage{idA, a.mul}, Stage{a.mul}})));
    rep.add("algebra.unit.left", pipe_diff(Pipe(A, {Stage{a.unit, idA}, Stage{a.mul}}), Pipe(idA)));
    rep.add("algebra.unit.right", pipe_diff(Pipe(A, {Stage{idA, a.unit}, Stage{a.mul}}), Pipe(idA)));
    return rep;
}

CheckReport check_coalgebra(const CoalgebraData& c) {
    check_coalgebra_shapes(c);
    const Obj& B = c.obj;
    Mor idB = Mor::identity(B);
    CheckReport rep;
    rep.add("coalgebra.coassoc", pipe_diff(Pipe(B, {Stage{c.comul}, Stage{c.comul, idB}}),
                                           Pipe(B, {Stage{c.comul}, Stage{idB, c.comul}})));
    rep.add("coalgebra.counit.left", pipe_diff(Pipe(B, {Stage{c.comul}, Stage{c.counit, idB}}), Pipe(idB)));
    rep.add("coalgebra.counit.right", pipe_diff(Pipe(B, {Stage{c.comul}, Stage{idB, c.counit}}), Pipe(idB)));
    return rep;
}

CheckReport check_bialgebra(const HopfBundle& h) {
    AlgebraData a = h.algebra();
    CoalgebraData c = h.coalgebra();
    const Obj& B = h.obj;
    Mor idB = Mor::identity(B);
    Mor cBB = braiding(B, B);
    Obj unit1 = Obj::unit(B.ctx());

    CheckReport rep;
    rep.add("braidedbialgebra.assoc", pipe_diff(Pipe(B.tensor(B).tensor(B), {Stage{a.mul, idB}, Stage{a.mul}}),
                                                Pipe(B.tensor(B).tensor(B), {Stage{idB, a.mul}, Stage{a.mul}})));
    {
        auto left = pipe_diff(Pipe(B, {Stage{a.unit, idB}, Stage{a.mul}}), Pipe(idB));
        auto right = pipe_diff(Pipe(B, {Stage{idB, a.unit}, Stage{a.mul}}), Pipe(idB));
        rep.add("braidedbialgebra.unit", left ? left : right);
    }
    rep.add("braidedbialgebra.coassoc", pipe_diff(Pipe(B, {Stage{c.comul}, Stage{c.comul, idB}}),
                                                  Pipe(B, {Stage{c.comul}, Stage{idB, c.comul}})));
    {
        auto left = pipe_diff(Pipe(B, {Stage{c.comul}, Stage{c.counit, idB}}), Pipe(idB));
        auto right = pipe_diff(Pipe(B, {Stage{c.comul}, Stage{idB, c.counit}}), Pipe(idB));
        rep.add("braidedbialgebra.counit", left ? left : right);
    }
    rep.add("braidedbialgebra.counit_mult",
            pipe_diff(Pipe(B.tensor(B), {Stage{a.mul}, Stage{c.counit}}),
                      Pipe(B.tensor(B), {Stage{c.counit, c.counit}})));
    rep.add("braidedbialgebra.comult_unit",
            pipe_diff(Pipe(unit1, {Stage{a.unit}, Stage{c.comul}}), Pipe(unit1, {Stage{a.unit, a.unit}})));
    rep.add("braidedbialgebra.comult_mult",
            pipe_diff(Pipe(B.tensor(B), {Stage{a.mul}, Stage{c.comul}}),
                      Pipe(B.tensor(B), {Stage{c.comul, c.comul}, Stage{idB, cBB, idB}, Stage{a.mul, a.mul}})));
    rep.add("braidedbialgebra.eps_eta",
            pipe_diff(Pipe(unit1, {Stage{a.unit}, Stage{c.counit}}), Pipe(Mor::identity(unit1))));
    return rep;
}

CheckReport check_antipode_axioms(const HopfBundle& h, const Mor& S) {
    AlgebraData a = h.algebra();
    CoalgebraData c = h.coalgebra();
    const Obj& B = h.obj;
    Mor idB = Mor::identity(B);
    Pipe unitp(B, {Stage{c.counit}, Stage{a.unit}});
    CheckReport rep;
    rep.add("braidedantipode.left", pipe_diff(Pipe(B, {Stage{c.comul}, Stage{S, idB}, Stage{a.mul}}), unitp));
    rep.add("braidedantipode.right", pipe_diff(Pipe(B, {Stage{c.comul}, Stage{idB, S}, Stage{a.mul}}), unitp));
    return rep;
}

CheckReport check_antipode_antimorphism(const HopfBundle& h) {
    if (!h.antipode) throw MissingStructure("antipode");
    AlgebraData a = h.algebra();
    CoalgebraData c = h.coalgebra();
    const Obj& B = h.obj;
    const Mor& S = *h.antipode;
    Mor cBB = braiding(B, B);
    CheckReport rep;
    rep.add("antiac.a.mult", pipe_diff(Pipe(B.tensor(B), {Stage{a.mul}, Stage{S}}),
                                       Pipe(B.tensor(B), {Stage{cBB}, Stage{S, S}, Stage{a.mul}})));
    rep.add("antiac.a.unit",
            pipe_diff(Pipe(Obj::unit(B.ctx()), {Stage{a.unit}, Stage{S}}), Pipe(a.unit)));
    rep.add("antiac.b.comult", pipe_diff(Pipe(B, {Stage{S}, Stage{c.comul}}),
                                         Pipe(B, {Stage{c.comul}, Stage{S, S}, Stage{cBB}})));
    rep.add("antiac.b.counit", pipe_diff(Pipe(B, {Stage{S}, Stage{c.counit}}), Pipe(c.counit)));
    return rep;
}

CheckReport verify(HopfBundle& h) {
    CheckReport rep;
    if (h.mul && h.unit) {
        CheckReport r = check_algebra(h.algebra());
        h.algebra_verified = r.pass();
        rep.merge(r);
    }
    if (h.comul && h.counit) {
        CheckReport r = check_coalgebra(h.coalgebra());
        h.coalgebra_verified = r.pass();
        rep.merge(r);
    }
    if (h.algebra_verified && h.coalgebra_verified) {
        CheckReport r = check_bialgebra(h);
        h.bialgebra_verified = r.pass();
        rep.merge(r);
    }
    if (h.bialgebra_verified && h.antipode) {
        CheckReport r = check_antipode_axioms(h, *h.antipode);
        h.hopf_verified = r.pass();
        rep.merge(r);
    }
    return rep;
}

Mor convolution_unit(const CoalgebraData& c, const AlgebraData& a) { return compose(a.unit, c.counit); }

Mor convolution(const Mor& f, const Mor& g, const CoalgebraData& c, const AlgebraData& a) {
    if (!f.dom().graded_equal(c.obj) || !g.dom().graded_equal(c.obj) || !f.cod().graded_equal(a.obj) ||
        !g.cod().graded_equal(a.obj))
        throw ShapeMismatch("convolution arguments must be C→A");
    return Pipe(c.obj, {Stage{c.comul}, Stage{f, g}, Stage{a.mul}}).eval();
}

namespace {

// unknowns: degree-preserving entry positions of a morphism C→A
struct Unknowns {
    std::vector<std::pair<std::size_t, std::size_t>> pos;  // (row in A, col in C)
};

Unknowns unknown_positions(const Obj& C, const Obj& A) {
    Unknowns u;
    for (std::size_t c = 0; c < C.dim(); ++c)
        for (std::size_t r = 0; r < A.dim(); ++r)
            if (A.slot_degree(r) == C.slot_degree(c)) u.pos.emplace_back(r, c);
    return u;
}

// linear operator g ↦ f*g (or g*f) restricted to degree-preserving coordinates
Mat convolution_operator(const Mor& f, const CoalgebraData& c, const AlgebraData& a, bool f_on_left,
                         const Unknowns& u) {
    const FieldSpec fs = f.field();
    Mat op(fs, u.pos.size(), u.pos.size());
    for (std::size_t j = 0; j < u.pos.size(); ++j) {
        auto [er, ec] = u.pos[j];
        Mor e = Mor::from_triplets(c.obj, a.obj, {{er, ec, Scalar::one(fs)}});
        Mor img = f_on_left ? convolution(f, e, c, a) : convolution(e, f, c, a);
        for (std::size_t i = 0; i < u.pos.size(); ++i) op.set(i, j, img.entry(u.pos[i].first, u.pos[i].second));
    }
    return op;
}

std::optional<Mor> solve_convolution(const Mor& f, const CoalgebraData& c, const AlgebraData& a, bool f_on_left,
                                     std::uint64_t seed) {
    const FieldSpec fs = f.field();
    Unknowns u = unknown_positions(c.obj, a.obj);
    Mat op = convolution_operator(f, c, a, f_on_left, u);
    Mor e = convolution_unit(c, a);
    Mat rhs(fs, u.pos.size(), 1);
    for (std::size_t i = 0; i < u.pos.size(); ++i) rhs.set(i, 0, e.entry(u.pos[i].first, u.pos[i].second));
    auto sol = seed ? solve_columns_permuted(op, rhs, seed) : solve_columns(op, rhs);
    if (!sol) return std::nullopt;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> ts;
    for (std::size_t i = 0; i < u.pos.size(); ++i) {
        Scalar v = sol->get(i, 0);
        if (!v.is_zero()) ts.emplace_back(u.pos[i].first, u.pos[i].second, v);
    }
    return Mor::from_triplets(c.obj, a.obj, ts);
}

}  // namespace

ConvInverse convolution_inverse(const Mor& f, const CoalgebraData& c, const AlgebraData& a, std::uint64_t seed) {
    Mor e = convolution_unit(c, a);
    if (auto g = solve_convolution(f, c, a, /*f_on_left=*/true, seed)) {
        // g is a right inverse; any left inverse would have to equal it
        if (mor_equal(convolution(*g, f, c, a), e)) return {g, Sidedness::TwoSided};
        return {g, Sidedness::RightOnly};
    }
    if (auto h = solve_convolution(f, c, a, /*f_on_left=*/false, seed)) return {h, Sidedness::LeftOnly};
    return {std::nullopt, Sidedness::None};
}

std::optional<Mor> antipode_of(HopfBundle& h) {
    if (!h.bialgebra_verified) {
        if (!check_bialgebra(h).pass()) throw PreconditionFailed("antipode_of requires a verified bialgebra");
        h.bialgebra_verified = true;
        h.algebra_verified = h.coalgebra_verified = true;
    }
    ConvInverse ci = convolution_inverse(Mor::identity(h.obj), h.coalgebra(), h.algebra());
    if (ci.side != Sidedness::TwoSided) return std::nullopt;
    h.antipode = ci.inv;
    h.hopf_verified = check_antipode_axioms(h, *ci.inv).pass();
    return ci.inv;
}

CheckReport check_left_module(const Mor& lact, const AlgebraData& b) {
    const Obj& B = b.obj;
    Obj X = lact.cod();
    if (!lact.dom().graded_equal(B.tensor(X))) throw ShapeMismatch("left action must be B⊗X→X");
    Mor idX = Mor::identity(X), idB = Mor::identity(B);
    CheckReport rep;
    rep.add("module.unit", pipe_diff(Pipe(X, {Stage{b.unit, idX}, Stage{lact}}), Pipe(idX)));
    rep.add("module.assoc", pipe_diff(Pipe(B.tensor(B).tensor(X), {Stage{b.mul, idX}, Stage{lact}}),
                                      Pipe(B.tensor(B).tensor(X), {Stage{idB, lact}, Stage{lact}})));
    return rep;
}

CheckReport check_right_module_on_left(const Mor& ract, const AlgebraData& a) {
    const Obj& A = a.obj;
    Obj X = ract.cod();
    if (!ract.dom().graded_equal(X.tensor(A))) throw ShapeMismatch("right action must be X⊗A→X");
    Mor idX = Mor::identity(X), idA = Mor::identity(A);
    CheckReport rep;
    rep.add("module.unit", pipe_diff(Pipe(X, {Stage{idX, a.unit}, Stage{ract}}), Pipe(idX)));
    rep.add("module.assoc", pipe_diff(Pipe(X.tensor(A).tensor(A), {Stage{idX, a.mul}, Stage{ract}}),
                                      Pipe(X.tensor(A).tensor(A), {Stage{ract, idA}, Stage{ract}})));
    return rep;
}

CheckReport check_left_comodule(const Mor& lcoact, const CoalgebraData& b) {
    const Obj& B = b.obj;
    Obj X = lcoact.dom();
    if (!lcoact.cod().graded_equal(B.tensor(X))) throw ShapeMismatch("left coaction must be X→B⊗X");
    Mor idX = Mor::identity(X), idB = Mor::identity(B);
    CheckReport rep;
    rep.add("comodule.counit", pipe_diff(Pipe(X, {Stage{lcoact}, Stage{b.counit, idX}}), Pipe(idX)));
    rep.add("comodule.coassoc", pipe_diff(Pipe(X, {Stage{lcoact}, Stage{b.comul, idX}}),
                                          Pipe(X, {Stage{lcoact}, Stage{idB, lcoact}})));
    return rep;
}

CheckReport check_right_comodule_on_left(const Mor& rcoact, const CoalgebraData& a) {
    const Obj& A = a.obj;
    Obj X = rcoact.dom();
    if (!rcoact.cod().graded_equal(X.tensor(A))) throw ShapeMismatch("right coaction must be X→X⊗A");
    Mor idX = Mor::identity(X), idA = Mor::identity(A);
    CheckReport rep;
    rep.add("comodule.counit", pipe_diff(Pipe(X, {Stage{rcoact}, Stage{idX, a.counit}}), Pipe(idX)));
    rep.add("comodule.coassoc", pipe_diff(Pipe(X, {Stage{rcoact}, Stage{rcoact, idA}}),
                                          Pipe(X, {Stage{rcoact}, Stage{idX, a.comul}})));
    return rep;
}

Mor tensor_module_action(const Mor& lact_x, const Mor& lact_y, const CoalgebraData& b_co) {
    const Obj& B = b_co.obj;
    Obj X = lact_x.cod(), Y = lact_y.cod();
    Mor idX = Mor::identity(X), idY = Mor::identity(Y);
    return Pipe(B.tensor(X).tensor(Y),
                {Stage{b_co.comul, idX, idY}, Stage{Mor::identity(B), braiding(B, X), idY},
                 Stage{lact_x, lact_y}})
        .eval();
}

Mor tensor_comodule_coaction(const Mor& lco_x, const Mor& lco_y, const AlgebraData& b_alg) {
    const Obj& B = b_alg.obj;
    Obj X = lco_x.dom(), Y = lco_y.dom();
    return Pipe(X.tensor(Y),
                {Stage{lco_x, lco_y}, Stage{Mor::identity(B), braiding(X, B), Mor::identity(Y)},
                 Stage{b_alg.mul, Mor::identity(X), Mor::identity(Y)}})
        .eval();
}

HopfBundle dual_bundle(const HopfBundle& h) {
    HopfBundle d;
    d.obj = h.obj;
    if (h.comul) d.mul = h.comul->transposed();
    if (h.counit) d.unit = h.counit->transposed();
    if (h.mul) d.comul = h.mul->transposed();
    if (h.unit) d.counit = h.unit->transposed();
    if (h.antipode) d.antipode = h.antipode->transposed();
    return d;
}

}  // namespace hopfforge
