#include <doctest.h>

#include "test_util.hpp"

using namespace hopfforge;
using testutil::Rng;

namespace {

Ctx qctx() { return GradingCtx::trivial(FieldSpec::rational()); }

// monoid algebra of {e, t : t² = t}: a bialgebra whose grouplike t has no inverse
HopfBundle idempotent_monoid_algebra(const Ctx& ctx) {
    Scalar one = Scalar::one(ctx->field());
    Obj M = Obj::atom(ctx, make_atom_ungraded("kM", 2, ctx->group()));
    Obj MM = M.tensor(M), U = Obj::unit(ctx);
    HopfBundle h;
    h.obj = M;
    h.mul = Mor::from_triplets(
        MM, M, {{0, 0, one}, {1, 1, one}, {1, 2, one}, {1, 3, one}});  // e·e=e, e·t=t·e=t, t·t=t
    h.unit = Mor::from_triplets(U, M, {{0, 0, one}});
    h.comul = Mor::from_triplets(M, MM, {{0, 0, one}, {3, 1, one}});  // grouplikes
    h.counit = Mor::from_triplets(M, U, {{0, 0, one}, {0, 1, one}});
    return h;
}

}  // namespace

TEST_CASE("trivial algebra on the unit object passes") {
    Ctx ctx = qctx();
    Obj u = Obj::unit(ctx);
    AlgebraData a{u, Mor::identity(u), Mor::identity(u)};
    CHECK(check_algebra(a).pass());
    CoalgebraData c{u, Mor::identity(u), Mor::identity(u)};
    CHECK(check_coalgebra(c).pass());
}

TEST_CASE("group algebra QZ2 is an algebra, coalgebra, bialgebra and Hopf") {
    Ctx ctx = qctx();
    HopfBundle h = group_algebra(ctx, GroupDatum::cyclic(2), "kZ2");
    CHECK(check_algebra(h.algebra()).pass());
    CHECK(check_coalgebra(h.coalgebra()).pass());
    CHECK(check_bialgebra(h).pass());
    CHECK(h.hopf_verified);
    // S = id on Z2 (every element is its own inverse)
    CHECK(mor_equal(*h.antipode, Mor::identity(h.obj)));
    CHECK(check_antipode_antimorphism(h).pass());

    // brute-force associativity over the structure constants
    Obj G = h.obj, GG = G.tensor(G);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t out = 0; out < 2; ++out) {
                    Scalar lhs = h.mul->entry(out, GG.tuple_to_slot(((a + b) % 2) * 2 + c));
                    Scalar rhs = h.mul->entry(out, GG.tuple_to_slot(a * 2 + (b + c) % 2));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("a single perturbed entry breaks associativity with a located witness") {
    Ctx ctx = qctx();
    HopfBundle h = group_algebra(ctx, GroupDatum::cyclic(2), "kZ2");
    AlgebraData a = h.algebra();
    Mat m = a.mul.mat();
    m.set(0, 1, m.get(0, 1) + Scalar::one(ctx->field()));
    AlgebraData bad{a.obj, Mor(a.mul.dom(), a.mul.cod(), m), a.unit};
    CheckReport rep = check_algebra(bad);
    CHECK(!rep.pass());
    bool located = false;
    for (const auto& e : rep.entries)
        if (!e.pass && e.witness) located = true;
    CHECK(located);
}

TEST_CASE("coalgebra counit failure is detected") {
    Ctx ctx = qctx();
    Scalar one = Scalar::one(ctx->field());
    Obj A = Obj::atom(ctx, make_atom_ungraded("A", 2, ctx->group()));
    Obj AA = A.tensor(A), U = Obj::unit(ctx);
    // Δ(x) = x⊗1 only: drops the 1⊗x term, so the right counit law fails
    Mor comul = Mor::from_triplets(A, AA, {{0, 0, one}, {2, 1, one}});
    Mor counit = Mor::from_triplets(A, U, {{0, 0, one}});
    CheckReport rep = check_coalgebra({A, comul, counit});
    CHECK(!rep.pass());
    CHECK(!rep.find("coalgebra.counit.left")->pass);
}

TEST_CASE("super line is a braided bialgebra; ungraded variant fails the comult_mult axiom") {
    Ctx sctx = super_ctx(FieldSpec::rational());
    HopfBundle theta = super_line(sctx);
    CHECK(theta.bialgebra_verified);
    CHECK(theta.hopf_verified);
    CHECK(check_antipode_antimorphism(theta).pass());

    // same structure constants with trivial grading: the sign is gone and Δ∘m fails
    Ctx ctx = qctx();
    Scalar one = Scalar::one(ctx->field());
    Obj A = Obj::atom(ctx, make_atom_ungraded("A", 2, ctx->group()));
    Obj AA = A.tensor(A), U = Obj::unit(ctx);
    HopfBundle flat;
    flat.obj = A;
    flat.mul = Mor::from_triplets(AA, A, {{0, 0, one}, {1, 1, one}, {1, 2, one}});
    flat.unit = Mor::from_triplets(U, A, {{0, 0, one}});
    flat.comul = Mor::from_triplets(A, AA, {{0, 0, one}, {1, 1, one}, {2, 1, one}});
    flat.counit = Mor::from_triplets(A, U, {{0, 0, one}});
    CheckReport rep = check_bialgebra(flat);
    CHECK(!rep.pass());
    CHECK(!rep.find("braidedbialgebra.comult_mult")->pass);
}

TEST_CASE("convolution unit laws, associativity, and the grouplike square") {
    Ctx ctx = qctx();
    HopfBundle h = group_algebra(ctx, GroupDatum::cyclic(2), "kZ2");
    CoalgebraData c = h.coalgebra();
    AlgebraData a = h.algebra();
    Mor e = convolution_unit(c, a);
    Rng rng(19);
    for (int k = 0; k < 10; ++k) {
        Mor f = testutil::random_mor(rng, h.obj, h.obj);
        CHECK(mor_equal(convolution(f, e, c, a), f));
        CHECK(mor_equal(convolution(e, f, c, a), f));
        Mor g = testutil::random_mor(rng, h.obj, h.obj);
        Mor w = testutil::random_mor(rng, h.obj, h.obj);
        CHECK(mor_equal(convolution(convolution(f, g, c, a), w, c, a),
                        convolution(f, convolution(g, w, c, a), c, a)));
    }
    // id * id sends g to g² = e
    Mor sq = convolution(Mor::identity(h.obj), Mor::identity(h.obj), c, a);
    CHECK(sq.entry(0, 1).is_one());
    CHECK(sq.entry(1, 1).is_zero());
}

TEST_CASE("convolution inverse: unit, identity, and a non-invertible grouplike") {
    Ctx ctx = qctx();
    HopfBundle h = group_algebra(ctx, GroupDatum::cyclic(2), "kZ2");
    CoalgebraData c = h.coalgebra();
    AlgebraData a = h.algebra();
    Mor e = convolution_unit(c, a);

    ConvInverse ee = convolution_inverse(e, c, a);
    CHECK(ee.side == Sidedness::TwoSided);
    CHECK(mor_equal(*ee.inv, e));

    ConvInverse idinv = convolution_inverse(Mor::identity(h.obj), c, a);
    CHECK(idinv.side == Sidedness::TwoSided);
    CHECK(mor_equal(*idinv.inv, Mor::identity(h.obj)));  // g⁻¹ = g

    HopfBundle m = idempotent_monoid_algebra(ctx);
    CHECK(check_bialgebra(m).pass());
    ConvInverse none = convolution_inverse(Mor::identity(m.obj), m.coalgebra(), m.algebra());
    CHECK(none.side == Sidedness::None);
    CHECK(antipode_of(m) == std::nullopt);
}

TEST_CASE("two-sided convolution inverses are unique across elimination orders") {
    Ctx ctx = qctx();
    BuiltCross h4 = sweedler_biproduct(ctx);
    HopfBundle H = h4.bundle;
    ConvInverse s1 = convolution_inverse(Mor::identity(H.obj), H.coalgebra(), H.algebra(), 0);
    ConvInverse s2 = convolution_inverse(Mor::identity(H.obj), H.coalgebra(), H.algebra(), 0xfeedbeef);
    REQUIRE(s1.side == Sidedness::TwoSided);
    REQUIRE(s2.side == Sidedness::TwoSided);
    CHECK(mor_equal(*s1.inv, *s2.inv));
}

namespace {

// H4 by structure constants in the classical basis {1, g, x, gx}
HopfBundle classical_h4(const Ctx& ctx) {
    const FieldSpec fs = ctx->field();
    Scalar one = Scalar::one(fs), minus = -one;
    Obj H = Obj::atom(ctx, make_atom_ungraded("H4", 4, ctx->group()));
    Obj HH = H.tensor(H), U = Obj::unit(ctx);
    auto t = [&](std::size_t a, std::size_t b) { return HH.tuple_to_slot(a * 4 + b); };
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> mul;
    // 1·y = y·1 = y
    for (std::size_t y = 0; y < 4; ++y) {
        mul.emplace_back(y, t(0, y), one);
        if (y) mul.emplace_back(y, t(y, 0), one);
    }
    mul.emplace_back(0, t(1, 1), one);    // g·g = 1
    mul.emplace_back(3, t(1, 2), one);    // g·x = gx
    mul.emplace_back(3, t(2, 1), minus);  // x·g = -gx
    mul.emplace_back(2, t(1, 3), one);    // g·gx = x
    mul.emplace_back(2, t(3, 1), minus);  // gx·g = -x
    // x·x = 0, x·gx = 0, gx·x = 0, gx·gx = 0
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> comul{
        {t(0, 0), 0, one}, {t(1, 1), 1, one},                      // Δ1, Δg grouplike
        {t(2, 0), 2, one}, {t(1, 2), 2, one},                      // Δx = x⊗1 + g⊗x
        {t(3, 1), 3, one}, {t(0, 3), 3, one}};                     // Δgx = gx⊗g + 1⊗gx
    HopfBundle h;
    h.obj = H;
    h.mul = Mor::from_triplets(HH, H, mul);
    h.unit = Mor::from_triplets(U, H, {{0, 0, one}});
    h.comul = Mor::from_triplets(H, HH, comul);
    h.counit = Mor::from_triplets(H, U, {{0, 0, one}, {0, 1, one}});
    return h;
}

}  // namespace

TEST_CASE("Sweedler H4 antipode: S(x) = -gx, and the antimorphism laws hold") {
    Ctx ctx = qctx();

    HopfBundle cls = classical_h4(ctx);
    CHECK(verify(cls).pass());
    auto Scls = antipode_of(cls);
    REQUIRE(Scls.has_value());
    CHECK(Scls->entry(3, 2).str() == "-1");  // S maps the x basis vector to -gx
    CHECK(Scls->entry(1, 1).is_one());       // S(g) = g
    CHECK(check_antipode_antimorphism(cls).pass());

    BuiltCross h4 = sweedler_biproduct(ctx);
    HopfBundle H = h4.bundle;
    REQUIRE(H.antipode.has_value());
    CHECK(H.hopf_verified);
    // biproduct basis in tuple order: 1⊗1, 1⊗g, x⊗1, x⊗g; the product
    // (1⊗g)(x⊗1) is -x⊗g, so gx corresponds to -(x⊗g) and S(x⊗1) = x⊗g
    Obj AB = H.obj;
    CHECK(H.antipode->entry(AB.tuple_to_slot(3), AB.tuple_to_slot(2)).is_one());
    CHECK(check_antipode_antimorphism(H).pass());

    // basis-matching oracle: 1⊗1 ↦ 1, 1⊗g ↦ g, x⊗1 ↦ x, x⊗g ↦ -gx is a Hopf isomorphism
    Scalar one = Scalar::one(ctx->field());
    Mor iso = Mor::from_triplets(AB, cls.obj,
                                 {{0, AB.tuple_to_slot(0), one},
                                  {1, AB.tuple_to_slot(1), one},
                                  {2, AB.tuple_to_slot(2), one},
                                  {3, AB.tuple_to_slot(3), -one}});
    REQUIRE(invert(iso.mat()).has_value());
    CHECK(mor_equal(compose(iso, *H.mul), compose(*cls.mul, tensor(iso, iso))));
    CHECK(mor_equal(compose(*cls.comul, iso), compose(tensor(iso, iso), *H.comul)));
    CHECK(mor_equal(compose(iso, *H.unit), *cls.unit));
    CHECK(mor_equal(compose(*cls.counit, iso), *H.counit));
    CHECK(mor_equal(compose(iso, *H.antipode), compose(*cls.antipode, iso)));

    HopfBundle fresh = H;
    fresh.antipode.reset();
    fresh.hopf_verified = false;
    auto S = antipode_of(fresh);
    REQUIRE(S.has_value());
    CHECK(mor_equal(*S, *H.antipode));

    CHECK(check_antipode_axioms(H, *H.antipode).pass());
}

TEST_CASE("dual bundle of a Hopf algebra is Hopf for symmetric bicharacters") {
    Ctx ctx = qctx();
    HopfBundle h = group_algebra(ctx, GroupDatum::cyclic(3), "kZ3");
    HopfBundle d = dual_bundle(h);
    CHECK(verify(d).pass());
    CHECK(d.hopf_verified);
}
