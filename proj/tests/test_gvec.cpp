#include <doctest.h>

#include "hopfforge/gvec.hpp"
#include "test_util.hpp"

using namespace hopfforge;
using testutil::Rng;
using testutil::random_mor;

namespace {

Ctx super_q() {
    FieldSpec q = FieldSpec::rational();
    return std::make_shared<GradingCtx>(q, GradingGroup{{2}},
                                        std::vector<std::vector<Scalar>>{{-Scalar::one(q)}});
}

}  // namespace

TEST_CASE("tensor of objects convolves graded dims") {
    Ctx ctx = GradingCtx::trivial(FieldSpec::rational());
    Obj x = Obj::atom(ctx, make_atom_ungraded("X", 2, ctx->group()));
    Obj y = Obj::atom(ctx, make_atom_ungraded("Y", 3, ctx->group()));
    CHECK(tensor_obj(x, y).dim() == 6);
    Obj unit = Obj::unit(ctx);
    CHECK(tensor_obj(unit, x).graded_equal(x));
    CHECK(mor_equal(braiding(unit, x), Mor::identity(x)));
    CHECK(mor_equal(braiding(x, unit), Mor::identity(x)));
}

TEST_CASE("super line tensor square has dims (2 even, 2 odd)") {
    Ctx ctx = super_q();
    Obj x = Obj::atom(ctx, make_atom("X", {{Deg{0}, 1}, {Deg{1}, 1}}));
    Obj xx = tensor_obj(x, x);
    auto dims = xx.graded_dims();
    CHECK(dims[Deg{0}] == 2);
    CHECK(dims[Deg{1}] == 2);
    // canonical order sorts by degree, tie-broken by tuple index
    CHECK(xx.slot_degree(0) == Deg{0});
    CHECK(xx.slot_degree(1) == Deg{0});
    CHECK(xx.slot_degree(2) == Deg{1});
    CHECK(xx.slot_degree(3) == Deg{1});
}

TEST_CASE("tensor of morphisms is functorial") {
    Ctx ctx = super_q();
    Rng rng(7);
    Obj x = Obj::atom(ctx, make_atom("X", {{Deg{0}, 2}, {Deg{1}, 1}}));
    Obj y = Obj::atom(ctx, make_atom("Y", {{Deg{0}, 1}, {Deg{1}, 2}}));
    CHECK(mor_equal(tensor(Mor::identity(x), Mor::identity(y)), Mor::identity(tensor_obj(x, y))));
    Mor f = random_mor(rng, x, x), fp = random_mor(rng, x, x);
    Mor g = random_mor(rng, y, y), gp = random_mor(rng, y, y);
    CHECK(mor_equal(compose(tensor(f, g), tensor(fp, gp)), tensor(compose(f, fp), compose(g, gp))));
}

TEST_CASE("1x1 tensor is scalar multiplication") {
    Ctx ctx = GradingCtx::trivial(FieldSpec::rational());
    Obj x = Obj::atom(ctx, make_atom_ungraded("X", 1, ctx->group()));
    auto scalar_mor = [&](long long v) {
        return Mor::from_triplets(x, x, {{0, 0, Scalar::from_int(ctx->field(), v)}});
    };
    CHECK(tensor(scalar_mor(2), scalar_mor(3)).entry(0, 0).str() == "6");
}

TEST_CASE("composition basics") {
    Ctx ctx = GradingCtx::trivial(FieldSpec::rational());
    Obj k1 = Obj::atom(ctx, make_atom_ungraded("X", 1, ctx->group()));
    Obj k2 = Obj::atom(ctx, make_atom_ungraded("Y", 2, ctx->group()));
    Rng rng(3);
    Mor f = random_mor(rng, k2, k2);
    CHECK(mor_equal(compose(f, Mor::identity(k2)), f));
    CHECK(mor_equal(compose(Mor::identity(k2), f), f));
    Scalar one = Scalar::one(ctx->field());
    Mor col = Mor::from_triplets(k1, k2, {{0, 0, one}, {1, 0, one}});   // (1 1)^T
    Mor row = Mor::from_triplets(k2, k1, {{0, 0, one}, {0, 1, one}});   // (1 1)
    CHECK(compose(row, col).entry(0, 0).str() == "2");
    CHECK_THROWS_AS(compose(col, col), ShapeMismatch);
}

TEST_CASE("braiding: trivial grading gives the perfect shuffle") {
    Ctx ctx = GradingCtx::trivial(FieldSpec::rational());
    Obj x = Obj::atom(ctx, make_atom_ungraded("X", 2, ctx->group()));
    Obj y = Obj::atom(ctx, make_atom_ungraded("Y", 3, ctx->group()));
    Mor c = braiding(x, y);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(c.entry(j * 2 + i, i * 3 + j).is_one());
    CHECK(mor_equal(compose(braiding_inv(x, y), c), Mor::identity(tensor_obj(x, y))));
}

TEST_CASE("braiding: odd times odd is -1 in super vect") {
    Ctx ctx = super_q();
    Obj theta = Obj::atom(ctx, make_atom("T", {{Deg{1}, 1}}));
    Mor c = braiding(theta, theta);
    CHECK(c.entry(0, 0).str() == "-1");
}

TEST_CASE("hexagon and naturality invariants") {
    Ctx ctx = super_q();
    Rng rng(11);
    Obj x = Obj::atom(ctx, make_atom("X", {{Deg{0}, 1}, {Deg{1}, 1}}));
    Obj y = Obj::atom(ctx, make_atom("Y", {{Deg{0}, 2}, {Deg{1}, 1}}));
    Obj z = Obj::atom(ctx, make_atom("Z", {{Deg{1}, 2}}));
    for (const Obj* a : {&x, &y, &z})
        for (const Obj* b : {&x, &y, &z})
            for (const Obj* c : {&x, &y, &z}) {
                Mor lhs1 = braiding(*a, tensor_obj(*b, *c));
                Mor rhs1 =
                    compose(tensor(Mor::identity(*b), braiding(*a, *c)), tensor(braiding(*a, *b), Mor::identity(*c)));
                CHECK(mor_equal(lhs1, rhs1));
                Mor lhs2 = braiding(tensor_obj(*a, *b), *c);
                Mor rhs2 =
                    compose(tensor(braiding(*a, *c), Mor::identity(*b)), tensor(Mor::identity(*a), braiding(*b, *c)));
                CHECK(mor_equal(lhs2, rhs2));
            }
    // naturality on random f: X⊗Y→Z and T
    for (int k = 0; k < 10; ++k) {
        Mor f = random_mor(rng, tensor_obj(x, y), z);
        const Obj& T = y;
        Mor lhs = compose(braiding(T, z), tensor(Mor::identity(T), f));
        Mor rhs = compose(tensor(f, Mor::identity(T)), braiding(T, tensor_obj(x, y)));
        CHECK(mor_equal(lhs, rhs));
        Mor lhs2 = compose(braiding(z, T), tensor(f, Mor::identity(T)));
        Mor rhs2 = compose(tensor(Mor::identity(T), f), braiding(tensor_obj(x, y), T));
        CHECK(mor_equal(lhs2, rhs2));
    }
}

TEST_CASE("kernel and cokernel, degreewise echelon") {
    Ctx ctx = GradingCtx::trivial(FieldSpec::rational());
    Obj k2 = Obj::atom(ctx, make_atom_ungraded("X", 2, ctx->group()));
    Obj k1 = Obj::atom(ctx, make_atom_ungraded("Y", 1, ctx->group()));
    Scalar one = Scalar::one(ctx->field());

    auto [kid, jid] = kernel(Mor::identity(k2));
    CHECK(kid.dim() == 0);

    Mor zero = Mor::zero(k2, k1);
    auto [kz, jz] = kernel(zero);
    CHECK(kz.dim() == 2);
    CHECK(mor_equal(compose(zero, jz), Mor::zero(kz, k1)));
    CHECK(jz.mat().equal(Mat::identity(ctx->field(), 2)));

    Mor row = Mor::from_triplets(k2, k1, {{0, 0, one}, {0, 1, one}});  // [1 1]
    auto [kr, jr] = kernel(row);
    CHECK(kr.dim() == 1);
    CHECK(jr.entry(0, 0).str() == "1");
    CHECK(jr.entry(1, 0).str() == "-1");
    CHECK(mat_rank(jr.mat()) == 1);
    CHECK(mor_equal(compose(row, jr), Mor::zero(kr, k1)));

    auto [qr, pr] = cokernel(row);
    CHECK(qr.dim() == 0);
    Mor col = Mor::from_triplets(k1, k2, {{0, 0, one}, {1, 0, one}});
    auto [qc, pc] = cokernel(col);
    CHECK(qc.dim() == 1);
    CHECK(mor_equal(compose(pc, col), Mor::zero(k1, qc)));
    // rank + nullity bookkeeping on random morphisms
    Ctx sctx = super_q();
    Rng rng(23);
    Obj sx = Obj::atom(sctx, make_atom("SX", {{Deg{0}, 2}, {Deg{1}, 2}}));
    Obj sy = Obj::atom(sctx, make_atom("SY", {{Deg{0}, 1}, {Deg{1}, 2}}));
    for (int t = 0; t < 20; ++t) {
        Mor f = random_mor(rng, sx, sy);
        auto [K, j] = kernel(f);
        auto [Q, p] = cokernel(f);
        std::size_t r = mat_rank(f.mat());
        CHECK(K.dim() == sx.dim() - r);
        CHECK(Q.dim() == sy.dim() - r);
        CHECK(compose(f, j).mat().is_zero());
        CHECK(compose(p, f).mat().is_zero());
        CHECK(mat_rank(j.mat()) == K.dim());
    }
}

TEST_CASE("pipe evaluation matches naive composition") {
    Ctx ctx = super_q();
    Rng rng(5);
    Obj x = Obj::atom(ctx, make_atom("X", {{Deg{0}, 1}, {Deg{1}, 1}}));
    Mor f = random_mor(rng, tensor_obj(x, x), x);
    Mor g = random_mor(rng, x, tensor_obj(x, x));
    Mor viaPipe = Pipe(x, {Stage{g}, Stage{f}}).eval();
    CHECK(mor_equal(viaPipe, compose(f, g)));
    Mor t1 = Pipe(tensor_obj(x, x), {Stage{Mor::identity(x), g}, Stage{f, Mor::identity(x)}}).eval();
    Mor t2 = compose(tensor(f, Mor::identity(x)), tensor(Mor::identity(x), g));
    CHECK(mor_equal(t1, t2));
    CHECK(!pipe_diff(Pipe(t1), Pipe(tensor_obj(x, x), {Stage{Mor::identity(x), g}, Stage{f, Mor::identity(x)}})));
}
