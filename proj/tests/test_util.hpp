#pragma once

#include <cstdint>

#include "hopfforge/constructors.hpp"

namespace hopfforge::testutil {

// xorshift generator so every run is reproducible
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    Scalar scalar(const FieldSpec& fs, long long lo = -3, long long hi = 3) {
        return Scalar::from_int(fs, lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))));
    }
};

inline Mor random_mor(Rng& rng, const Obj& dom, const Obj& cod) {
    Mat m(dom.ctx()->field(), cod.dim(), dom.dim());
    for (std::size_t c = 0; c < dom.dim(); ++c)
        for (std::size_t r = 0; r < cod.dim(); ++r)
            if (cod.slot_degree(r) == dom.slot_degree(c)) m.set(r, c, rng.scalar(dom.ctx()->field()));
    return Mor(dom, cod, std::move(m));
}

// invertible degree-preserving morphism (random until the determinant is nonzero)
inline Mor random_iso(Rng& rng, const Obj& x) {
    for (int tries = 0; tries < 200; ++tries) {
        Mor f = random_mor(rng, x, x);
        if (auto inv = invert(f.mat())) return f;
    }
    return Mor::identity(x);
}

// conjugate every structure map of a bundle by an isomorphism
inline HopfBundle conjugate(const HopfBundle& h, const Mor& g) {
    auto gi = invert(g.mat());
    if (!gi) throw std::invalid_argument("conjugate needs an isomorphism");
    Mor ginv(h.obj, h.obj, std::move(*gi), false);
    HopfBundle out;
    out.obj = h.obj;
    if (h.mul) out.mul = compose(g, compose(*h.mul, tensor(ginv, ginv)));
    if (h.unit) out.unit = compose(g, *h.unit);
    if (h.comul) out.comul = compose(tensor(g, g), compose(*h.comul, ginv));
    if (h.counit) out.counit = compose(*h.counit, ginv);
    if (h.antipode) out.antipode = compose(g, compose(*h.antipode, ginv));
    return out;
}

inline CrossDatum conjugate(const CrossDatum& d, const Mor& gA, const Mor& gB) {
    auto giA = invert(gA.mat());
    auto giB = invert(gB.mat());
    Mor ginvA(d.A.obj, d.A.obj, std::move(*giA), false);
    Mor ginvB(d.B.obj, d.B.obj, std::move(*giB), false);
    CrossDatum out;
    out.A = conjugate(d.A, gA);
    out.B = conjugate(d.B, gB);
    out.psi = compose(tensor(gA, gB), compose(d.psi, tensor(ginvB, ginvA)));
    out.phi = compose(tensor(gB, gA), compose(d.phi, tensor(ginvA, ginvB)));
    return out;
}

// transposed datum: swaps the product and coproduct sides
inline CrossDatum dual_datum(const CrossDatum& d) {
    return {dual_bundle(d.A), dual_bundle(d.B), d.phi.transposed(), d.psi.transposed()};
}

}  // namespace hopfforge::testutil
