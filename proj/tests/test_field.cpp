#include <doctest.h>

#include "hopfforge/field.hpp"
#include "test_util.hpp"

using namespace hopfforge;

TEST_CASE("rational arithmetic is exact") {
    FieldSpec q = FieldSpec::rational();
    Scalar half = Scalar::parse(q, "1/2"), third = Scalar::parse(q, "1/3");
    CHECK((half + third).str() == "5/6");
    CHECK((half - half).is_zero());
    CHECK((half * Scalar::from_int(q, 2)).is_one());
    CHECK_THROWS_AS(half / Scalar::zero(q), DivisionByZero);
    CHECK(Scalar::parse(q, "-4/6").str() == "-2/3");
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f5 = FieldSpec::prime(5);
    Scalar three = Scalar::from_int(f5, 3), two = Scalar::from_int(f5, 2);
    CHECK((three / two).str() == "4");  // 2·4 = 8 ≡ 3
    CHECK((two.pow(4)).is_one());
    CHECK_THROWS(FieldSpec::prime(6));
    CHECK_THROWS_AS(three + Scalar::one(FieldSpec::rational()), FieldMismatch);
}

TEST_CASE("x * 0 = 0 and field axioms on random triples") {
    for (FieldSpec fs : {FieldSpec::rational(), FieldSpec::prime(7), FieldSpec::prime(101)}) {
        testutil::Rng rng(42);
        for (int k = 0; k < 300; ++k) {
            Scalar a = rng.scalar(fs, -20, 20), b = rng.scalar(fs, -20, 20), c = rng.scalar(fs, -20, 20);
            CHECK((a * Scalar::zero(fs)).is_zero());
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + (-a) == Scalar::zero(fs));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(fs));
        }
    }
}

TEST_CASE("string round trip is bit exact") {
    FieldSpec q = FieldSpec::rational();
    for (const char* s : {"0", "1", "-7", "22/7", "-355/113"}) CHECK(Scalar::parse(q, s).str() == s);
    FieldSpec f101 = FieldSpec::prime(101);
    CHECK(Scalar::parse(f101, "1/2").str() == "51");
}
