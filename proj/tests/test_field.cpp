#include <doctest.h>

#include <set>

#include "lrc/field.hpp"
#include "lrc/rng.hpp"

using namespace lrc;

TEST_CASE("prime field construction") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->characteristic() == 7);
    CHECK(f7->degree() == 1);
    CHECK(f7->order() == 7);
    CHECK(f7->modulus().empty());
}

TEST_CASE("GF(4) gets the unique irreducible quadratic") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->order() == 4);
    CHECK(f4->modulus() == std::vector<uint32_t>{1, 1, 1});  // x^2 + x + 1
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);  // above the 2^20 cap
    // x^2 + 1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), std::invalid_argument);    // wrong length
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 2}), std::invalid_argument); // coefficient >= p
    CHECK_THROWS_AS(Field::make(7, 1, {1, 1}), std::invalid_argument);    // modulus for m == 1
}

TEST_CASE("GF(7) arithmetic") {
    auto f = Field::make(7, 1);
    CHECK((f->element(3) * f->element(5)).value() == 1);
    CHECK(f->element(3).inv() == f->element(5));
    CHECK(f->element(3).pow(6).value() == 1);
    CHECK((f->element(2) + f->element(6)).value() == 1);
    CHECK((f->element(2) - f->element(6)).value() == 3);
    CHECK((-f->element(2)).value() == 5);
    CHECK_THROWS_AS(f->element(1) / f->element(0), std::domain_error);
    CHECK_THROWS_AS(f->element(0).inv(), std::domain_error);
}

TEST_CASE("GF(4) defining relation x^2 = x + 1") {
    auto f4 = Field::make(2, 2);
    const FieldElement g = f4->element(2);  // the class of x
    CHECK(g * g == f4->element(3));         // x + 1
}

TEST_CASE("mixed-field arithmetic is rejected") {
    auto f7 = Field::make(7, 1);
    auto f5 = Field::make(5, 1);
    CHECK_THROWS_AS(f7->element(1) + f5->element(1), std::invalid_argument);

    // same order, different modulus: still different fields
    auto f8a = Field::make(2, 3, {1, 1, 0, 1});
    auto f8b = Field::make(2, 3, {1, 0, 1, 1});
    CHECK_THROWS_AS(f8a->element(3) * f8b->element(3), std::invalid_argument);

    // two handles to the same field interoperate
    auto f7b = Field::make(7, 1);
    CHECK((f7->element(3) * f7b->element(5)).value() == 1);
}

TEST_CASE("element enumeration") {
    auto f2 = Field::make(2, 1);
    auto e2 = f2->elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].value() == 0);
    CHECK(e2[1].value() == 1);

    for (auto field : {Field::make(2, 2), Field::make(7, 1), Field::make(3, 2)}) {
        auto all = field->elements();
        CHECK(all.size() == field->order());
        CHECK(all.front().is_zero());
        std::set<uint32_t> values;
        for (const auto& e : all) values.insert(e.value());
        CHECK(values.size() == field->order());
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng(42);
    for (auto field : {Field::make(2, 1), Field::make(5, 1), Field::make(2, 3), Field::make(3, 2),
                       Field::make(13, 1)}) {
        const uint64_t q = field->order();
        for (int i = 0; i < 200; ++i) {
            const FieldElement a = field->element(rng.below(q));
            const FieldElement b = field->element(rng.below(q));
            const FieldElement c = field->element(rng.below(q));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + field->zero() == a);
            CHECK(a * field->one() == a);
            CHECK(a - a == field->zero());
        }
    }
}

TEST_CASE("inverses and the exponent of the multiplicative group") {
    for (auto field : {Field::make(2, 1), Field::make(5, 1), Field::make(2, 3), Field::make(3, 2),
                       Field::make(13, 1)}) {
        const int64_t q = static_cast<int64_t>(field->order());
        for (uint64_t v = 1; v < field->order(); ++v) {
            const FieldElement a = field->element(v);
            CHECK(a * a.inv() == field->one());
            CHECK(a.pow(q - 1) == field->one());
            CHECK(a.pow(-1) == a.inv());
        }
    }
}

TEST_CASE("pow conventions at zero") {
    auto f = Field::make(5, 1);
    CHECK(f->element(0).pow(0).value() == 1);
    CHECK(f->element(0).pow(3).value() == 0);
    CHECK_THROWS_AS(f->element(0).pow(-2), std::domain_error);
}

TEST_CASE("packed encoding round-trips") {
    auto f9 = Field::make(3, 2);
    for (uint64_t v = 0; v < 9; ++v) {
        CHECK(f9->pack(f9->unpack(static_cast<uint32_t>(v))) == v);
    }
    CHECK(f9->unpack(5) == std::vector<uint32_t>{2, 1});  // 2 + 1*3
}
