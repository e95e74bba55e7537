#include <doctest.h>

#include "charlab/patterns.hpp"

using namespace charlab;

namespace {

Pattern pat(PatternFamily f, std::vector<std::vector<std::string>> rows) {
    Pattern p;
    p.family = f;
    for (auto& row : rows) {
        std::vector<HalfInt> r;
        for (auto& s : row) {
            auto v = HalfInt::parse(s);
            REQUIRE(v.has_value());
            r.push_back(*v);
        }
        p.rows.push_back(std::move(r));
    }
    return p;
}

std::vector<HalfInt> halves(std::vector<std::string> vs) {
    std::vector<HalfInt> out;
    for (auto& s : vs) out.push_back(*HalfInt::parse(s));
    return out;
}

SignedPartition sp(const std::string& s) { return *SignedPartition::parse(s); }

// The height-6 symplectic pattern with shape (5,3,2) and type (1,1,0,3,4,1).
Pattern symplectic_example() {
    return pat(PatternFamily::Symplectic,
               {{"1"}, {"2"}, {"2", "0"}, {"4", "1"}, {"5", "3", "1"}, {"5", "3", "2"}});
}

// The height-6 orthogonal pattern with shape (6,5,4) and type (0,2,2,4,4,3).
Pattern orthogonal_example() {
    return pat(PatternFamily::Orthogonal,
               {{"0"}, {"2"}, {"3", "-1"}, {"5", "3"}, {"5", "4", "-3"}, {"6", "5", "4"}});
}

// The height-6 split orthogonal pattern with shape (6,5,3), type
// (2,0,1,4,9/2,5/2) and one atypical entry 5/2.
Pattern split_example_a() {
    return pat(PatternFamily::SplitOrthogonal,
               {{"2"}, {"2"}, {"3", "0"}, {"4", "3"}, {"6", "3", "5/2"}, {"6", "5", "3"}});
}

// The half-grid split orthogonal pattern with shape (17/2,7/2,3/2), type
// (3,1/2,1/2,2,4,7/2) and atypical entries 3, 1.
Pattern split_example_b() {
    return pat(PatternFamily::SplitOrthogonal, {{"3"},
                                                {"7/2"},
                                                {"7/2", "1/2"},
                                                {"9/2", "3/2"},
                                                {"15/2", "3/2", "1"},
                                                {"17/2", "7/2", "3/2"}});
}

}  // namespace

TEST_CASE("validate the worked examples") {
    Pattern gt = pat(PatternFamily::GT, {{"1"}, {"4", "1"}, {"5", "2", "0"}, {"5", "3", "1", "0"}});
    CHECK(validate(gt));
    CHECK(shape(gt) == sp("5,3,1,0"));
    CHECK(pattern_type(gt) == halves({"1", "4", "2", "2"}));

    CHECK(validate(symplectic_example()));
    CHECK(shape(symplectic_example()) == sp("5,3,2"));
    CHECK(pattern_type(symplectic_example()) == halves({"1", "1", "0", "3", "4", "1"}));

    CHECK(validate(orthogonal_example()));
    CHECK(shape(orthogonal_example()) == sp("6,5,4"));
    CHECK(pattern_type(orthogonal_example()) == halves({"0", "2", "2", "4", "4", "3"}));

    CHECK(validate(split_example_a()));
    CHECK(shape(split_example_a()) == sp("6,5,3"));
    CHECK(pattern_type(split_example_a()) == halves({"2", "0", "1", "4", "9/2", "5/2"}));
    CHECK(atyp(split_example_a()) == std::vector<int>{0, 0, 1});

    CHECK(validate(split_example_b()));
    CHECK(shape(split_example_b()) == sp("17/2,7/2,3/2"));
    CHECK(pattern_type(split_example_b()) == halves({"3", "1/2", "1/2", "2", "4", "7/2"}));
    CHECK(atyp(split_example_b()) == std::vector<int>{1, 0, 1});

    // Interlacing violation.
    CHECK(!validate(pat(PatternFamily::GT, {{"1"}, {"0", "2"}})));
    // Malformed row lengths throw.
    CHECK_THROWS(validate(pat(PatternFamily::GT, {{"1", "2"}})));
}

TEST_CASE("odd-height orthogonal shapes carry the sign of the last odd end") {
    Pattern p = pat(PatternFamily::Orthogonal, {{"-5/2"},
                                                {"5/2"},
                                                {"11/2", "1/2"},
                                                {"15/2", "3/2"},
                                                {"15/2", "15/2", "-1/2"}});
    CHECK(validate(p));
    SignedPartition s = shape(p);
    CHECK(s == SignedPartition({*HalfInt::parse("15/2"), *HalfInt::parse("15/2"),
                                *HalfInt::parse("1/2")},
                               -1));
    CHECK(pattern_type(p) == halves({"5/2", "0", "7/2", "3", "13/2"}));
}

TEST_CASE("single-row patterns") {
    Pattern p = pat(PatternFamily::GT, {{"7"}});
    CHECK(validate(p));
    CHECK(shape(p) == sp("7"));
}

TEST_CASE("enumeration counts and examples") {
    // SplitOrthogonal height 2, shape (1): odd end ranges over {0, 1/2, 1}.
    auto sos = enumerate_patterns_list(PatternFamily::SplitOrthogonal, 2, sp("1"));
    REQUIRE(sos.size() == 3);
    CHECK(sos[0].at(1, 1) == HalfInt(0));
    CHECK(sos[1].at(1, 1) == HalfInt::from_doubled(1));
    CHECK(sos[2].at(1, 1) == HalfInt(1));

    CHECK(count_patterns(PatternFamily::GT, 1, sp("4")) == 1);
    CHECK(count_patterns(PatternFamily::Symplectic, 2, sp("1")) == 2);

    // DB example: orthogonal height 2, shape (1), z_{1,1} in {-1, 0, 1}.
    auto ogts = enumerate_patterns_list(PatternFamily::Orthogonal, 2, sp("1"));
    REQUIRE(ogts.size() == 3);
    CHECK(ogts[0].at(1, 1) == HalfInt(-1));
    CHECK(ogts[1].at(1, 1) == HalfInt(0));
    CHECK(ogts[2].at(1, 1) == HalfInt(1));
}

TEST_CASE("every enumerated pattern validates with the requested shape") {
    auto run = [](PatternFamily f, std::size_t h, const SignedPartition& s) {
        enumerate_patterns(f, h, s, [&](const Pattern& p) {
            CHECK(validate(p));
            CHECK(shape(p) == s);
        });
    };
    run(PatternFamily::GT, 3, sp("3,1,0"));
    run(PatternFamily::Symplectic, 5, sp("2,1,1"));
    run(PatternFamily::SplitOrthogonal, 4, sp("2,1"));
    run(PatternFamily::SplitOrthogonal, 4, sp("5/2,3/2"));
    run(PatternFamily::Orthogonal, 4, sp("2,1"));
    run(PatternFamily::Orthogonal, 5, sp("2,1,-1"));
    run(PatternFamily::Orthogonal, 3, sp("3/2,-1/2"));
}

TEST_CASE("symplectic patterns are split orthogonal patterns with atyp 0") {
    enumerate_patterns(PatternFamily::Symplectic, 4, sp("2,1"), [&](const Pattern& p) {
        Pattern as_split = p;
        as_split.family = PatternFamily::SplitOrthogonal;
        CHECK(validate(as_split));
        auto a = atyp(as_split);
        for (int ai : a) CHECK(ai == 0);
    });
}

TEST_CASE("split orthogonal types are non-negative and sum to the norm") {
    enumerate_patterns(PatternFamily::SplitOrthogonal, 6, sp("2,1,1"), [&](const Pattern& p) {
        auto t = pattern_type(p);
        HalfInt total(0);
        for (const auto& x : t) {
            CHECK(x.sign() >= 0);
            total += x;
        }
        CHECK(total == shape(p).norm());
    });
}

TEST_CASE("enumeration is deterministic") {
    auto a = enumerate_patterns_list(PatternFamily::SplitOrthogonal, 4, sp("2,1"));
    auto b = enumerate_patterns_list(PatternFamily::SplitOrthogonal, 4, sp("2,1"));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("shape validation errors") {
    CHECK_THROWS(enumerate_patterns_list(PatternFamily::GT, 2, sp("5/2,3/2")));
    CHECK_THROWS(enumerate_patterns_list(PatternFamily::SplitOrthogonal, 3, sp("1")));
    CHECK_THROWS(enumerate_patterns_list(PatternFamily::Symplectic, 2, sp("2,-1")));
}
