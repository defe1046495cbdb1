// Characteristic matrices: shifted-basis computation, assembly, validity
// checks, span analysis, and variant enumeration.
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cases.hpp"
#include "tbcc/characteristic.hpp"

using namespace tbcc;

namespace {

void check_matches(const CharacteristicMatrix& cm,
                   const std::vector<cases::XRow>& expected) {
    REQUIRE(cm.x.rows() == expected.size());
    for (std::size_t r = 0; r < expected.size(); ++r) {
        CAPTURE(r);
        CHECK(cm.spans[r] == Span{expected[r].a, expected[r].b});
        CHECK(cm.x.row(r).to_string() == expected[r].bits);
    }
}

void check_basis(const BitMatrix& got, const SpanList& got_spans,
                 const std::vector<cases::XRow>& expected) {
    REQUIRE(got.rows() == expected.size());
    for (std::size_t r = 0; r < expected.size(); ++r) {
        CAPTURE(r);
        CHECK(got.row(r).to_string() == expected[r].bits);
        CHECK(got_spans[r] == Span{expected[r].a, expected[r].b});
    }
}

}  // namespace

TEST_CASE("shifted bases of the rate 1/3 code") {
    PolyMatrix g = PolyMatrix::parse(cases::kG13);
    std::vector<MsfBasis> bases = compute_msf_bases(g, cases::kN13);
    REQUIRE(bases.size() == 3);
    CHECK(bases[0].j == 0);
    check_basis(bases[0].base, bases[0].base_spans, cases::kMsf13Base0);
    check_basis(bases[0].shifted, bases[0].shifted_spans, cases::kMsf13Base0);
    check_basis(bases[1].shifted, bases[1].shifted_spans,
                cases::kMsf13Shifted1);
    check_basis(bases[2].shifted, bases[2].shifted_spans,
                cases::kMsf13Shifted2);
}

TEST_CASE("characteristic matrix of the rate 1/3 code") {
    PolyMatrix g = PolyMatrix::parse(cases::kG13);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN13);
    CHECK(cm.n0 == 3);
    CHECK(cm.k0 == 1);
    CHECK(cm.n() == 9);
    check_matches(cm, cases::kX13);
    CHECK_FALSE(cm.corollary_fast_path);
    CHECK_FALSE(cm.shift_repaired);
    CHECK(cm.row_at_start(3).to_string() == "000101111");

    CharacteristicCheck check =
        verify_characteristic(cm, build_tbgm(g, cases::kN13).m);
    CHECK(check.generates);
    CHECK(check.spans_valid);
    CHECK(check.endpoints_distinct);
    CHECK(check.covering);
    CHECK(check.ok());
}

TEST_CASE("span analysis of the rate 1/3 code") {
    CharacteristicMatrix cm =
        assemble_characteristic(PolyMatrix::parse(cases::kG13), cases::kN13);
    SpanAnalysis a = analyze_spans(cm);
    CHECK(span_sets_equal(a.basic, {{0, 5}, {1, 7}, {2, 0}}));
    CHECK(a.theta == 1);
    CHECK(a.symmetric_count == 2);
    CHECK(a.total_count == 8);
    CHECK(a.theta_sets[0] == std::vector<int>{8});
    CHECK(a.theta_sets[1].empty());
    CHECK(a.theta_sets[2].empty());
    CHECK(a.theta_sets[3] == std::vector<int>{2});
    CHECK(a.theta_sets[6] == std::vector<int>{5});
    CHECK(a.ell == 21);
    CHECK(a.ell_formula == 21);
    CHECK(a.span_sum == 54);
    CHECK(a.span_sum_formula == 54);
}

TEST_CASE("characteristic matrix of the rate 2/3 code") {
    PolyMatrix g = PolyMatrix::parse(cases::kG23);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN23);
    check_matches(cm, cases::kX23);
    CHECK(verify_characteristic(cm, build_tbgm(g, cases::kN23).m).ok());

    SpanAnalysis a = analyze_spans(cm);
    CHECK(span_sets_equal(a.basic, {{0, 4}, {1, 3}, {2, 5}}));
    CHECK(a.theta == cases::kTheta23);
    CHECK(a.symmetric_count == 2);
    CHECK(a.total_count == 8);
    CHECK(a.ell == cases::kEll23);
    CHECK(a.ell_formula == cases::kEll23);
    CHECK(a.theta_sets[0].empty());
    CHECK(a.theta_sets[1] == std::vector<int>{0});
    CHECK(a.theta_sets[2].empty());
    CHECK(a.theta_sets[4] == std::vector<int>{3});
    CHECK(a.theta_sets[7] == std::vector<int>{6});
}

TEST_CASE("characteristic matrix of the octal (74,54) code") {
    PolyMatrix g = octal_decode(cases::kOct7454);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN7454);
    check_matches(cm, cases::kX7454);
    CHECK(verify_characteristic(cm, build_tbgm(g, cases::kN7454).m).ok());

    SpanAnalysis a = analyze_spans(cm);
    CHECK(a.theta == 1);
    CHECK(a.symmetric_count == 2);

    std::vector<CharacteristicMatrix> variants =
        enumerate_variants(cm, VariantMode::kShiftSymmetric);
    REQUIRE(variants.size() == 2);
    check_matches(variants[0], cases::kX7454);
    check_matches(variants[1], cases::kX7454Variant1);
    CHECK(verify_characteristic(variants[1], build_tbgm(g, cases::kN7454).m)
              .ok());
}

TEST_CASE("characteristic matrix of the (7,5) code at five sections") {
    PolyMatrix g = octal_decode(cases::kOct75);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN75);
    check_matches(cm, cases::kX75);
    CHECK(verify_characteristic(cm, build_tbgm(g, cases::kN75).m).ok());
    SpanAnalysis a = analyze_spans(cm);
    CHECK(a.theta == 0);
    CHECK(a.symmetric_count == 1);
    CHECK(enumerate_variants(cm, VariantMode::kShiftSymmetric).size() == 1);
}

TEST_CASE("characteristic matrix of the (7,5) code at six sections") {
    PolyMatrix g = octal_decode(cases::kOct75);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN75Long);
    check_matches(cm, cases::kX75Long);
    CHECK(verify_characteristic(cm, build_tbgm(g, cases::kN75Long).m).ok());
    SpanAnalysis a = analyze_spans(cm);
    CHECK(span_sets_equal(a.basic, {{0, 5}, {1, 8}}));
    CHECK(a.theta == 1);
}

TEST_CASE("characteristic matrix of the rate 2/3 five-section code") {
    PolyMatrix g = PolyMatrix::parse(cases::kG23n5);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN23n5);
    check_matches(cm, cases::kX23n5);
    CHECK(verify_characteristic(cm, build_tbgm(g, cases::kN23n5).m).ok());

    SpanAnalysis a = analyze_spans(cm);
    CHECK(span_sets_equal(a.basic, {{0, 4}, {1, 8}, {2, 6}}));
    CHECK(a.theta == 2);
    CHECK(a.symmetric_count == 4);
    CHECK(a.total_count == 1024);
    CHECK(a.ell == 18);
    CHECK(a.ell_formula == 18);
}

TEST_CASE("characteristic matrix of the dual-code encoder") {
    PolyMatrix ht = PolyMatrix::parse(cases::kDualEncoder23n5);
    CharacteristicMatrix cm = assemble_characteristic(ht, cases::kN23n5);
    check_matches(cm, cases::kY23n5);
    CHECK(verify_characteristic(cm, build_tbgm(ht, cases::kN23n5).m).ok());

    SpanAnalysis a = analyze_spans(cm);
    CHECK(a.theta == 2);
    CHECK(a.symmetric_count == 4);
}

TEST_CASE("full enumeration varies blocks independently") {
    PolyMatrix g = PolyMatrix::parse(cases::kG23);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN23);
    std::vector<CharacteristicMatrix> variants =
        enumerate_variants(cm, VariantMode::kFull);
    REQUIRE(variants.size() == 8);

    std::set<std::string> seen;
    Tbgm tb = build_tbgm(g, cases::kN23);
    for (const CharacteristicMatrix& v : variants) {
        seen.insert(v.x.to_string());
        CHECK(verify_characteristic(v, tb.m).ok());
        CHECK(v.spans == cm.spans);
    }
    CHECK(seen.size() == 8);

    // The symmetric enumeration is the diagonal subfamily.
    std::vector<CharacteristicMatrix> sym =
        enumerate_variants(cm, VariantMode::kShiftSymmetric);
    REQUIRE(sym.size() == 2);
    CHECK(sym[0].x == cm.x);
    for (const CharacteristicMatrix& v : sym) {
        CHECK(seen.count(v.x.to_string()) == 1);
    }
}

TEST_CASE("characteristic properties hold on the random corpus") {
    for (const cases::CorpusEntry& entry : cases::random_corpus()) {
        CAPTURE(entry.g.to_string());
        CAPTURE(entry.N);
        CharacteristicMatrix cm = assemble_characteristic(entry.g, entry.N);
        Tbgm tb = build_tbgm(entry.g, entry.N);

        CharacteristicCheck check = verify_characteristic(cm, tb.m);
        CHECK(check.generates);
        CHECK(check.spans_valid);
        CHECK(check.endpoints_distinct);
        CHECK(check.covering);

        // Row index equals span start.
        for (std::size_t r = 0; r < cm.x.rows(); ++r) {
            CHECK(cm.spans[r].a == static_cast<int>(r));
        }

        SpanAnalysis a = analyze_spans(cm);
        CHECK(a.ell == a.ell_formula);
        CHECK(a.span_sum == a.span_sum_formula);

        // The span list is the union of the block shifts of the basic spans.
        SpanList rebuilt;
        for (const Span& s : a.basic) {
            for (int i = 0; i < cm.N; ++i) {
                rebuilt.push_back(span_shift(s, i * cm.n0, cm.n()));
            }
        }
        CHECK(span_sets_equal(rebuilt, cm.spans));
    }
}
