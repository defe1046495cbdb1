// Acceptance gate: one self-contained check per shipped claim, each printed
// as a single PASS or FAIL line. Exits nonzero if any check fails.
#include <array>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cases.hpp"
#include "tbcc/reduction.hpp"
#include "tbcc/trellis.hpp"

namespace {

using namespace tbcc;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

void expect_rows(const BitMatrix& m, const SpanList& spans,
                 const std::vector<cases::XRow>& want,
                 const std::string& what) {
    expect(m.rows() == want.size(), what + ": row count");
    for (std::size_t r = 0; r < want.size(); ++r) {
        std::ostringstream tag;
        tag << what << " row " << r;
        expect(m.row(r).to_string() == want[r].bits, tag.str() + " bits");
        expect(spans[r] == Span{want[r].a, want[r].b}, tag.str() + " span");
    }
}

bool code_contains(const CodeSet& cs, const std::string& bits) {
    BitVec w = BitVec::from_string(bits);
    for (const auto& packed : cs.words) {
        BitVec v(static_cast<std::size_t>(cs.n));
        for (int i = 0; i < cs.n; ++i) {
            if ((packed[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u) {
                v.set(static_cast<std::size_t>(i), true);
            }
        }
        if (v == w) return true;
    }
    return false;
}

void criterion_characteristic_rate13() {
    PolyMatrix g = PolyMatrix::parse(cases::kG13);
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN13);
    SpanList want = {{0, 5}, {1, 7}, {2, 0}, {3, 8}, {4, 1},
                     {5, 3}, {6, 2}, {7, 4}, {8, 6}};
    expect(span_sets_equal(cm.spans, want), "span list differs");

    Tbgm tb = build_tbgm(g, cases::kN13);
    CharacteristicCheck check = verify_characteristic(cm, tb.m);
    expect(check.generates, "rows do not generate the code");
    expect(check.spans_valid, "a span misses a nonzero position");
    expect(check.endpoints_distinct, "duplicate span endpoints");
    expect(check.covering, "coverage count is not n-k everywhere");

    std::vector<MsfBasis> bases = compute_msf_bases(g, cases::kN13);
    expect(bases.size() == 3, "expected one basis per start offset");
    expect_rows(bases[0].base, bases[0].base_spans, cases::kMsf13Base0,
                "offset-0 basis");
    expect_rows(bases[1].shifted, bases[1].shifted_spans,
                cases::kMsf13Shifted1, "offset-1 shifted basis");
    expect_rows(bases[2].shifted, bases[2].shifted_spans,
                cases::kMsf13Shifted2, "offset-2 shifted basis");
}

void criterion_span_counts_rate23() {
    CharacteristicMatrix cm = assemble_characteristic(
        PolyMatrix::parse(cases::kG23), cases::kN23);
    expect(cm.spans[0] == Span{0, 4}, "basic span 0 differs");
    expect(cm.spans[1] == Span{1, 3}, "basic span 1 differs");
    expect(cm.spans[2] == Span{2, 5}, "basic span 2 differs");
    SpanAnalysis a = analyze_spans(cm);
    expect(a.theta == cases::kTheta23, "theta differs");
    expect(a.total_count == 8, "per-block variant count differs");
    expect(a.ell == cases::kEll23, "basic span length sum differs");
    expect(a.ell == a.ell_formula, "length sum misses the formula");
}

void criterion_two_state_reduction() {
    PolyMatrix g = octal_decode(cases::kOct75);
    ReductionReport rep = search_reduction(g, cases::kN75);
    expect(rep.nu == 2, "original constraint length differs");
    expect(rep.reduced, "no reduction found");
    expect(rep.best.reduced == PolyMatrix::parse(cases::kG75Reduced),
           "reduced encoder differs");
    expect(rep.best.nu_reduced == 1, "reduced constraint length differs");
    expect(rep.best.shifts == cases::kShifts75, "shift vector differs");
    expect(rep.verification == "pass", "library verification failed");

    CodeSet original = enumerate_code(build_tbgm(g, cases::kN75).m);
    CodeSet moved = shift_code(original, 2, rep.best.shifts);
    CodeSet reduced_code =
        enumerate_code(build_tbgm(rep.best.reduced, cases::kN75).m);
    expect(original.size() == 32, "expected 32 codewords");
    expect(codes_equal(moved, reduced_code), "shifted codes differ");
    expect(code_contains(original, cases::kWord75),
           "sample word missing from the original code");
    expect(code_contains(reduced_code, cases::kWord75Shifted),
           "shifted sample word missing from the reduced code");
    BitVec w = BitVec::from_string(cases::kWord75);
    expect(shift_word(w, 2, rep.best.shifts).to_string() ==
               cases::kWord75Shifted,
           "word shift image differs");
}

void criterion_variant_matrix_reduction() {
    ReductionReport rep =
        search_reduction(octal_decode(cases::kOct7454), cases::kN7454);
    expect(rep.variant_count == 2, "variant count differs");
    expect(rep.reduced, "no reduction found");
    expect(rep.best.variant_index == 1, "winning variant differs");
    expect(rep.best.encoder == PolyMatrix::parse(cases::kG7454Selected),
           "selected encoder differs");
    expect(rep.best.reduced == PolyMatrix::parse(cases::kG7454Reduced),
           "reduced encoder differs");
    expect(rep.verification == "pass", "library verification failed");
    for (const CandidateOutcome& out : rep.outcomes) {
        if (out.variant_index != 0) continue;
        if (!out.generates || !out.extractable) continue;
        expect(out.nu_reduced >= rep.nu,
               "the base matrix unexpectedly yields a reduction");
    }
}

void criterion_reduction_catalog() {
    for (const cases::ReductionCase& c : cases::kCatalog) {
        PolyMatrix g = PolyMatrix::parse(c.poly);
        ReductionReport rep = search_reduction(g, c.N);
        std::string tag = std::string(c.poly) + ": ";
        expect(rep.found_valid, tag + "no valid selection");
        expect(rep.reduced, tag + "constraint length not reduced");
        expect(rep.verification == "pass", tag + "verification failed");

        PolyMatrix selected = PolyMatrix::parse(c.selected);
        PolyMatrix reduced = PolyMatrix::parse(c.reduced);
        const CandidateOutcome* listed = nullptr;
        for (const CandidateOutcome& out : rep.outcomes) {
            if (out.generates && out.extractable && out.encoder == selected &&
                out.reduced == reduced) {
                listed = &out;
                break;
            }
        }
        expect(listed != nullptr, tag + "catalog pair not among outcomes");
        expect(listed->nu_reduced == rep.best.nu_reduced,
               tag + "catalog pair misses the best constraint length");
        CodeSet original_code = enumerate_code(build_tbgm(g, c.N).m);
        CodeSet listed_code =
            enumerate_code(build_tbgm(listed->reduced, c.N).m);
        expect(codes_equal(
                   shift_code(original_code, g.cols(), listed->shifts),
                   listed_code),
               tag + "catalog pair fails the codeword oracle");
    }
}

void criterion_dual_pipeline() {
    PolyMatrix g = PolyMatrix::parse(cases::kG23n5);
    PolyMatrix h = compute_check_matrix(g);
    expect(h == PolyMatrix::parse(cases::kCheck23n5),
           "check matrix differs");
    PolyMatrix ht = reciprocal_dual(h);
    expect(ht == PolyMatrix::parse(cases::kDualEncoder23n5),
           "dual encoder differs");

    CharacteristicMatrix y = assemble_characteristic(ht, cases::kN23n5);
    SpanList want = cases::spans_of(cases::kY23n5);
    expect(y.spans.size() == want.size(), "dual span count differs");
    for (std::size_t r = 0; r < want.size(); ++r) {
        expect(y.spans[r] == want[r], "dual span list differs");
    }

    DualReport rep = dual_procedure(g, cases::kN23n5);
    expect(rep.valid, "dual route did not validate");
    expect(rep.selected == PolyMatrix::parse(cases::kDualSelected23n5),
           "dual selection differs");
    expect(rep.reduced_check == PolyMatrix::parse(cases::kReducedCheck23n5),
           "reduced check matrix differs");

    ReductionReport primal = search_reduction(g, cases::kN23n5);
    expect(primal.found_valid, "primal selection missing");
    SimultaneousReport sim = simultaneous_reduce(
        primal.best.encoder, rep.reduced_check, cases::kN23n5);
    expect(sim.g_out == PolyMatrix::parse(cases::kGFinal23n5),
           "final generator differs");
    expect(sim.shifts == cases::kSimShifts23n5, "shift vector differs");
    expect(sim.nu_after == 1, "final constraint length differs");

    CodeSet moved = shift_code(enumerate_code(build_tbgm(g, cases::kN23n5).m),
                               3, sim.shifts);
    CodeSet reduced_code =
        enumerate_code(build_tbgm(sim.g_out, cases::kN23n5).m);
    expect(moved.size() == 1024, "expected 1024 codewords");
    expect(codes_equal(moved, reduced_code), "shifted codes differ");

    CharacteristicMatrix x = assemble_characteristic(g, cases::kN23n5);
    DualSelectionCheck cert = dual_selection_check(
        x, cases::kPrimalStarts23n5, y, cases::kDualStarts23n5,
        build_tbgm(ht, cases::kN23n5).m);
    expect(cert.conditions_hold(), "dual-side conditions failed");
    expect(cert.primal_rank_full, "certificate misses full primal rank");
    expect(rank(build_tbgm(g, cases::kN23n5).m) == 10,
           "direct rank is not 10");
}

void criterion_negative_control() {
    PolyMatrix g = octal_decode(cases::kOct75);
    ReductionReport rep = search_reduction(g, cases::kN75Long);
    expect(rep.found_valid, "no valid selection at six sections");
    expect(!rep.reduced, "unexpected reduction at six sections");
    expect(rep.bound.max_n == 5, "section bound differs");
    expect(!rep.bound.within, "six sections reported within the bound");
    CharacteristicMatrix cm = assemble_characteristic(g, cases::kN75Long);
    expect(cm.spans[0] == Span{0, 5}, "basic span 0 differs");
    expect(cm.spans[1] == Span{1, 8}, "basic span 1 differs");
}

void criterion_octal_pairs() {
    for (const cases::OctalPairCase& c : cases::kOctalPairs) {
        std::string tag = std::string(c.original) + ": ";
        ReductionReport rep = search_reduction(octal_decode(c.original), c.N);
        expect(rep.nu == c.nu_original, tag + "original nu differs");
        expect(rep.reduced, tag + "no reduction found");
        expect(rep.best.nu_reduced == c.nu_reduced,
               tag + "reduced nu differs");
        expect(rep.verification == "pass", tag + "verification failed");
        CodeSet reduced_code =
            enumerate_code(build_tbgm(rep.best.reduced, c.N).m);
        CodeSet partner_code =
            enumerate_code(build_tbgm(octal_decode(c.partner), c.N).m);
        bool matched = false;
        for (int t0 = 0; t0 < c.N && !matched; ++t0) {
            for (int t1 = 0; t1 < c.N && !matched; ++t1) {
                matched = codes_equal(
                    shift_code(reduced_code, 2, {t0, t1}), partner_code);
            }
        }
        expect(matched,
               tag + "partner code unreachable by residual branch shifts");
    }
}

void criterion_corpus_properties() {
    std::vector<cases::CorpusEntry> corpus = cases::random_corpus();
    expect(corpus.size() >= 20, "corpus smaller than 20 entries");
    for (const cases::CorpusEntry& entry : corpus) {
        std::string tag = entry.g.to_string() + " N=" +
                          std::to_string(entry.N) + ": ";
        CharacteristicMatrix cm = assemble_characteristic(entry.g, entry.N);
        Tbgm tb = build_tbgm(entry.g, entry.N);

        CharacteristicCheck check = verify_characteristic(cm, tb.m);
        expect(check.generates && check.spans_valid &&
                   check.endpoints_distinct && check.covering,
               tag + "characteristic checks failed");

        SpanAnalysis a = analyze_spans(cm);
        int n = cm.n();
        int k = cm.k();
        expect(a.span_sum == n * (n - k), tag + "span sum formula failed");
        expect(a.ell == a.ell_formula, tag + "length sum formula failed");

        SpanList rebuilt;
        for (const Span& s : a.basic) {
            for (int i = 0; i < cm.N; ++i) {
                rebuilt.push_back(span_shift(s, i * cm.n0, n));
            }
        }
        expect(span_sets_equal(rebuilt, cm.spans),
               tag + "span list is not shift closed");

        PolyMatrix ht = reciprocal_dual(compute_check_matrix(entry.g));
        expect(verify_duality(tb, build_tbgm(ht, entry.N)),
               tag + "duality product is nonzero");
        expect(state_profile(entry.g) == state_profile(ht),
               tag + "state profiles differ");

        for (int j = 0; j < entry.g.cols(); ++j) {
            PolyMatrix lifted = multiply_column(entry.g, j, 2);
            expect(divide_column(lifted, j, 2) == entry.g,
                   tag + "column division round trip failed");
        }

        if (entry.g.rows() >= 2) {
            int L = metrics(entry.g).L;
            for (int q = 0; q + L + 1 <= entry.N && q <= 2; ++q) {
                PolyMatrix moved_g = row_add(entry.g, 0, q, 1);
                expect(row_space_equal(tb.m, build_tbgm(moved_g, entry.N).m),
                       tag + "row addition changed the code");
            }
        }

        CodeSet via_trellis = trellis_code(build_tb_trellis(entry.g, entry.N));
        CodeSet via_matrix = enumerate_code(tb.m);
        expect(codes_equal(via_trellis, via_matrix),
               tag + "trellis paths differ from the enumeration");
    }
}

void criterion_variant_counting() {
    CharacteristicMatrix cm = assemble_characteristic(
        PolyMatrix::parse(cases::kG23), cases::kN23);
    Tbgm tb = build_tbgm(PolyMatrix::parse(cases::kG23), cases::kN23);
    std::vector<CharacteristicMatrix> variants =
        enumerate_variants(cm, VariantMode::kFull);
    expect(variants.size() == 8, "expected exactly 8 variants");
    std::set<std::string> seen;
    for (const CharacteristicMatrix& v : variants) {
        seen.insert(v.x.to_string());
        CharacteristicCheck check = verify_characteristic(v, tb.m);
        expect(check.ok(), "a variant fails the characteristic checks");
    }
    expect(seen.size() == 8, "variants are not pairwise distinct");
}

struct Criterion {
    int id;
    const char* label;
    std::function<void()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> gate = {
        {1, "rate 1/3 characteristic matrix and shifted bases",
         criterion_characteristic_rate13},
        {2, "rate 2/3 basic spans, theta, and length sum",
         criterion_span_counts_rate23},
        {3, "octal (7,5) five-section reduction with oracle",
         criterion_two_state_reduction},
        {4, "octal (74,54) reduction through the variant matrix",
         criterion_variant_matrix_reduction},
        {5, "single-route reduction catalog", criterion_reduction_catalog},
        {6, "rate 2/3 dual pipeline and simultaneous reduction",
         criterion_dual_pipeline},
        {7, "six-section negative control", criterion_negative_control},
        {8, "octal pair equivalences", criterion_octal_pairs},
        {9, "random-corpus properties", criterion_corpus_properties},
        {10, "full variant count at small size", criterion_variant_counting},
    };
    bool all_pass = true;
    for (const Criterion& c : gate) {
        try {
            c.run();
            std::printf("PASS criterion %d: %s\n", c.id, c.label);
        } catch (const std::exception& e) {
            all_pass = false;
            std::printf("FAIL criterion %d: %s: %s\n", c.id, c.label,
                        e.what());
        }
    }
    return all_pass ? 0 : 1;
}
