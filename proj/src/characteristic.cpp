#include "tbcc/characteristic.hpp"

#include <algorithm>
#include <map>

#include "tbcc/errors.hpp"

namespace tbcc {

namespace {

Span conventional_span_of(const BitVec& row) {
    return Span{row.first_set(), row.last_set()};
}

struct Production {
    BitVec row;
    Span span;
};

// Pair-set comparison helper: (row bits, span) as a sortable key.
std::string production_key(const Production& p) {
    return p.row.to_string() + "|" + span_to_string(p.span);
}

}  // namespace

std::vector<MsfBasis> compute_msf_bases(const PolyMatrix& g, int N) {
    Tbgm tb = build_tbgm(g, N);
    if (tbgm_rank_deficient(tb)) {
        throw DegenerateTailBitingError(
            "tail-biting generator matrix is rank deficient at N=" +
            std::to_string(N));
    }
    const int n = tb.n();
    std::vector<MsfBasis> bases;
    bases.reserve(static_cast<std::size_t>(tb.n0));
    for (int j = 0; j < tb.n0; ++j) {
        MsfBasis basis;
        basis.j = j;
        BitMatrix shifted_code(0, static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < tb.m.rows(); ++r) {
            shifted_code.append_row(tb.m.row(r).rotated_left(j));
        }
        basis.base = minimal_span_form(shifted_code);
        for (std::size_t r = 0; r < basis.base.rows(); ++r) {
            Span s = conventional_span_of(basis.base.row(r));
            basis.base_spans.push_back(s);
            basis.shifted.append_row(basis.base.row(r).rotated_right(j));
            basis.shifted_spans.push_back(span_shift(s, j, n));
        }
        bases.push_back(std::move(basis));
    }
    return bases;
}

CharacteristicMatrix assemble_characteristic(const PolyMatrix& g, int N) {
    if (g.rows() >= g.cols()) {
        throw InvalidEncoderError("encoder must have fewer rows than columns");
    }
    std::vector<MsfBasis> bases = compute_msf_bases(g, N);
    const int n0 = static_cast<int>(g.cols());
    const int k0 = static_cast<int>(g.rows());
    const int n = n0 * N;

    // Keep the first generator produced for each span start. Production
    // order: shift amount i outermost, then basis index j, then basis row.
    std::map<int, Production> chosen;
    for (int i = 0; i < N; ++i) {
        const int shift = i * n0;
        for (const MsfBasis& basis : bases) {
            for (std::size_t r = 0; r < basis.shifted.rows(); ++r) {
                Production p;
                p.row = basis.shifted.row(r).rotated_right(shift);
                p.span = span_shift(basis.shifted_spans[r], shift, n);
                if (chosen.find(p.span.a) == chosen.end()) {
                    chosen.emplace(p.span.a, std::move(p));
                }
            }
        }
    }
    if (static_cast<int>(chosen.size()) != n) {
        throw DegenerateBasisError(
            "shifted bases cover only " + std::to_string(chosen.size()) +
            " of " + std::to_string(n) + " span starts");
    }

    CharacteristicMatrix cm;
    cm.n0 = n0;
    cm.k0 = k0;
    cm.N = N;
    cm.x = BitMatrix(0, static_cast<std::size_t>(n));
    for (const auto& [start, p] : chosen) {  // map iterates starts ascending
        (void)start;
        cm.x.append_row(p.row);
        cm.spans.push_back(p.span);
    }

    // Fast path: the block-0 productions of every basis already lie in
    // X_0* union rho_{n0}(X_0*), so the first basis alone determines X.
    {
        std::vector<std::string> allowed;
        for (std::size_t r = 0; r < bases[0].base.rows(); ++r) {
            Production direct{bases[0].base.row(r), bases[0].base_spans[r]};
            allowed.push_back(production_key(direct));
            Production rot{bases[0].base.row(r).rotated_right(n0),
                           span_shift(bases[0].base_spans[r], n0, n)};
            allowed.push_back(production_key(rot));
        }
        std::sort(allowed.begin(), allowed.end());
        bool inside = true;
        for (const MsfBasis& basis : bases) {
            for (std::size_t r = 0; r < basis.shifted.rows() && inside; ++r) {
                Production p{basis.shifted.row(r), basis.shifted_spans[r]};
                inside = std::binary_search(allowed.begin(), allowed.end(),
                                            production_key(p));
            }
        }
        cm.corollary_fast_path = inside;
    }

    // The span multiset must be closed under rho_{n0}; that is structural
    // and a violation means the assembly itself is broken.
    for (int s = 0; s < n0; ++s) {
        for (int m = 1; m < N; ++m) {
            const int t = (s + m * n0) % n;
            Span expect = span_shift(cm.spans[static_cast<std::size_t>(s)],
                                     m * n0, n);
            if (cm.spans[static_cast<std::size_t>(t)].a != expect.a ||
                cm.spans[static_cast<std::size_t>(t)].b != expect.b) {
                throw DegenerateBasisError(
                    "span list is not closed under block shifts");
            }
        }
    }

    // Rows should be block shifts of the rows starting in block 0. The
    // keep-first rule can, in principle, pick a different generator for the
    // same shifted span; re-close from block 0 when that happens so shifted
    // encoders read directly off the matrix.
    for (int s = 0; s < n0; ++s) {
        for (int m = 1; m < N; ++m) {
            const int t = (s + m * n0) % n;
            BitVec expect = cm.x.row(static_cast<std::size_t>(s))
                                .rotated_right(m * n0);
            if (!(cm.x.row(static_cast<std::size_t>(t)) == expect)) {
                cm.x.row(static_cast<std::size_t>(t)) = expect;
                cm.shift_repaired = true;
            }
        }
    }
    return cm;
}

CharacteristicCheck verify_characteristic(const CharacteristicMatrix& cm,
                                          const BitMatrix& code_rows) {
    CharacteristicCheck out;
    const int n = cm.n();
    const int k = cm.k();

    out.generates = static_cast<int>(rank(cm.x)) == k;
    for (std::size_t r = 0; r < cm.x.rows() && out.generates; ++r) {
        out.generates = in_row_space(code_rows, cm.x.row(r));
    }

    out.spans_valid = static_cast<int>(cm.spans.size()) == n;
    for (std::size_t r = 0; r < cm.x.rows() && out.spans_valid; ++r) {
        const Span& s = cm.spans[r];
        const BitVec& row = cm.x.row(r);
        if (row.is_zero() || !row.get(static_cast<std::size_t>(s.a)) ||
            !row.get(static_cast<std::size_t>(s.b))) {
            out.spans_valid = false;
            break;
        }
        for (int p = 0; p < n; ++p) {
            if (!row.get(static_cast<std::size_t>(p))) continue;
            if (p != s.a && !interval_contains(s, p, n)) {
                out.spans_valid = false;
                break;
            }
        }
    }

    std::vector<bool> start_seen(static_cast<std::size_t>(n), false);
    std::vector<bool> end_seen(static_cast<std::size_t>(n), false);
    out.endpoints_distinct = true;
    for (const Span& s : cm.spans) {
        if (start_seen[static_cast<std::size_t>(s.a)] ||
            end_seen[static_cast<std::size_t>(s.b)]) {
            out.endpoints_distinct = false;
            break;
        }
        start_seen[static_cast<std::size_t>(s.a)] = true;
        end_seen[static_cast<std::size_t>(s.b)] = true;
    }

    out.covering = true;
    for (int p = 0; p < n && out.covering; ++p) {
        int hits = 0;
        for (const Span& s : cm.spans) {
            if (interval_contains(s, p, n)) ++hits;
        }
        out.covering = hits == n - k;
    }
    return out;
}

SpanAnalysis analyze_spans(const CharacteristicMatrix& cm) {
    SpanAnalysis out;
    const int n = cm.n();
    out.theta_sets.resize(static_cast<std::size_t>(n));
    for (const Span& s : cm.spans) {
        if (s.a < cm.n0) out.basic.push_back(s);
    }
    for (int i = 0; i < n; ++i) {
        const Span& inner = cm.spans[static_cast<std::size_t>(i)];
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            if (span_includes(cm.spans[static_cast<std::size_t>(r)], inner,
                              n)) {
                out.theta_sets[static_cast<std::size_t>(i)].push_back(r);
            }
        }
        if (i < cm.n0) {
            out.theta += static_cast<int>(
                out.theta_sets[static_cast<std::size_t>(i)].size());
        }
    }
    out.symmetric_count = std::uint64_t{1} << out.theta;
    const long long full_bits =
        static_cast<long long>(out.theta) * cm.N;
    out.total_count =
        full_bits < 64 ? (std::uint64_t{1} << full_bits) : UINT64_MAX;
    for (const Span& s : out.basic) out.ell += span_length(s, n);
    out.ell_formula = cm.n0 * ((cm.n0 - cm.k0) * cm.N + 1);
    for (const Span& s : cm.spans) out.span_sum += span_length(s, n) - 1;
    out.span_sum_formula =
        static_cast<long>(n) * (n - cm.k());
    return out;
}

std::vector<CharacteristicMatrix> enumerate_variants(
    const CharacteristicMatrix& cm, VariantMode mode) {
    SpanAnalysis analysis = analyze_spans(cm);
    const int n = cm.n();

    // One toggle per proper span inclusion with the included row starting in
    // block 0. A toggle adds the included row into the row that contains it;
    // the containing row keeps its span and the row space is unchanged.
    struct Toggle {
        int contained_start;
        int container_row;
    };
    std::vector<Toggle> toggles;
    for (int s = 0; s < cm.n0; ++s) {
        for (int r : analysis.theta_sets[static_cast<std::size_t>(s)]) {
            toggles.push_back(Toggle{s, r});
        }
    }
    const int bits_per_block = static_cast<int>(toggles.size());
    const long long total_bits =
        mode == VariantMode::kShiftSymmetric
            ? bits_per_block
            : static_cast<long long>(bits_per_block) * cm.N;
    if (total_bits > 20) {
        throw OracleBudgetError("variant enumeration needs 2^" +
                                std::to_string(total_bits) + " matrices");
    }

    std::vector<CharacteristicMatrix> out;
    const std::uint64_t count = std::uint64_t{1} << total_bits;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t v = 0; v < count; ++v) {
        CharacteristicMatrix variant = cm;
        for (int m = 0; m < cm.N; ++m) {
            for (int tix = 0; tix < bits_per_block; ++tix) {
                const int bit =
                    mode == VariantMode::kShiftSymmetric
                        ? tix
                        : m * bits_per_block + tix;
                if (((v >> bit) & 1u) == 0) continue;
                const int target =
                    (toggles[static_cast<std::size_t>(tix)].container_row +
                     m * cm.n0) %
                    n;
                const int addend =
                    (toggles[static_cast<std::size_t>(tix)].contained_start +
                     m * cm.n0) %
                    n;
                variant.x.row(static_cast<std::size_t>(target)) ^=
                    cm.x.row(static_cast<std::size_t>(addend));
            }
        }
        out.push_back(std::move(variant));
    }
    return out;
}

}  // namespace tbcc
