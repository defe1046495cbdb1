#include "tbcc/reduction.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

#include "tbcc/errors.hpp"
#include "tbcc/trellis.hpp"

namespace tbcc {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            pick[static_cast<std::size_t>(j)] =
                pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

int shifted_column_count(const std::vector<int>& division) {
    int c = 0;
    for (int p : division) {
        if (p != 0) ++c;
    }
    return c;
}

}  // namespace

Candidate select_candidate(const CharacteristicMatrix& cm,
                           const std::vector<int>& basic_starts,
                           const BitMatrix& code_rows) {
    const int n = cm.n();
    Candidate cand;
    cand.basic_starts = basic_starts;
    std::sort(cand.basic_starts.begin(), cand.basic_starts.end());
    if (static_cast<int>(cand.basic_starts.size()) != cm.k0) {
        throw SelectionError("selection needs exactly " +
                             std::to_string(cm.k0) + " block-0 starts");
    }
    for (int s : cand.basic_starts) {
        if (s < 0 || s >= cm.n0) {
            throw SelectionError("start " + std::to_string(s) +
                                 " is outside block 0");
        }
        cand.span_length_sum +=
            span_length(cm.spans[static_cast<std::size_t>(s)], n);
    }

    std::vector<int> starts;
    for (int s : cand.basic_starts) {
        for (int m = 0; m < cm.N; ++m) {
            starts.push_back((s + m * cm.n0) % n);
        }
    }
    std::sort(starts.begin(), starts.end());
    cand.rows = BitMatrix(0, static_cast<std::size_t>(n));
    for (int s : starts) {
        cand.rows.append_row(cm.row_at_start(s));
        cand.spans.push_back(cm.spans[static_cast<std::size_t>(s)]);
    }

    cand.generates = static_cast<int>(rank(cand.rows)) == cm.k() &&
                     row_space_equal(cand.rows, code_rows);
    try {
        cand.encoder = rows_to_polymatrix(cand.rows, cand.spans, cm.n0, cm.N);
        cand.extractable = true;
    } catch (const NotShiftStructuredError&) {
        cand.extractable = false;
    }
    return cand;
}

DivisionSweep divide_encoder(const PolyMatrix& g) {
    DivisionSweep sweep;
    sweep.nu_before = metrics(g).nu;
    const int cols = g.cols();
    std::vector<int> factor(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        factor[static_cast<std::size_t>(j)] = column_monomial_factor(g, j);
    }

    std::vector<int> p(static_cast<std::size_t>(cols), 0);
    bool have_best = false;
    int best_total = 0;
    while (true) {
        PolyMatrix divided = g;
        for (int j = 0; j < cols; ++j) {
            if (p[static_cast<std::size_t>(j)] > 0) {
                divided =
                    divide_column(divided, j, p[static_cast<std::size_t>(j)]);
            }
        }
        const int nu = metrics(divided).nu;
        sweep.options.push_back(DivisionOption{p, nu});
        int total = 0;
        for (int v : p) total += v;
        // Lexicographic enumeration makes the final tie-break implicit.
        if (!have_best || nu < sweep.nu_after ||
            (nu == sweep.nu_after && total < best_total)) {
            have_best = true;
            sweep.nu_after = nu;
            sweep.best = p;
            sweep.reduced = divided;
            best_total = total;
        }
        int j = cols - 1;
        while (j >= 0 &&
               p[static_cast<std::size_t>(j)] ==
                   factor[static_cast<std::size_t>(j)]) {
            p[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++p[static_cast<std::size_t>(j)];
    }
    sweep.shifts.assign(sweep.best.begin(), sweep.best.end());
    for (int& s : sweep.shifts) s = -s;
    return sweep;
}

SectionBound section_bound(int n0, int k0, int nu, int N) {
    if (k0 <= 0 || k0 >= n0) {
        throw DimensionError("bound needs 0 < k0 < n0");
    }
    SectionBound b;
    b.max_n = (n0 * (nu + k0) - k0) / (k0 * (n0 - k0));
    b.within = N <= b.max_n;
    return b;
}

ReductionReport search_reduction(const PolyMatrix& g, int N, VariantMode mode,
                                 int jobs, bool force) {
    CanonicalDiagnosis diag = validate_canonical(g);
    if (!diag.canonical() && !force) {
        throw NoncanonicalInputError(
            "encoder is not canonical (rank_ok=" +
            std::to_string(diag.rank_ok) + " basic=" +
            std::to_string(diag.basic) + " reduced=" +
            std::to_string(diag.reduced) + "); rerun with force to proceed");
    }

    ReductionReport rep;
    rep.original = g;
    rep.n0 = g.cols();
    rep.k0 = g.rows();
    rep.N = N;
    rep.nu = metrics(g).nu;
    rep.mode = mode;
    rep.bound = section_bound(rep.n0, rep.k0, rep.nu, N);

    Tbgm tb = build_tbgm(g, N);
    rep.characteristic = assemble_characteristic(g, N);
    rep.theta = analyze_spans(rep.characteristic).theta;
    std::vector<CharacteristicMatrix> variants =
        enumerate_variants(rep.characteristic, mode);
    rep.variant_count = variants.size();
    std::vector<std::vector<int>> subsets = combinations(rep.n0, rep.k0);

    const std::size_t total = variants.size() * subsets.size();
    rep.outcomes.resize(total);
    auto evaluate = [&](std::size_t index) {
        const std::size_t v = index / subsets.size();
        const std::size_t s = index % subsets.size();
        CandidateOutcome& out = rep.outcomes[index];
        out.index = index;
        out.variant_index = v;
        Candidate cand = select_candidate(variants[v], subsets[s], tb.m);
        out.basic_starts = cand.basic_starts;
        out.generates = cand.generates;
        out.extractable = cand.extractable;
        out.span_length_sum = cand.span_length_sum;
        if (!cand.generates || !cand.extractable) return;
        out.encoder = cand.encoder;
        out.nu_selected = metrics(cand.encoder).nu;
        DivisionSweep sweep = divide_encoder(cand.encoder);
        out.nu_reduced = sweep.nu_after;
        out.division = sweep.best;
        out.shifts = sweep.shifts;
        out.reduced = sweep.reduced;
        out.sweep = sweep.options;
    };

    if (jobs > 1 && total > 1) {
        const std::size_t workers =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < total; i += workers) evaluate(i);
            });
        }
        for (std::thread& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < total; ++i) evaluate(i);
    }

    for (const CandidateOutcome& out : rep.outcomes) {
        if (!out.generates || !out.extractable) continue;
        if (!rep.found_valid) {
            rep.found_valid = true;
            rep.best = out;
            continue;
        }
        const int sc = shifted_column_count(out.division);
        const int best_sc = shifted_column_count(rep.best.division);
        if (std::tie(out.nu_reduced, out.span_length_sum, sc, out.index) <
            std::tie(rep.best.nu_reduced, rep.best.span_length_sum, best_sc,
                     rep.best.index)) {
            rep.best = out;
        }
    }
    rep.reduced = rep.found_valid && rep.best.nu_reduced < rep.nu;

    rep.verification = "skipped";
    if (rep.reduced) {
        try {
            CodeSet original = enumerate_code(tb.m);
            CodeSet shifted = shift_code(original, rep.n0, rep.best.shifts);
            CodeSet reduced =
                enumerate_code(build_tbgm(rep.best.reduced, N).m);
            rep.verification =
                codes_equal(shifted, reduced) ? "pass" : "fail";
        } catch (const OracleBudgetError&) {
            rep.verification = "skipped";
        }
    }
    return rep;
}

DualReport dual_procedure(const PolyMatrix& g, int N, VariantMode mode,
                          int jobs, bool force) {
    DualReport rep;
    rep.check = compute_check_matrix(g);
    rep.reciprocal = reciprocal_dual(rep.check);
    if (!verify_duality(build_tbgm(g, N), build_tbgm(rep.reciprocal, N))) {
        throw Error("reciprocal dual does not check the tail-biting code");
    }
    // The dual-side encoder is ours, not user input; skip its canonicity
    // gate and let the duality check above stand in for it.
    (void)force;
    rep.search = search_reduction(rep.reciprocal, N, mode, jobs, true);
    rep.valid = rep.search.found_valid;
    if (rep.valid) {
        rep.selected = rep.search.best.encoder;
        rep.reduced_dual = rep.search.best.reduced;
        rep.reduced_check = reciprocal_dual(rep.selected);
    }
    return rep;
}

DualSelectionCheck dual_selection_check(const CharacteristicMatrix& x,
                                        const std::vector<int>& primal_starts,
                                        const CharacteristicMatrix& y,
                                        const std::vector<int>& dual_starts,
                                        const BitMatrix& dual_code_rows) {
    DualSelectionCheck out;
    const int n = x.n();

    auto orbit = [&](const std::vector<int>& basics, int n0) {
        std::vector<int> starts;
        for (int s : basics) {
            for (int m = 0; m < x.N; ++m) starts.push_back((s + m * n0) % n);
        }
        std::sort(starts.begin(), starts.end());
        return starts;
    };
    auto shift_structured = [&](const CharacteristicMatrix& cm,
                                const std::vector<int>& basics,
                                int expected) {
        if (static_cast<int>(basics.size()) != expected) return false;
        for (int s : basics) {
            if (s < 0 || s >= cm.n0) return false;
            for (int m = 1; m < cm.N; ++m) {
                const int t = (s + m * cm.n0) % n;
                if (!(cm.row_at_start(t) ==
                      cm.row_at_start(s).rotated_right(m * cm.n0))) {
                    return false;
                }
                Span expect =
                    span_shift(cm.spans[static_cast<std::size_t>(s)],
                               m * cm.n0, n);
                if (!(cm.spans[static_cast<std::size_t>(t)] == expect)) {
                    return false;
                }
            }
        }
        return true;
    };
    auto inclusion_free = [&](const CharacteristicMatrix& cm,
                              const std::vector<int>& starts) {
        for (int s : starts) {
            const Span& outer = cm.spans[static_cast<std::size_t>(s)];
            for (const Span& t : cm.spans) {
                if (t == outer) continue;
                if (span_includes(outer, t, n)) return false;
            }
        }
        return true;
    };

    std::vector<int> s_starts = orbit(primal_starts, x.n0);
    std::vector<int> hat_starts = orbit(dual_starts, y.n0);

    out.primal_shift_structured = shift_structured(x, primal_starts, x.k0);
    out.primal_no_inclusion = inclusion_free(x, s_starts);
    out.dual_shift_structured = shift_structured(y, dual_starts, y.k0);
    out.dual_no_inclusion = inclusion_free(y, hat_starts);

    BitMatrix dual_rows(0, static_cast<std::size_t>(n));
    SpanList hat_s;
    for (int s : hat_starts) {
        dual_rows.append_row(y.row_at_start(s));
        hat_s.push_back(y.spans[static_cast<std::size_t>(s)]);
    }
    out.dual_generates =
        rank(dual_rows) == dual_rows.rows() &&
        row_space_equal(dual_rows, dual_code_rows);

    SpanList s_spans;
    for (int s : s_starts) {
        s_spans.push_back(x.spans[static_cast<std::size_t>(s)]);
    }
    SpanList complement;
    for (const Span& t : y.spans) {
        const Span reversed{t.b, t.a};
        bool in_s = false;
        for (const Span& s : s_spans) {
            if (s == reversed) {
                in_s = true;
                break;
            }
        }
        if (!in_s) complement.push_back(t);
    }
    out.complementary = span_sets_equal(hat_s, complement);

    BitMatrix primal_rows(0, static_cast<std::size_t>(n));
    for (int s : s_starts) primal_rows.append_row(x.row_at_start(s));
    out.primal_rank_full = static_cast<int>(rank(primal_rows)) == x.k();
    return out;
}

namespace {

// Strips monomial row factors; returns the total degree removed.
int normalize_rows(PolyMatrix& m) {
    int removed = 0;
    for (int r = 0; r < m.rows(); ++r) {
        int factor = -1;
        for (int c = 0; c < m.cols(); ++c) {
            const Poly& e = m.at(r, c);
            if (e.is_zero()) continue;
            const int ld = e.low_degree();
            factor = factor < 0 ? ld : std::min(factor, ld);
        }
        if (factor > 0) {
            for (int c = 0; c < m.cols(); ++c) {
                if (!m.at(r, c).is_zero()) {
                    m.at(r, c) = m.at(r, c).divide_monomial(factor);
                }
            }
            removed += factor;
        }
    }
    return removed;
}

bool orthogonal(const PolyMatrix& g, const PolyMatrix& h) {
    PolyMatrix prod = poly_mat_mul_transpose(g, h);
    for (int r = 0; r < prod.rows(); ++r) {
        for (int c = 0; c < prod.cols(); ++c) {
            if (!prod.at(r, c).is_zero()) return false;
        }
    }
    return true;
}

struct PairState {
    PolyMatrix g;
    PolyMatrix h;
    std::vector<int> shifts;
};

// Candidate macro: primitives to replay on application.
struct Macro {
    enum class Kind { kDivide, kRowAdd, kMultiply } kind;
    std::vector<int> division;  // the division step (all kinds)
    int src = 0, q = 0, dst = 0;  // kRowAdd
    int col = 0;                  // kMultiply
    int nu_after = 0;
};

void apply_division(PairState& st, const std::vector<int>& p,
                    std::vector<SimultaneousStep>* trace) {
    bool any = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0) continue;
        any = true;
        st.g = divide_column(st.g, static_cast<int>(j), p[j]);
        st.h = multiply_column(st.h, static_cast<int>(j), p[j]);
        st.shifts[j] -= p[j];
    }
    if (!any) return;
    normalize_rows(st.h);
    if (trace) {
        std::string detail = "columns";
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] != 0) {
                detail += " " + std::to_string(j) + ":" + std::to_string(p[j]);
            }
        }
        trace->push_back(
            SimultaneousStep{"divide", detail, st.g, st.h, st.shifts});
    }
}

void apply_row_add(PairState& st, int src, int q, int dst,
                   std::vector<SimultaneousStep>* trace) {
    st.g = row_add(st.g, src, q, dst);
    if (trace) {
        trace->push_back(SimultaneousStep{
            "row_add",
            "row " + std::to_string(dst) + " += D^" + std::to_string(q) +
                " * row " + std::to_string(src),
            st.g, st.h, st.shifts});
    }
}

// Multiplies one generator column by D while dividing the same check column
// by D (requires that factor), then strips any row factors this created.
bool apply_multiply(PairState& st, int col,
                    std::vector<SimultaneousStep>* trace) {
    if (column_monomial_factor(st.h, col) < 1) return false;
    st.g = multiply_column(st.g, col, 1);
    st.h = divide_column(st.h, col, 1);
    st.shifts[static_cast<std::size_t>(col)] += 1;
    if (trace) {
        trace->push_back(SimultaneousStep{
            "multiply", "column " + std::to_string(col), st.g, st.h,
            st.shifts});
    }
    if (normalize_rows(st.g) > 0 || normalize_rows(st.h) > 0) {
        if (trace) {
            trace->push_back(SimultaneousStep{"normalize", "row factors",
                                              st.g, st.h, st.shifts});
        }
    }
    return true;
}

}  // namespace

SimultaneousReport simultaneous_reduce(const PolyMatrix& g,
                                       const PolyMatrix& h, int N) {
    if (!orthogonal(g, h)) {
        throw DimensionError("matrices are not an orthogonal pair");
    }
    SimultaneousReport rep;
    rep.g_in = g;
    rep.h_in = h;
    rep.nu_before = metrics(g).nu;

    PairState st{g, h, std::vector<int>(static_cast<std::size_t>(g.cols()), 0)};
    int nu = rep.nu_before;

    while (true) {
        std::vector<Macro> macros;

        // (a) pure column division.
        {
            DivisionSweep sweep = divide_encoder(st.g);
            bool nonzero = false;
            for (int v : sweep.best) nonzero = nonzero || v != 0;
            if (nonzero) {
                Macro m{Macro::Kind::kDivide, sweep.best, 0, 0, 0, 0,
                        sweep.nu_after};
                macros.push_back(m);
            }
        }
        // (b) one row addition, then the best division.
        for (int src = 0; src < st.g.rows(); ++src) {
            for (int dst = 0; dst < st.g.rows(); ++dst) {
                if (src == dst) continue;
                for (int q = 0; q < N; ++q) {
                    PairState trial = st;
                    apply_row_add(trial, src, q, dst, nullptr);
                    if (metrics(trial.g).L > N - 1) break;
                    DivisionSweep sweep = divide_encoder(trial.g);
                    Macro m{Macro::Kind::kRowAdd, sweep.best, src, q, dst, 0,
                            sweep.nu_after};
                    macros.push_back(m);
                }
            }
        }
        // (c) one column multiplication, then the best division.
        for (int col = 0; col < st.g.cols(); ++col) {
            PairState trial = st;
            if (!apply_multiply(trial, col, nullptr)) continue;
            if (metrics(trial.g).L > N - 1) continue;
            DivisionSweep sweep = divide_encoder(trial.g);
            Macro m{Macro::Kind::kMultiply, sweep.best, 0, 0, 0, col,
                    sweep.nu_after};
            macros.push_back(m);
        }

        const Macro* chosen = nullptr;
        for (const Macro& m : macros) {
            if (m.nu_after >= nu) continue;
            if (chosen == nullptr || m.nu_after < chosen->nu_after) {
                chosen = &m;
            }
        }
        if (chosen == nullptr) break;

        switch (chosen->kind) {
            case Macro::Kind::kDivide:
                break;
            case Macro::Kind::kRowAdd:
                apply_row_add(st, chosen->src, chosen->q, chosen->dst,
                              &rep.trace);
                break;
            case Macro::Kind::kMultiply:
                apply_multiply(st, chosen->col, &rep.trace);
                break;
        }
        apply_division(st, chosen->division, &rep.trace);
        if (!orthogonal(st.g, st.h)) {
            throw Error("check pair lost orthogonality during reduction");
        }
        nu = metrics(st.g).nu;
    }

    if (!validate_canonical(st.g).basic) {
        st.g = basic_equivalent(st.g);
        rep.trace.push_back(SimultaneousStep{"basicize", "", st.g, st.h,
                                             st.shifts});
        if (!orthogonal(st.g, st.h)) {
            throw Error("check pair lost orthogonality during reduction");
        }
    }

    rep.g_out = st.g;
    rep.h_out = st.h;
    rep.nu_after = metrics(st.g).nu;
    rep.shifts = st.shifts;
    return rep;
}

}  // namespace tbcc
