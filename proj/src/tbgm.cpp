#include "tbcc/tbgm.hpp"

#include <algorithm>

namespace tbcc {

Tbgm build_tbgm(const PolyMatrix& g, int N) {
    EncoderMetrics m = metrics(g);
    if (N < 1) {
        throw SectionLengthError("section count must be positive");
    }
    if (m.L + 1 > N) {
        throw SectionLengthError("memory " + std::to_string(m.L) +
                                 " needs at least " + std::to_string(m.L + 1) +
                                 " sections, got " + std::to_string(N));
    }
    for (int i = 0; i < g.rows(); ++i) {
        bool zero_row = true;
        for (int j = 0; j < g.cols(); ++j) {
            zero_row = zero_row && g.at(i, j).is_zero();
        }
        if (zero_row) {
            throw InvalidEncoderError("zero row in generator matrix");
        }
    }
    for (int j = 0; j < g.cols(); ++j) {
        bool zero_col = true;
        for (int i = 0; i < g.rows(); ++i) {
            zero_col = zero_col && g.at(i, j).is_zero();
        }
        if (zero_col) {
            throw FullSupportError("zero column in generator matrix");
        }
    }

    Tbgm t;
    t.n0 = g.cols();
    t.k0 = g.rows();
    t.N = N;
    t.L = m.L;
    int n = t.n();
    t.m = BitMatrix(static_cast<std::size_t>(t.k()), static_cast<std::size_t>(n));
    for (int r = 0; r < t.k0; ++r) {
        // Block-0 scalar row of polynomial row r: coefficient d lands in
        // column block d.
        BitVec base(static_cast<std::size_t>(n));
        for (int j = 0; j < t.n0; ++j) {
            const Poly& p = g.at(r, j);
            for (int d = 0; d <= p.degree(); ++d) {
                if (p.coeff(d)) {
                    base.set(static_cast<std::size_t>(d * t.n0 + j), true);
                }
            }
        }
        for (int i = 0; i < N; ++i) {
            t.m.row(static_cast<std::size_t>(i * t.k0 + r)) =
                base.rotated_right(static_cast<std::size_t>(i * t.n0));
        }
    }
    return t;
}

bool tbgm_rank_deficient(const Tbgm& t) {
    return rank(t.m) < static_cast<std::size_t>(t.k());
}

SpanList natural_spans(const Tbgm& t) {
    SpanList out;
    int n = t.n();
    for (int r = 0; r < t.k0; ++r) {
        const BitVec& base = t.m.row(static_cast<std::size_t>(r));
        if (base.is_zero()) {
            throw InvalidEncoderError("zero row has no span");
        }
        Span s{base.first_set(), base.last_set()};
        for (int i = 0; i < t.N; ++i) {
            out.push_back(span_shift(s, i * t.n0, n));
        }
    }
    // Present in row order: block i holds rows i*k0 .. i*k0+k0-1.
    SpanList by_row(out.size());
    for (int r = 0; r < t.k0; ++r) {
        for (int i = 0; i < t.N; ++i) {
            by_row[static_cast<std::size_t>(i * t.k0 + r)] =
                out[static_cast<std::size_t>(r * t.N + i)];
        }
    }
    return by_row;
}

PolyMatrix rows_to_polymatrix(const BitMatrix& rows, const SpanList& spans,
                              int n0, int N) {
    if (rows.rows() != spans.size()) {
        throw DimensionError("row/span count mismatch");
    }
    if (static_cast<int>(rows.cols()) != n0 * N) {
        throw DimensionError("row width is not n0*N");
    }
    std::vector<std::size_t> basic;
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (spans[i].a < n0) {
            basic.push_back(i);
        }
    }
    if (basic.empty() || rows.rows() % static_cast<std::size_t>(N) != 0 ||
        basic.size() != rows.rows() / static_cast<std::size_t>(N)) {
        throw SelectionError("expected " +
                             std::to_string(rows.rows() / static_cast<std::size_t>(N)) +
                             " basic rows (span start < n0), found " +
                             std::to_string(basic.size()));
    }
    int k0 = static_cast<int>(basic.size());
    PolyMatrix g(k0, n0);
    for (int r = 0; r < k0; ++r) {
        const BitVec& v = rows.row(basic[static_cast<std::size_t>(r)]);
        for (int j = 0; j < n0; ++j) {
            std::uint64_t mask = 0;
            for (int d = 0; d < N; ++d) {
                if (v.get(static_cast<std::size_t>(d * n0 + j))) {
                    mask |= std::uint64_t{1} << d;
                }
            }
            g.at(r, j) = Poly::from_mask(mask);
        }
    }
    // The read-off is only meaningful if these rows really are the TBGM of g.
    Tbgm rebuilt = build_tbgm(g, N);
    std::vector<std::string> got, want;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        want.push_back(rows.row(i).to_string());
    }
    for (std::size_t i = 0; i < rebuilt.m.rows(); ++i) {
        got.push_back(rebuilt.m.row(i).to_string());
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
        throw NotShiftStructuredError(
            "selected rows are not the shift orbit of their basic rows");
    }
    return g;
}

bool verify_duality(const Tbgm& g_tbgm, const Tbgm& ht_tbgm) {
    if (g_tbgm.n() != ht_tbgm.n()) {
        return false;
    }
    std::size_t rg = rank(g_tbgm.m);
    std::size_t rh = rank(ht_tbgm.m);
    if (rg + rh != static_cast<std::size_t>(g_tbgm.n())) {
        return false;
    }
    // Orthogonality of every row pair.
    for (std::size_t i = 0; i < g_tbgm.m.rows(); ++i) {
        for (std::size_t l = 0; l < ht_tbgm.m.rows(); ++l) {
            std::size_t ones = 0;
            for (std::size_t j = 0; j < g_tbgm.m.cols(); ++j) {
                if (g_tbgm.m.get(i, j) && ht_tbgm.m.get(l, j)) {
                    ++ones;
                }
            }
            if (ones % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace tbcc
