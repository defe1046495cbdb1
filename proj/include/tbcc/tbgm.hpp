// Tail-biting generator matrices: block-circulant scalar expansion of a
// polynomial encoder over N sections, natural spans, and the reverse read-off
// from characteristic rows back to a polynomial matrix.
#pragma once

#include "tbcc/polymatrix.hpp"
#include "tbcc/spans.hpp"

namespace tbcc {

struct Tbgm {
    int n0 = 0;
    int k0 = 0;
    int N = 0;
    int L = 0;
    BitMatrix m;  // k0*N rows, n0*N columns

    int n() const { return n0 * N; }
    int k() const { return k0 * N; }
};

// Scalar tail-biting generator matrix: row block i holds the coefficient rows
// of G(D) cyclically right-shifted by i*n0 positions. Requires L+1 <= N.
// Zero rows or all-zero columns in G are rejected; rank deficiency of the
// result is reported by tbgm_rank_deficient (construction still returns so
// the matrix can be inspected).
Tbgm build_tbgm(const PolyMatrix& g, int N);

bool tbgm_rank_deficient(const Tbgm& t);

// Row r of the TBGM has span rho_{i n0} of its block-0 row's
// (first nonzero, last nonzero] where i = r / k0.
SpanList natural_spans(const Tbgm& t);

// Rebuilds a polynomial matrix from k = k0*N characteristic rows whose spans
// are a shift-structured selection: k0 basic rows (span start < n0) plus all
// their rho_{i n0} copies. The coefficient of D^i in a basic row is read off
// column block i; the result is verified by rebuilding the TBGM and matching
// the input rows as a set (NotShiftStructuredError otherwise).
PolyMatrix rows_to_polymatrix(const BitMatrix& rows, const SpanList& spans,
                              int n0, int N);

// True when ht_tbgm is a check matrix for the code generated by g_tbgm:
// orthogonal row spaces and complementary ranks.
bool verify_duality(const Tbgm& g_tbgm, const Tbgm& ht_tbgm);

}  // namespace tbcc
