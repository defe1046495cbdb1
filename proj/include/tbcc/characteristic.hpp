// Characteristic matrices of tail-biting codes: minimal-span-form bases of
// the cyclically shifted code, their assembly into an n x n characteristic
// pair (X, T), validity checks, span-structure analysis, and enumeration of
// the alternative characteristic matrices.
#pragma once

#include <cstdint>

#include "tbcc/tbgm.hpp"

namespace tbcc {

// One minimal-span-form basis of sigma_j(C) together with its shifted copy
// rho_j(X_j*), whose rows are characteristic generator candidates.
struct MsfBasis {
    int j = 0;
    BitMatrix base;          // X_j*: minimal span form of sigma_j(TBGM)
    SpanList base_spans;     // conventional spans of the base rows
    BitMatrix shifted;       // rho_j(X_j*)
    SpanList shifted_spans;  // spans of the shifted rows (may wrap)
};

std::vector<MsfBasis> compute_msf_bases(const PolyMatrix& g, int N);

struct CharacteristicMatrix {
    int n0 = 0;
    int k0 = 0;
    int N = 0;
    BitMatrix x;      // n rows sorted by span start; row index == start
    SpanList spans;   // spans[i].a == i
    bool corollary_fast_path = false;  // single-basis union already sufficed
    bool shift_repaired = false;       // rows re-closed from block 0

    int n() const { return n0 * N; }
    int k() const { return k0 * N; }

    const BitVec& row_at_start(int s) const {
        return x.row(static_cast<std::size_t>(s));
    }
};

// Assembles the characteristic matrix by collecting rho_{i n0}-shifted basis
// rows over all i and j, keeping the first-produced generator per span start
// (lowest shift i, then lowest j, then basis row order).
CharacteristicMatrix assemble_characteristic(const PolyMatrix& g, int N);

struct CharacteristicCheck {
    bool generates = false;       // rank k and every row inside the code
    bool spans_valid = false;     // row support fits [a,b], endpoints nonzero
    bool endpoints_distinct = false;  // starts pairwise distinct, ends too
    bool covering = false;        // every position inside exactly n-k spans
    bool ok() const {
        return generates && spans_valid && endpoints_distinct && covering;
    }
};
CharacteristicCheck verify_characteristic(const CharacteristicMatrix& cm,
                                          const BitMatrix& code_rows);

struct SpanAnalysis {
    SpanList basic;                        // T0: spans starting in block 0
    std::vector<std::vector<int>> theta_sets;  // per row: rows whose span
                                               // properly contains this one
    int theta = 0;                         // sum over basic spans
    std::uint64_t symmetric_count = 0;     // 2^theta
    std::uint64_t total_count = 0;         // 2^(theta N)
    int ell = 0;                           // sum of basic span lengths
    int ell_formula = 0;                   // n0((n0-k0)N + 1)
    long span_sum = 0;                     // sum over T of (length - 1)
    long span_sum_formula = 0;             // n(n-k)
};
SpanAnalysis analyze_spans(const CharacteristicMatrix& cm);

enum class VariantMode {
    kShiftSymmetric,  // same replacement choice in every block: 2^theta
    kFull,            // independent per block: 2^(theta N)
};

// All characteristic matrices reachable by adding properly included rows to
// the rows that include them (base matrix is variant 0). Deterministic order:
// toggle bits sorted by (basic start, included start), blocks outermost in
// full mode.
std::vector<CharacteristicMatrix> enumerate_variants(
    const CharacteristicMatrix& cm, VariantMode mode);

}  // namespace tbcc
