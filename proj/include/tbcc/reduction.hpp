// Trellis reduction search: shift-structured row selections from a
// characteristic matrix, monomial column division, the dual-encoder route
// for high-rate codes, simultaneous generator/check reduction, and the
// section-length criterion.
#pragma once

#include <string>

#include "tbcc/characteristic.hpp"

namespace tbcc {

// A shift-structured selection of k rows (k0 block-0 starts plus all their
// block shifts) read back as a polynomial encoder.
struct Candidate {
    std::vector<int> basic_starts;  // ascending, values in [0, n0)
    BitMatrix rows;                 // the k selected rows, start ascending
    SpanList spans;
    bool generates = false;     // independent rows spanning the whole code
    bool extractable = false;   // rows form the TBGM of some encoder
    PolyMatrix encoder;         // row order follows basic_starts
    int span_length_sum = 0;    // over the chosen basic spans
};
Candidate select_candidate(const CharacteristicMatrix& cm,
                           const std::vector<int>& basic_starts,
                           const BitMatrix& code_rows);

struct DivisionOption {
    std::vector<int> division;  // D-power removed from each column
    int nu = 0;                 // constraint length afterwards
};

// Exhaustive sweep over all per-column monomial divisions, scored by the
// resulting constraint length; ties prefer fewer total shifts, then the
// lexicographically smallest vector.
struct DivisionSweep {
    std::vector<DivisionOption> options;  // lexicographic vector order
    std::vector<int> best;
    std::vector<int> shifts;  // negated best: branch moves per position
    PolyMatrix reduced;
    int nu_before = 0;
    int nu_after = 0;
};
DivisionSweep divide_encoder(const PolyMatrix& g);

struct CandidateOutcome {
    std::size_t index = 0;  // flat enumeration position
    std::size_t variant_index = 0;
    std::vector<int> basic_starts;
    bool generates = false;
    bool extractable = false;
    int span_length_sum = 0;
    int nu_selected = -1;
    int nu_reduced = -1;
    std::vector<int> division;
    std::vector<int> shifts;
    PolyMatrix encoder;
    PolyMatrix reduced;
    std::vector<DivisionOption> sweep;
};

// Upper bound on the section length for which reduction is plausible:
// k0((n0-k0)N + 1) <= n0(nu + k0). A heuristic, not a guarantee.
struct SectionBound {
    int max_n = 0;
    bool within = false;
};
SectionBound section_bound(int n0, int k0, int nu, int N);

struct ReductionReport {
    PolyMatrix original;
    int n0 = 0;
    int k0 = 0;
    int N = 0;
    int nu = 0;
    VariantMode mode = VariantMode::kShiftSymmetric;
    CharacteristicMatrix characteristic;
    int theta = 0;
    std::size_t variant_count = 0;
    std::vector<CandidateOutcome> outcomes;  // enumeration order
    bool found_valid = false;  // some candidate generates the code
    bool reduced = false;      // best candidate strictly below nu
    CandidateOutcome best;     // meaningful when found_valid
    std::string verification;  // "pass" | "fail" | "skipped"
    SectionBound bound;
};

// Full search: every characteristic-matrix variant crossed with every choice
// of k0 block-0 span starts. Candidates are ranked by reduced constraint
// length, then by selected span length, then fewer shifted columns, then
// enumeration order. jobs > 1 fans the candidate grid over threads; the
// ranking stays deterministic. force skips the canonicity gate.
ReductionReport search_reduction(const PolyMatrix& g, int N,
                                 VariantMode mode = VariantMode::kShiftSymmetric,
                                 int jobs = 1, bool force = false);

// High-rate route: run the same search on the reciprocal dual encoder, whose
// tail-biting code is the dual code, then map the winner back to a reduced
// check matrix for the original code.
struct DualReport {
    PolyMatrix check;          // H with G H^T = 0
    PolyMatrix reciprocal;     // dual-code encoder derived from H
    ReductionReport search;    // reduction search on the dual side
    PolyMatrix selected;       // winning dual-side encoder
    PolyMatrix reduced_dual;   // after column division
    PolyMatrix reduced_check;  // reciprocal dual of the winner
    bool valid = false;
};
DualReport dual_procedure(const PolyMatrix& g, int N,
                          VariantMode mode = VariantMode::kShiftSymmetric,
                          int jobs = 1, bool force = false);

// Certificate that a primal selection generates the code, derived from the
// dual side alone: the selection pair must be shift structured on both
// sides, inclusion-free against the full span lists, complementary under
// span reversal, and the dual selection must generate the dual code. The
// primal rank is then forced, and primal_rank_full records it.
struct DualSelectionCheck {
    bool primal_shift_structured = false;
    bool primal_no_inclusion = false;
    bool dual_generates = false;
    bool dual_shift_structured = false;
    bool dual_no_inclusion = false;
    bool complementary = false;
    bool primal_rank_full = false;

    bool conditions_hold() const {
        return primal_shift_structured && primal_no_inclusion &&
               dual_generates && dual_shift_structured && dual_no_inclusion &&
               complementary;
    }
};
DualSelectionCheck dual_selection_check(const CharacteristicMatrix& x,
                                        const std::vector<int>& primal_starts,
                                        const CharacteristicMatrix& y,
                                        const std::vector<int>& dual_starts,
                                        const BitMatrix& dual_code_rows);

// One primitive transformation applied during simultaneous reduction.
struct SimultaneousStep {
    std::string op;  // "row_add", "divide", "multiply", "normalize", "basicize"
    std::string detail;
    PolyMatrix g;
    PolyMatrix h;
    std::vector<int> shifts;  // cumulative branch moves
};

struct SimultaneousReport {
    PolyMatrix g_in, h_in;
    PolyMatrix g_out, h_out;
    int nu_before = 0;
    int nu_after = 0;
    std::vector<int> shifts;
    std::vector<SimultaneousStep> trace;
};

// Greedy simultaneous reduction of a generator/check pair: each round tries
// pure column division, a row addition followed by division, and a single
// column multiplication with row normalization followed by division, and
// applies whichever drops the constraint length most (first in that order on
// ties). The pair stays orthogonal throughout; the result is basic.
SimultaneousReport simultaneous_reduce(const PolyMatrix& g,
                                       const PolyMatrix& h, int N);

}  // namespace tbcc
