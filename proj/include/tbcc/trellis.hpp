// Brute-force code enumeration and tail-biting trellis oracles used to
// cross-check the algebraic machinery: explicit codeword sets, coordinate
// shifts on them, trellis path enumeration, and state-profile measurement.
#pragma once

#include <array>
#include <cstdint>

#include "tbcc/polymatrix.hpp"
#include "tbcc/tbgm.hpp"

namespace tbcc {

// A code as an explicit sorted set of bit-packed words (width <= 128).
struct CodeSet {
    int n = 0;
    std::vector<std::array<std::uint64_t, 2>> words;

    std::size_t size() const { return words.size(); }
    bool operator==(const CodeSet& o) const = default;
};

// Every GF(2) combination of the generator rows, deduplicated and sorted.
// Budget: at most 24 rows and 128 columns.
CodeSet enumerate_code(const BitMatrix& gen);

bool codes_equal(const CodeSet& a, const CodeSet& b);

// Per-position branch shift of one frame: position j of branch t moves to
// branch t + s_j (negative = earlier branches, cyclically over N branches).
BitVec shift_word(const BitVec& w, int n0, const std::vector<int>& shifts);

CodeSet shift_code(const CodeSet& cs, int n0, const std::vector<int>& shifts);

struct TrellisEdge {
    std::uint32_t from = 0;
    std::uint32_t input = 0;  // k0 input bits, row 0 in the low bit
    std::uint32_t to = 0;
    std::uint32_t output = 0;  // n0 output bits, column 0 in the low bit
};

// Time-invariant tail-biting trellis in controller canonical form: the state
// keeps the last nu_i inputs of each encoder row, and one section's edge set
// repeats for all N sections.
struct TbTrellis {
    int n0 = 0;
    int k0 = 0;
    int N = 0;
    int nu = 0;
    std::vector<int> nu_i;
    std::vector<TrellisEdge> section_edges;

    std::size_t state_count() const { return std::size_t{1} << nu; }
};

TbTrellis build_tb_trellis(const PolyMatrix& g, int N);

// Outputs of all closed trellis paths (start state == end state).
CodeSet trellis_code(const TbTrellis& t);

// All start states from which some closed path emits exactly this word.
std::vector<std::uint32_t> accepted_start_states(const TbTrellis& t,
                                                 const BitVec& word);

// State-space dimensions across one module of the conventional code trellis,
// measured at the n0 bit boundaries L*n0 + i of a long terminated frame.
std::vector<int> state_profile(const PolyMatrix& g);

}  // namespace tbcc
