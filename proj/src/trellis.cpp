#include "tbcc/trellis.hpp"

#include <algorithm>
#include <bit>

#include "tbcc/errors.hpp"

namespace tbcc {

namespace {

std::array<std::uint64_t, 2> pack_word(const BitVec& v) {
    std::array<std::uint64_t, 2> w{0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.get(i)) w[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return w;
}

BitVec unpack_word(const std::array<std::uint64_t, 2>& w, int n) {
    BitVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if ((w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u) {
            v.set(static_cast<std::size_t>(i), true);
        }
    }
    return v;
}

}  // namespace

CodeSet enumerate_code(const BitMatrix& gen) {
    if (gen.rows() > 24) {
        throw OracleBudgetError("code enumeration limited to 24 generators, got " +
                                std::to_string(gen.rows()));
    }
    if (gen.cols() > 128) {
        throw OracleBudgetError("code enumeration limited to 128 columns, got " +
                                std::to_string(gen.cols()));
    }
    CodeSet cs;
    cs.n = static_cast<int>(gen.cols());
    std::vector<std::array<std::uint64_t, 2>> packed;
    packed.reserve(gen.rows());
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        packed.push_back(pack_word(gen.row(r)));
    }
    const std::uint64_t total = std::uint64_t{1} << gen.rows();
    cs.words.reserve(total);
    std::array<std::uint64_t, 2> cur{0, 0};
    cs.words.push_back(cur);
    for (std::uint64_t i = 1; i < total; ++i) {
        // Gray-code walk: each step toggles exactly one generator.
        const int bit = std::countr_zero(i);
        cur[0] ^= packed[static_cast<std::size_t>(bit)][0];
        cur[1] ^= packed[static_cast<std::size_t>(bit)][1];
        cs.words.push_back(cur);
    }
    std::sort(cs.words.begin(), cs.words.end());
    cs.words.erase(std::unique(cs.words.begin(), cs.words.end()),
                   cs.words.end());
    return cs;
}

bool codes_equal(const CodeSet& a, const CodeSet& b) {
    return a.n == b.n && a.words == b.words;
}

BitVec shift_word(const BitVec& w, int n0, const std::vector<int>& shifts) {
    if (n0 <= 0 || w.size() % static_cast<std::size_t>(n0) != 0 ||
        shifts.size() != static_cast<std::size_t>(n0)) {
        throw DimensionError("shift vector does not match the frame layout");
    }
    const int N = static_cast<int>(w.size()) / n0;
    BitVec out(w.size());
    for (int t = 0; t < N; ++t) {
        for (int j = 0; j < n0; ++j) {
            const int src =
                ((t - shifts[static_cast<std::size_t>(j)]) % N + N) % N;
            out.set(static_cast<std::size_t>(t * n0 + j),
                    w.get(static_cast<std::size_t>(src * n0 + j)));
        }
    }
    return out;
}

CodeSet shift_code(const CodeSet& cs, int n0, const std::vector<int>& shifts) {
    CodeSet out;
    out.n = cs.n;
    out.words.reserve(cs.words.size());
    for (const auto& w : cs.words) {
        out.words.push_back(pack_word(shift_word(unpack_word(w, cs.n), n0,
                                                 shifts)));
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

TbTrellis build_tb_trellis(const PolyMatrix& g, int N) {
    EncoderMetrics em = metrics(g);
    TbTrellis t;
    t.n0 = static_cast<int>(g.cols());
    t.k0 = static_cast<int>(g.rows());
    t.N = N;
    t.nu = em.nu;
    t.nu_i = em.nu_i;
    if (t.nu > 20) {
        throw StateBudgetError("trellis limited to 2^20 states, needs 2^" +
                               std::to_string(t.nu));
    }

    // Register layout: row i occupies nu_i consecutive state bits starting at
    // offset_i, newest past input in the lowest bit.
    std::vector<int> offset(static_cast<std::size_t>(t.k0), 0);
    for (int i = 1; i < t.k0; ++i) {
        offset[static_cast<std::size_t>(i)] =
            offset[static_cast<std::size_t>(i - 1)] +
            em.nu_i[static_cast<std::size_t>(i - 1)];
    }

    const std::uint32_t states = std::uint32_t{1} << t.nu;
    const std::uint32_t inputs = std::uint32_t{1} << t.k0;
    t.section_edges.reserve(static_cast<std::size_t>(states) * inputs);
    for (std::uint32_t s = 0; s < states; ++s) {
        for (std::uint32_t u = 0; u < inputs; ++u) {
            std::uint32_t out = 0;
            std::uint32_t next = 0;
            for (int i = 0; i < t.k0; ++i) {
                const int ni = em.nu_i[static_cast<std::size_t>(i)];
                const std::uint32_t reg =
                    (s >> offset[static_cast<std::size_t>(i)]) &
                    ((std::uint32_t{1} << ni) - 1);
                const std::uint32_t ubit = (u >> i) & 1u;
                for (int j = 0; j < t.n0; ++j) {
                    const std::uint64_t mask =
                        g.at(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j))
                            .mask();
                    std::uint32_t acc = (mask & 1u) ? ubit : 0u;
                    for (int d = 1; d <= ni; ++d) {
                        if ((mask >> d) & 1u) acc ^= (reg >> (d - 1)) & 1u;
                    }
                    out ^= acc << j;
                }
                const std::uint32_t nreg =
                    ni == 0 ? 0u
                            : ((reg << 1) | ubit) &
                                  ((std::uint32_t{1} << ni) - 1);
                next |= nreg << offset[static_cast<std::size_t>(i)];
            }
            t.section_edges.push_back(TrellisEdge{s, u, next, out});
        }
    }
    return t;
}

namespace {

// Dense transition tables for fast path simulation.
struct EdgeTables {
    int k0;
    std::vector<std::uint32_t> next;
    std::vector<std::uint32_t> out;

    explicit EdgeTables(const TbTrellis& t) : k0(t.k0) {
        const std::size_t total =
            t.state_count() << static_cast<std::size_t>(t.k0);
        next.resize(total);
        out.resize(total);
        for (const TrellisEdge& e : t.section_edges) {
            const std::size_t ix =
                (static_cast<std::size_t>(e.from) << k0) | e.input;
            next[ix] = e.to;
            out[ix] = e.output;
        }
    }

    std::size_t index(std::uint32_t state, std::uint32_t input) const {
        return (static_cast<std::size_t>(state) << k0) | input;
    }
};

}  // namespace

CodeSet trellis_code(const TbTrellis& t) {
    const int input_bits = t.k0 * t.N;
    if (t.nu + input_bits > 26) {
        throw OracleBudgetError("closed-path enumeration needs 2^" +
                                std::to_string(t.nu + input_bits) + " walks");
    }
    if (t.n0 * t.N > 128) {
        throw OracleBudgetError("frame wider than 128 bits");
    }
    EdgeTables tables(t);
    const std::uint32_t input_mask = (std::uint32_t{1} << t.k0) - 1;

    CodeSet cs;
    cs.n = t.n0 * t.N;
    const std::uint64_t seqs = std::uint64_t{1} << input_bits;
    for (std::uint64_t useq = 0; useq < seqs; ++useq) {
        for (std::uint32_t start = 0; start < t.state_count(); ++start) {
            std::uint32_t state = start;
            std::array<std::uint64_t, 2> word{0, 0};
            for (int sec = 0; sec < t.N; ++sec) {
                const std::uint32_t u =
                    static_cast<std::uint32_t>(useq >> (sec * t.k0)) &
                    input_mask;
                const std::size_t ix = tables.index(state, u);
                const std::uint64_t o = tables.out[ix];
                const int base = sec * t.n0;
                word[static_cast<std::size_t>(base) / 64] |=
                    o << (base % 64);
                if (base % 64 + t.n0 > 64 && base + t.n0 <= 128) {
                    word[1] |= o >> (64 - base % 64);
                }
                state = tables.next[ix];
            }
            if (state == start) cs.words.push_back(word);
        }
    }
    std::sort(cs.words.begin(), cs.words.end());
    cs.words.erase(std::unique(cs.words.begin(), cs.words.end()),
                   cs.words.end());
    return cs;
}

std::vector<std::uint32_t> accepted_start_states(const TbTrellis& t,
                                                 const BitVec& word) {
    if (static_cast<int>(word.size()) != t.n0 * t.N) {
        throw DimensionError("word length does not match the trellis frame");
    }
    std::vector<std::uint32_t> required(static_cast<std::size_t>(t.N), 0);
    for (int sec = 0; sec < t.N; ++sec) {
        for (int j = 0; j < t.n0; ++j) {
            if (word.get(static_cast<std::size_t>(sec * t.n0 + j))) {
                required[static_cast<std::size_t>(sec)] |=
                    std::uint32_t{1} << j;
            }
        }
    }
    EdgeTables tables(t);
    std::vector<std::uint32_t> accepted;
    for (std::uint32_t start = 0; start < t.state_count(); ++start) {
        std::vector<bool> cur(t.state_count(), false);
        cur[start] = true;
        for (int sec = 0; sec < t.N; ++sec) {
            std::vector<bool> nxt(t.state_count(), false);
            for (std::uint32_t s = 0; s < t.state_count(); ++s) {
                if (!cur[s]) continue;
                for (std::uint32_t u = 0; u < (std::uint32_t{1} << t.k0);
                     ++u) {
                    const std::size_t ix = tables.index(s, u);
                    if (tables.out[ix] ==
                        required[static_cast<std::size_t>(sec)]) {
                        nxt[tables.next[ix]] = true;
                    }
                }
            }
            cur = std::move(nxt);
        }
        if (cur[start]) accepted.push_back(start);
    }
    return accepted;
}

std::vector<int> state_profile(const PolyMatrix& g) {
    EncoderMetrics em = metrics(g);
    const int n0 = static_cast<int>(g.cols());
    const int k0 = static_cast<int>(g.rows());
    const int L = em.L;
    const int sections = 2 * L + 1;  // inputs; outputs run L sections longer
    const int width = (sections + L) * n0;
    if (width > static_cast<int>(kMaxBitCols)) {
        throw OracleBudgetError("terminated frame wider than the bit budget");
    }

    BitMatrix terminated(0, static_cast<std::size_t>(width));
    for (int tau = 0; tau < sections; ++tau) {
        for (int i = 0; i < k0; ++i) {
            BitVec row(static_cast<std::size_t>(width));
            for (int d = 0; d <= L; ++d) {
                for (int j = 0; j < n0; ++j) {
                    if (g.at(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j))
                            .coeff(d)) {
                        row.set(static_cast<std::size_t>((tau + d) * n0 + j),
                                true);
                    }
                }
            }
            terminated.append_row(row);
        }
    }
    BitMatrix msf = minimal_span_form(terminated);

    // Count rows alive across each bit boundary of the central module.
    std::vector<int> profile(static_cast<std::size_t>(n0), 0);
    for (int i = 0; i < n0; ++i) {
        const int t = L * n0 + i;
        for (std::size_t r = 0; r < msf.rows(); ++r) {
            if (msf.row(r).first_set() < t && t <= msf.row(r).last_set()) {
                ++profile[static_cast<std::size_t>(i)];
            }
        }
    }
    return profile;
}

}  // namespace tbcc
