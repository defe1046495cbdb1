#include "tbcc/polymatrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace tbcc {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw DimensionError("negative matrix dimension");
    }
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              Poly::zero());
}

std::size_t PolyMatrix::idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw DimensionError("matrix index out of range");
    }
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

PolyMatrix PolyMatrix::parse(const std::string& text) {
    std::vector<std::vector<Poly>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t stop = text.find(';', pos);
        std::string row_text =
            text.substr(pos, stop == std::string::npos ? stop : stop - pos);
        std::vector<Poly> row;
        std::size_t rp = 0;
        while (rp <= row_text.size()) {
            std::size_t comma = row_text.find(',', rp);
            std::string cell = row_text.substr(
                rp, comma == std::string::npos ? comma : comma - rp);
            row.push_back(Poly::parse(cell));
            if (comma == std::string::npos) {
                break;
            }
            rp = comma + 1;
        }
        rows.push_back(std::move(row));
        if (stop == std::string::npos) {
            break;
        }
        pos = stop + 1;
    }
    if (rows.empty()) {
        throw ParseError("empty polynomial matrix");
    }
    std::size_t cols = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw ParseError("ragged polynomial matrix: " + text);
        }
    }
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

std::string PolyMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        if (i > 0) {
            out += ";";
        }
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) {
                out += ",";
            }
            out += at(i, j).to_string();
        }
    }
    return out;
}

PolyMatrix octal_decode(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) {
        throw ParseError("empty octal tuple");
    }
    std::vector<Poly> entries;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) {
            throw ParseError("empty octal token in: " + text);
        }
        std::uint64_t mask = 0;
        int bit = 0;
        for (char c : tok) {
            if (c < '0' || c > '7') {
                throw ParseError("bad octal digit '" + std::string(1, c) + "' in: " + text);
            }
            int digit = c - '0';
            for (int k = 2; k >= 0; --k) {  // MSB of the digit first
                if (bit > kMaxPolyDegree) {
                    throw ParseError("octal token too long: " + tok);
                }
                if ((digit >> k) & 1) {
                    mask |= std::uint64_t{1} << bit;
                }
                ++bit;
            }
        }
        entries.push_back(Poly::from_mask(mask));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    PolyMatrix g(1, static_cast<int>(entries.size()));
    for (int j = 0; j < g.cols(); ++j) {
        g.at(0, j) = entries[static_cast<std::size_t>(j)];
    }
    return g;
}

std::string octal_encode(const PolyMatrix& g) {
    if (g.rows() != 1) {
        throw DimensionError("octal form only covers single-row encoders");
    }
    int width = 0;
    for (int j = 0; j < g.cols(); ++j) {
        width = std::max(width, g.at(0, j).degree() + 1);
    }
    width = std::max(width, 1);
    int padded = ((width + 2) / 3) * 3;
    std::string out = "(";
    for (int j = 0; j < g.cols(); ++j) {
        if (j > 0) {
            out += ",";
        }
        for (int b = 0; b < padded; b += 3) {
            int digit = (g.at(0, j).coeff(b) ? 4 : 0) |
                        (g.at(0, j).coeff(b + 1) ? 2 : 0) |
                        (g.at(0, j).coeff(b + 2) ? 1 : 0);
            out += static_cast<char>('0' + digit);
        }
    }
    out += ")";
    return out;
}

CoeffExpansion expand(const PolyMatrix& g) {
    CoeffExpansion out;
    out.L = 0;
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            out.L = std::max(out.L, g.at(i, j).degree());
        }
    }
    for (int d = 0; d <= out.L; ++d) {
        BitMatrix c(static_cast<std::size_t>(g.rows()), static_cast<std::size_t>(g.cols()));
        for (int i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < g.cols(); ++j) {
                c.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                      g.at(i, j).coeff(d));
            }
        }
        out.coeff.push_back(std::move(c));
    }
    return out;
}

EncoderMetrics metrics(const PolyMatrix& g) {
    EncoderMetrics m;
    for (int i = 0; i < g.rows(); ++i) {
        int nu_i = 0;
        for (int j = 0; j < g.cols(); ++j) {
            nu_i = std::max(nu_i, g.at(i, j).degree());  // zero entry: -1
        }
        m.nu_i.push_back(nu_i);
        m.nu += nu_i;
        m.L = std::max(m.L, nu_i);
    }
    return m;
}

int column_monomial_factor(const PolyMatrix& g, int j) {
    int factor = -1;
    for (int i = 0; i < g.rows(); ++i) {
        const Poly& p = g.at(i, j);
        if (p.is_zero()) {
            continue;
        }
        int low = p.low_degree();
        factor = factor < 0 ? low : std::min(factor, low);
    }
    if (factor < 0) {
        throw DegenerateColumnError("column " + std::to_string(j) + " is all zero");
    }
    return factor;
}

PolyMatrix divide_column(const PolyMatrix& g, int j, int p) {
    if (p < 0) {
        throw DimensionError("negative division power");
    }
    if (p > column_monomial_factor(g, j)) {
        throw NonDivisibleError("column " + std::to_string(j) +
                                " lacks monomial factor D^" + std::to_string(p));
    }
    PolyMatrix out = g;
    for (int i = 0; i < g.rows(); ++i) {
        out.at(i, j) = g.at(i, j).divide_monomial(p);
    }
    return out;
}

PolyMatrix multiply_column(const PolyMatrix& g, int j, int q) {
    if (q < 0) {
        throw DimensionError("negative multiplication power");
    }
    PolyMatrix out = g;
    for (int i = 0; i < g.rows(); ++i) {
        out.at(i, j) = g.at(i, j).times_monomial(q);
    }
    return out;
}

PolyMatrix row_add(const PolyMatrix& g, int src, int q, int dst) {
    if (src == dst) {
        throw DimensionError("row_add needs distinct rows");
    }
    if (q < 0) {
        throw DimensionError("row_add needs a nonnegative power");
    }
    PolyMatrix out = g;
    Poly dq = Poly::monomial(q);
    for (int j = 0; j < g.cols(); ++j) {
        out.at(dst, j) += dq * g.at(src, j);
    }
    return out;
}

Poly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant needs a square matrix");
    }
    int k = m.rows();
    if (k == 0) {
        return Poly::one();
    }
    if (k == 1) {
        return m.at(0, 0);
    }
    Poly acc = Poly::zero();
    for (int j = 0; j < k; ++j) {
        if (m.at(0, j).is_zero()) {
            continue;
        }
        PolyMatrix minor(k - 1, k - 1);
        for (int r = 1; r < k; ++r) {
            int cc = 0;
            for (int c = 0; c < k; ++c) {
                if (c == j) {
                    continue;
                }
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        acc += m.at(0, j) * poly_det(minor);  // char 2: signs vanish
    }
    return acc;
}

namespace {

// All k x k column selections of g, as determinants.
std::vector<Poly> maximal_minors(const PolyMatrix& g) {
    int k = g.rows();
    int n = g.cols();
    std::vector<Poly> minors;
    std::vector<int> sel(static_cast<std::size_t>(k));
    std::iota(sel.begin(), sel.end(), 0);
    for (;;) {
        PolyMatrix sub(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                sub.at(i, j) = g.at(i, sel[static_cast<std::size_t>(j)]);
            }
        }
        minors.push_back(poly_det(sub));
        int i = k - 1;
        while (i >= 0 && sel[static_cast<std::size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++sel[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return minors;
}

}  // namespace

CanonicalDiagnosis validate_canonical(const PolyMatrix& g) {
    if (g.rows() > g.cols()) {
        throw DimensionError("generator matrix cannot have more rows than columns");
    }
    CanonicalDiagnosis d;
    EncoderMetrics m = metrics(g);
    d.nu = m.nu;
    Poly gcd = Poly::zero();
    int max_deg = -1;
    for (const Poly& minor : maximal_minors(g)) {
        gcd = Poly::gcd(gcd, minor);
        max_deg = std::max(max_deg, minor.degree());
    }
    d.minor_gcd = gcd;
    d.max_minor_degree = max_deg;
    d.rank_ok = !gcd.is_zero();  // some maximal minor is nonzero
    d.basic = d.rank_ok && gcd == Poly::one();
    d.reduced = d.rank_ok && max_deg == m.nu;
    return d;
}

namespace {

// Smith-style elimination over GF(2)[D], tracking only what basic_equivalent
// needs: the inverse of the accumulated column transformation. Invariant:
// work * basis == (row ops) * g, so once work is [diag | 0] the first k rows
// of basis span the same rational row space as g.
struct SmithState {
    PolyMatrix work;
    PolyMatrix basis;  // starts as the identity on cols(g)
};

void smith_col_op(SmithState& s, int dst, int src, const Poly& f) {
    // work: col_dst += f * col_src; basis: row_src += f * row_dst.
    for (int i = 0; i < s.work.rows(); ++i) {
        s.work.at(i, dst) += f * s.work.at(i, src);
    }
    for (int j = 0; j < s.basis.cols(); ++j) {
        s.basis.at(src, j) += f * s.basis.at(dst, j);
    }
}

void smith_col_swap(SmithState& s, int a, int b) {
    for (int i = 0; i < s.work.rows(); ++i) {
        std::swap(s.work.at(i, a), s.work.at(i, b));
    }
    for (int j = 0; j < s.basis.cols(); ++j) {
        std::swap(s.basis.at(a, j), s.basis.at(b, j));
    }
}

void smith_row_op(SmithState& s, int dst, int src, const Poly& f) {
    for (int j = 0; j < s.work.cols(); ++j) {
        s.work.at(dst, j) += f * s.work.at(src, j);
    }
}

void smith_row_swap(SmithState& s, int a, int b) {
    for (int j = 0; j < s.work.cols(); ++j) {
        std::swap(s.work.at(a, j), s.work.at(b, j));
    }
}

}  // namespace

PolyMatrix basic_equivalent(const PolyMatrix& g) {
    // Strip monomial row factors first; when that suffices, the row layout of
    // the input survives untouched.
    PolyMatrix stripped = g;
    for (int i = 0; i < g.rows(); ++i) {
        int low = -1;
        for (int j = 0; j < g.cols(); ++j) {
            if (!g.at(i, j).is_zero()) {
                int l = g.at(i, j).low_degree();
                low = low < 0 ? l : std::min(low, l);
            }
        }
        if (low < 0) {
            throw InvalidEncoderError("zero row has no basic equivalent");
        }
        if (low > 0) {
            for (int j = 0; j < g.cols(); ++j) {
                stripped.at(i, j) = g.at(i, j).divide_monomial(low);
            }
        }
    }
    CanonicalDiagnosis d = validate_canonical(stripped);
    if (!d.rank_ok) {
        throw InvalidEncoderError("rationally rank-deficient matrix has no basic equivalent");
    }
    if (d.basic) {
        return stripped;
    }

    // Smith route. Pivot choice is fixed (minimum degree, then row-major) so
    // the output is deterministic.
    int k = stripped.rows();
    int n = stripped.cols();
    SmithState s{stripped, PolyMatrix(n, n)};
    for (int j = 0; j < n; ++j) {
        s.basis.at(j, j) = Poly::one();
    }
    for (int t = 0; t < k; ++t) {
        for (;;) {
            // Pick the minimum-degree nonzero entry in the remaining block.
            int pr = -1;
            int pc = -1;
            for (int i = t; i < k; ++i) {
                for (int j = t; j < n; ++j) {
                    const Poly& p = s.work.at(i, j);
                    if (p.is_zero()) {
                        continue;
                    }
                    if (pr < 0 || p.degree() < s.work.at(pr, pc).degree()) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr < 0) {
                throw InvalidEncoderError("rank collapse during Smith elimination");
            }
            if (pr != t) {
                smith_row_swap(s, pr, t);
            }
            if (pc != t) {
                smith_col_swap(s, pc, t);
            }
            bool clean = true;
            const Poly pivot = s.work.at(t, t);
            for (int i = t + 1; i < k; ++i) {
                if (s.work.at(i, t).is_zero()) {
                    continue;
                }
                Poly q = s.work.at(i, t).divmod(pivot).first;
                smith_row_op(s, i, t, q);
                if (!s.work.at(i, t).is_zero()) {
                    clean = false;  // remainder left; re-pick a smaller pivot
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (s.work.at(t, j).is_zero()) {
                    continue;
                }
                Poly q = s.work.at(t, j).divmod(pivot).first;
                smith_col_op(s, j, t, q);
                if (!s.work.at(t, j).is_zero()) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }
    }
    PolyMatrix out(k, n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            out.at(i, j) = s.basis.at(i, j);
        }
    }
    return out;
}

PolyMatrix reciprocal_dual(const PolyMatrix& g) {
    EncoderMetrics m = metrics(g);
    PolyMatrix out(g.rows(), g.cols());
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            out.at(i, j) = g.at(i, j).is_zero()
                               ? Poly::zero()
                               : g.at(i, j).reversed(m.nu_i[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

PolyMatrix poly_mat_mul_transpose(const PolyMatrix& g, const PolyMatrix& h) {
    if (g.cols() != h.cols()) {
        throw DimensionError("G H^T needs matching column counts");
    }
    PolyMatrix out(g.rows(), h.rows());
    for (int i = 0; i < g.rows(); ++i) {
        for (int l = 0; l < h.rows(); ++l) {
            Poly acc = Poly::zero();
            for (int j = 0; j < g.cols(); ++j) {
                acc += g.at(i, j) * h.at(l, j);
            }
            out.at(i, l) = acc;
        }
    }
    return out;
}

PolyMatrix compute_check_matrix(const PolyMatrix& g) {
    CanonicalDiagnosis diag = validate_canonical(g);
    if (!diag.rank_ok) {
        throw InvalidEncoderError("check matrix needs a full-rank generator");
    }
    EncoderMetrics m = metrics(g);
    int k0 = g.rows();
    int n0 = g.cols();
    int want = n0 - k0;
    PolyMatrix h(0, n0);
    if (want == 0) {
        return h;
    }

    std::vector<std::vector<Poly>> chosen;
    for (int d = 0; d <= m.nu && static_cast<int>(chosen.size()) < want; ++d) {
        // Solve G h^T = 0 for h with entry degrees <= d. Unknown bit u_{j,t}
        // is the D^t coefficient of entry j; equations are the coefficients
        // of each product polynomial.
        int vars = n0 * (d + 1);
        int eqs = k0 * (m.L + d + 1);
        BitMatrix sys(static_cast<std::size_t>(eqs), static_cast<std::size_t>(vars));
        for (int i = 0; i < k0; ++i) {
            for (int j = 0; j < n0; ++j) {
                for (int t = 0; t <= d; ++t) {
                    Poly prod = g.at(i, j).times_monomial(t);
                    for (int c = prod.low_degree(); c >= 0 && c <= prod.degree(); ++c) {
                        if (prod.coeff(c)) {
                            sys.set(static_cast<std::size_t>(i * (m.L + d + 1) + c),
                                    static_cast<std::size_t>(j * (d + 1) + t), true);
                        }
                    }
                }
            }
        }
        BitMatrix kernel = null_space(sys);
        // RREF rows of the kernel are already canonical; scan candidate
        // combinations in lexicographic bit order via the canonical basis.
        BitMatrix kb = rref(kernel);
        // Enumerate kernel elements smallest-first is exponential in general;
        // instead greedily extend with canonical basis rows sorted by
        // (row degree, coefficient string).
        std::vector<BitVec> cands;
        for (std::size_t i = 0; i < kb.rows(); ++i) {
            cands.push_back(kb.row(i));
        }
        auto row_degree = [&](const BitVec& v) {
            int deg = 0;
            for (int j = 0; j < n0; ++j) {
                for (int t = d; t >= 0; --t) {
                    if (v.get(static_cast<std::size_t>(j * (d + 1) + t))) {
                        deg = std::max(deg, t);
                        break;
                    }
                }
            }
            return deg;
        };
        std::stable_sort(cands.begin(), cands.end(),
                         [&](const BitVec& x, const BitVec& y) {
                             int dx = row_degree(x);
                             int dy = row_degree(y);
                             if (dx != dy) {
                                 return dx < dy;
                             }
                             return x < y;
                         });
        for (const auto& v : cands) {
            if (static_cast<int>(chosen.size()) == want) {
                break;
            }
            std::vector<Poly> row(static_cast<std::size_t>(n0));
            for (int j = 0; j < n0; ++j) {
                std::uint64_t mask = 0;
                for (int t = 0; t <= d; ++t) {
                    if (v.get(static_cast<std::size_t>(j * (d + 1) + t))) {
                        mask |= std::uint64_t{1} << t;
                    }
                }
                row[static_cast<std::size_t>(j)] = Poly::from_mask(mask);
            }
            // Independence over the rationals: stack with already-chosen rows.
            PolyMatrix trial(static_cast<int>(chosen.size()) + 1, n0);
            for (int i = 0; i < static_cast<int>(chosen.size()); ++i) {
                for (int j = 0; j < n0; ++j) {
                    trial.at(i, j) = chosen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                }
            }
            for (int j = 0; j < n0; ++j) {
                trial.at(trial.rows() - 1, j) = row[static_cast<std::size_t>(j)];
            }
            if (!validate_canonical(trial).rank_ok) {
                continue;
            }
            chosen.push_back(row);
        }
    }
    if (static_cast<int>(chosen.size()) != want) {
        throw NoncanonicalInputError("kernel search exhausted degree bound nu");
    }
    PolyMatrix out(want, n0);
    for (int i = 0; i < want; ++i) {
        for (int j = 0; j < n0; ++j) {
            out.at(i, j) = chosen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    EncoderMetrics hm = metrics(out);
    if (hm.nu != m.nu) {
        throw NoncanonicalInputError(
            "check matrix degrees sum to " + std::to_string(hm.nu) +
            ", expected nu = " + std::to_string(m.nu) + "; input not canonical");
    }
    PolyMatrix prod = poly_mat_mul_transpose(g, out);
    for (int i = 0; i < prod.rows(); ++i) {
        for (int j = 0; j < prod.cols(); ++j) {
            if (!prod.at(i, j).is_zero()) {
                throw Error("internal: check matrix fails orthogonality");
            }
        }
    }
    return out;
}

}  // namespace tbcc
