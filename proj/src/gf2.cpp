#include "tbcc/gf2.hpp"

#include <algorithm>
#include <bit>

namespace tbcc {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

BitVec::BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {
    if (n > kMaxBitCols) {
        throw DimensionError("bit vector width " + std::to_string(n) +
                             " exceeds limit " + std::to_string(kMaxBitCols));
    }
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParseError("bit string may contain only '0'/'1': " + bits);
        }
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v) {
        w_[i / kWordBits] |= mask;
    } else {
        w_[i / kWordBits] &= ~mask;
    }
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n_ != o.n_) {
        throw DimensionError("bit vector width mismatch in xor");
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] ^= o.w_[i];
    }
    return *this;
}

bool BitVec::is_zero() const {
    for (auto w : w_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

int BitVec::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] != 0) {
            return static_cast<int>(i * kWordBits +
                                    static_cast<std::size_t>(std::countr_zero(w_[i])));
        }
    }
    return -1;
}

int BitVec::last_set() const {
    for (std::size_t i = w_.size(); i-- > 0;) {
        if (w_[i] != 0) {
            return static_cast<int>(i * kWordBits + (kWordBits - 1) -
                                    static_cast<std::size_t>(std::countl_zero(w_[i])));
        }
    }
    return -1;
}

BitVec BitVec::rotated_right(std::size_t j) const {
    BitVec out(n_);
    if (n_ == 0) {
        return out;
    }
    j %= n_;
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) {
            out.set((i + j) % n_, true);
        }
    }
    return out;
}

BitVec BitVec::rotated_left(std::size_t j) const {
    if (n_ == 0) {
        return *this;
    }
    return rotated_right(n_ - (j % n_));
}

bool BitVec::operator<(const BitVec& o) const {
    if (n_ != o.n_) {
        return n_ < o.n_;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        bool a = get(i);
        bool b = o.get(i);
        if (a != b) {
            return b;  // 0 before 1 at the first differing position
        }
    }
    return false;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), r_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& s : rows) {
        m.append_row(BitVec::from_string(s));
    }
    return m;
}

void BitMatrix::append_row(const BitVec& v) {
    if (r_.empty()) {
        cols_ = v.size();
    } else if (v.size() != cols_) {
        throw DimensionError("row width mismatch when appending");
    }
    r_.push_back(v);
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& row : r_) {
        s += row.to_string();
        s += '\n';
    }
    return s;
}

BitMatrix rref(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
    }
    std::size_t pr = 0;  // next pivot row slot
    for (std::size_t c = 0; c < m.cols() && pr < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t i = pr; i < rows.size(); ++i) {
            if (rows[i].get(c)) {
                sel = i;
                break;
            }
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[pr], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != pr && rows[i].get(c)) {
                rows[i] ^= rows[pr];
            }
        }
        ++pr;
    }
    BitMatrix out;
    for (std::size_t i = 0; i < pr; ++i) {
        out.append_row(rows[i]);
    }
    if (pr == 0) {
        out = BitMatrix(0, m.cols());
    }
    return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rows(); }

bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    return rref(a) == rref(b);
}

bool in_row_space(const BitMatrix& m, const BitVec& v) {
    if (v.is_zero()) {
        return true;
    }
    BitMatrix ext = m;
    ext.append_row(v);
    return rank(ext) == rank(m);
}

BitMatrix null_space(const BitMatrix& m) {
    // Kernel from the RREF: free columns parameterize the solutions.
    BitMatrix r = rref(m);
    std::size_t n = m.cols();
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        int p = r.row(i).first_set();
        pivot_of_col[static_cast<std::size_t>(p)] = static_cast<int>(i);
    }
    BitMatrix out(0, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) {
            continue;
        }
        BitVec v(n);
        v.set(c, true);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (r.get(i, c)) {
                int p = r.row(i).first_set();
                v.set(static_cast<std::size_t>(p), true);
            }
        }
        out.append_row(v);
    }
    return out;
}

BitMatrix minimal_span_form(const BitMatrix& m) {
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.row(i).is_zero()) {
            throw DegenerateBasisError("minimal span form needs nonzero rows");
        }
        rows.push_back(m.row(i));
    }
    auto start = [&](std::size_t i) { return rows[i].first_set(); };
    auto end = [&](std::size_t i) { return rows[i].last_set(); };

    for (;;) {
        // Leftmost start collision: pivot is the colliding row with the
        // smallest end (first by index on ties); it absorbs into the others.
        int best_col = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                if (start(i) == start(j) && (best_col < 0 || start(i) < best_col)) {
                    best_col = start(i);
                }
            }
        }
        if (best_col >= 0) {
            std::size_t pivot = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (start(i) == best_col &&
                    (pivot == rows.size() || end(i) < end(pivot))) {
                    pivot = i;
                }
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i != pivot && start(i) == best_col) {
                    rows[i] ^= rows[pivot];
                    if (rows[i].is_zero()) {
                        throw DegenerateBasisError(
                            "dependent rows in minimal span form input");
                    }
                }
            }
            continue;
        }
        // Rightmost end collision: pivot is the colliding row with the
        // largest start; adding it into the others preserves their starts.
        best_col = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                if (end(i) == end(j) && end(i) > best_col) {
                    best_col = end(i);
                }
            }
        }
        if (best_col >= 0) {
            std::size_t pivot = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (end(i) == best_col &&
                    (pivot == rows.size() || start(i) > start(pivot))) {
                    pivot = i;
                }
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i != pivot && end(i) == best_col) {
                    rows[i] ^= rows[pivot];
                    if (rows[i].is_zero()) {
                        throw DegenerateBasisError(
                            "dependent rows in minimal span form input");
                    }
                }
            }
            continue;
        }
        break;
    }

    BitMatrix out;
    for (const auto& r : rows) {
        out.append_row(r);
    }
    return out;
}

}  // namespace tbcc
