// Polynomial generator matrices over GF(2)[D]: parsing, octal codec,
// coefficient expansion, column/row transformations, canonicity checks,
// basic equivalents, and check-matrix computation.
#pragma once

#include <vector>

#include "tbcc/gf2.hpp"
#include "tbcc/poly.hpp"

namespace tbcc {

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);

    // Rows separated by ';', entries by ',': "1+D,D,1+D;D,1,1".
    static PolyMatrix parse(const std::string& text);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Poly& at(int r, int c) const { return e_[idx(r, c)]; }
    Poly& at(int r, int c) { return e_[idx(r, c)]; }

    bool operator==(const PolyMatrix&) const = default;

    std::string to_string() const;  // parse() round-trips it

  private:
    std::size_t idx(int r, int c) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Poly> e_;
};

// Octal generator tokens, left justified: the octal digits expand to bits
// MSB first, read left to right as coefficients of D^0, D^1, ... so that
// "50" -> 101000 -> 1+D^2 and "64" -> 110100 -> 1+D+D^3. Accepted input is a
// comma-separated tuple, optionally parenthesized: "(50,64)". Encoders with
// more than one row need the polynomial syntax instead.
PolyMatrix octal_decode(const std::string& text);
std::string octal_encode(const PolyMatrix& g);

// G = G_0 + G_1 D + ... + G_L D^L as scalar coefficient matrices.
struct CoeffExpansion {
    int L = 0;  // memory: largest entry degree
    std::vector<BitMatrix> coeff;  // L+1 matrices, each rows x cols
};
CoeffExpansion expand(const PolyMatrix& g);

struct EncoderMetrics {
    int L = 0;                // memory
    std::vector<int> nu_i;    // row constraint lengths (0 for a zero row)
    int nu = 0;               // overall constraint length, sum of nu_i
};
EncoderMetrics metrics(const PolyMatrix& g);

// Largest p with D^p dividing every entry of column j (0 when some entry has
// a nonzero constant term). All-zero columns are rejected.
int column_monomial_factor(const PolyMatrix& g, int j);

PolyMatrix divide_column(const PolyMatrix& g, int j, int p);
PolyMatrix multiply_column(const PolyMatrix& g, int j, int q);

// g_dst += D^q * g_src.
PolyMatrix row_add(const PolyMatrix& g, int src, int q, int dst);

struct CanonicalDiagnosis {
    bool rank_ok = false;      // full rank over the rational function field
    bool basic = false;        // gcd of maximal minors is 1
    bool reduced = false;      // largest maximal-minor degree equals nu
    Poly minor_gcd;            // gcd of all k x k minors
    int max_minor_degree = -1;
    int nu = 0;

    bool canonical() const { return rank_ok && basic && reduced; }
};
CanonicalDiagnosis validate_canonical(const PolyMatrix& g);

// Determinant of a square polynomial matrix (cofactor expansion; k stays
// tiny here).
Poly poly_det(const PolyMatrix& m);

// A basic matrix with the same rational row space. Monomial row factors are
// stripped first; if that already yields a basic matrix the row shape is
// preserved, otherwise a Smith-form pass rebuilds the basis.
PolyMatrix basic_equivalent(const PolyMatrix& g);

// Row-wise reciprocal: row i becomes D^{nu_i} * row_i(1/D), coefficients of
// each entry reversed inside the row's degree window. An involution on
// matrices whose rows each contain a delay-free entry (all basic matrices).
PolyMatrix reciprocal_dual(const PolyMatrix& g);

// Degree-bounded kernel search for a canonical check matrix H with
// G H^T = 0: rows are found in order of increasing degree, smallest
// coefficient string first, until n-k independent rows are collected.
// Requires sum of H row degrees == nu(G); otherwise the input was not
// canonical and NoncanonicalInputError is thrown.
PolyMatrix compute_check_matrix(const PolyMatrix& g);

// G * H^T over GF(2)[D].
PolyMatrix poly_mat_mul_transpose(const PolyMatrix& g, const PolyMatrix& h);

}  // namespace tbcc
