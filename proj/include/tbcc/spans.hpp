// Semiopen circular intervals (a, b] on Z_n and span lists.
#pragma once

#include <string>
#include <vector>

#include "tbcc/errors.hpp"

namespace tbcc {

// (a, b] on Z_n: walking from a+1 cyclically up to and including b. The
// closed interval [a, b] is the same walk starting at a.
struct Span {
    int a = 0;
    int b = 0;

    bool operator==(const Span&) const = default;
};

using SpanList = std::vector<Span>;

// a <= b, i.e. the interval does not wrap.
bool conventional(const Span& s);

// Cardinality of the closed interval [a, b]: ((b - a) mod n) + 1.
int span_length(const Span& s, int n);

// j in (a, b].
bool interval_contains(const Span& s, int j, int n);

// Element sets: inner strictly contained in outer.
bool span_includes(const Span& outer, const Span& inner, int n);

// rho_j: (a, b] -> (a+j, b+j] mod n. Negative j shifts left.
Span span_shift(const Span& s, int j, int n);

// "(a, b]"
std::string span_to_string(const Span& s);

std::string span_list_to_string(const SpanList& t);

// Set equality regardless of order.
bool span_sets_equal(const SpanList& a, const SpanList& b);

}  // namespace tbcc
