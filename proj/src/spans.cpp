#include "tbcc/spans.hpp"

#include <algorithm>

namespace tbcc {

namespace {
int mod(int x, int n) { return ((x % n) + n) % n; }
}  // namespace

bool conventional(const Span& s) { return s.a <= s.b; }

int span_length(const Span& s, int n) {
    if (n <= 0) {
        throw DimensionError("span length needs positive modulus");
    }
    return mod(s.b - s.a, n) + 1;
}

bool interval_contains(const Span& s, int j, int n) {
    if (s.a == s.b) {
        return false;  // (a, a] is empty
    }
    int off = mod(j - s.a, n);
    return off >= 1 && off <= mod(s.b - s.a, n);
}

bool span_includes(const Span& outer, const Span& inner, int n) {
    int li = span_length(inner, n);
    int lo = span_length(outer, n);
    if (li >= lo) {
        return false;  // equal-size sets cannot nest strictly
    }
    for (int k = 1; k < li; ++k) {
        if (!interval_contains(outer, mod(inner.a + k, n), n)) {
            return false;
        }
    }
    return true;
}

Span span_shift(const Span& s, int j, int n) {
    return Span{mod(s.a + j, n), mod(s.b + j, n)};
}

std::string span_to_string(const Span& s) {
    return "(" + std::to_string(s.a) + ", " + std::to_string(s.b) + "]";
}

std::string span_list_to_string(const SpanList& t) {
    std::string out = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += span_to_string(t[i]);
    }
    out += "}";
    return out;
}

bool span_sets_equal(const SpanList& a, const SpanList& b) {
    if (a.size() != b.size()) {
        return false;
    }
    auto key = [](const Span& s) { return std::pair<int, int>{s.a, s.b}; };
    std::vector<std::pair<int, int>> ka, kb;
    for (const auto& s : a) {
        ka.push_back(key(s));
    }
    for (const auto& s : b) {
        kb.push_back(key(s));
    }
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

}  // namespace tbcc
