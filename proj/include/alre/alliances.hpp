#pragma once

#include <sstream>
#include <string>

#include "graph.hpp"

namespace alre {

enum class AllianceBase { defensive, offensive, powerful };

// Alliance-kind descriptor. The independent flag is only meaningful for the
// offensive base; other combinations are rejected at construction/parse time.
struct Variant {
    AllianceBase base = AllianceBase::defensive;
    bool global = false;
    bool independent = false;

    void check() const {
        if (independent && base != AllianceBase::offensive)
            throw malformed_input_error("variant: independent flag requires offensive base");
    }

    static Variant parse(const std::string& text) {
        std::istringstream is(text);
        std::string word;
        Variant v;
        if (!(is >> word)) throw malformed_input_error("variant: empty");
        if (word == "def") v.base = AllianceBase::defensive;
        else if (word == "off") v.base = AllianceBase::offensive;
        else if (word == "pow") v.base = AllianceBase::powerful;
        else throw malformed_input_error("variant: unknown base '" + word + "'");
        while (is >> word) {
            if (word == "global") v.global = true;
            else if (word == "independent") v.independent = true;
            else throw malformed_input_error("variant: unknown flag '" + word + "'");
        }
        v.check();
        return v;
    }

    std::string to_string() const {
        std::string s = base == AllianceBase::defensive  ? "def"
                        : base == AllianceBase::offensive ? "off"
                                                          : "pow";
        if (global) s += " global";
        if (independent) s += " independent";
        return s;
    }

    bool operator==(const Variant&) const = default;
};

// boundary(A) = N(A) \ A
inline VertexSet boundary(const Graph& g, const VertexSet& a) {
    VertexSet b = g.open_neighborhood(a);
    b.subtract(a);
    return b;
}

// Every member has, counting itself, at least as many neighbors inside as
// outside: d_A(v) + 1 >= d_{V\A}(v).
inline bool is_defensive(const Graph& g, const VertexSet& a) {
    for (int v = a.first(); v != 0; v = a.next(v)) {
        int in = VertexSet::intersection_count(g.neighbors(v), a);
        if (in + 1 < g.degree(v) - in) return false;
    }
    return true;
}

// Every boundary vertex is outgunned: d_A(v) >= d_{V\A}(v) + 1.
inline bool is_offensive(const Graph& g, const VertexSet& a) {
    VertexSet bd = boundary(g, a);
    for (int v = bd.first(); v != 0; v = bd.next(v)) {
        int in = VertexSet::intersection_count(g.neighbors(v), a);
        if (in < g.degree(v) - in + 1) return false;
    }
    return true;
}

inline bool is_dominating(const Graph& g, const VertexSet& a) {
    return g.closed_neighborhood(a) == g.vertices();
}

inline bool is_independent_set(const Graph& g, const VertexSet& a) {
    for (int v = a.first(); v != 0; v = a.next(v))
        if (VertexSet::intersection_count(g.neighbors(v), a) > 0) return false;
    return true;
}

inline bool satisfies(const Graph& g, const VertexSet& a, const Variant& variant) {
    switch (variant.base) {
    case AllianceBase::defensive:
        if (!is_defensive(g, a)) return false;
        break;
    case AllianceBase::offensive:
        if (!is_offensive(g, a)) return false;
        break;
    case AllianceBase::powerful:
        if (!is_defensive(g, a) || !is_offensive(g, a)) return false;
        break;
    }
    if (variant.global && !is_dominating(g, a)) return false;
    if (variant.independent && !is_independent_set(g, a)) return false;
    return true;
}

// Z(X) = { v outside N[X] : N(v) ⊆ leaves ∪ ∂X }; always an independent set.
inline VertexSet z_set(const Graph& g, const VertexSet& x) {
    VertexSet closed = g.closed_neighborhood(x);
    VertexSet allowed = g.leaves() | boundary(g, x);
    VertexSet z(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (closed.test(v)) continue;
        if (g.neighbors(v).is_subset_of(allowed)) z.set(v);
    }
    return z;
}

// Y(X) = N[X] ∪ Z(X) ∪ leaves; invariant across offensive-alliance steps.
inline VertexSet y_set(const Graph& g, const VertexSet& x) {
    VertexSet y = g.closed_neighborhood(x);
    y |= z_set(g, x);
    y |= g.leaves();
    return y;
}

} // namespace alre
