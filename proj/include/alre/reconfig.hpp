#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alliances.hpp"

namespace alre {

enum class MoveKind { ts, tj, tar };

struct MoveRule {
    MoveKind kind = MoveKind::tj;
    int cap = 0; // token threshold, meaningful iff kind == tar

    static MoveRule parse(const std::string& word) {
        MoveRule r;
        if (word == "ts") r.kind = MoveKind::ts;
        else if (word == "tj") r.kind = MoveKind::tj;
        else if (word == "tar") r.kind = MoveKind::tar;
        else throw malformed_input_error("rule: unknown kind '" + word + "'");
        return r;
    }
    std::string to_string() const {
        switch (kind) {
        case MoveKind::ts: return "ts";
        case MoveKind::tj: return "tj";
        default: return "tar";
        }
    }
    bool operator==(const MoveRule&) const = default;
};

// One step of the reconfiguration relation.
//   TAR: |a △ b| = 1 and both sizes within the cap.
//   TJ:  |a| = |b| and |a \ b| = 1.
//   TS:  TJ step whose two differing vertices are adjacent.
inline bool is_legal_step(const Graph& g, const VertexSet& a, const VertexSet& b,
                          const MoveRule& rule) {
    if (a == b) return false;
    VertexSet out = difference(a, b);
    VertexSet in = difference(b, a);
    int nout = out.count(), nin = in.count();
    switch (rule.kind) {
    case MoveKind::tar:
        if (nout + nin != 1) return false;
        return a.count() <= rule.cap && b.count() <= rule.cap;
    case MoveKind::tj:
        return nout == 1 && nin == 1;
    case MoveKind::ts: {
        if (nout != 1 || nin != 1) return false;
        return g.adjacent(out.first(), in.first());
    }
    }
    return false;
}

struct Sequence {
    std::vector<VertexSet> configs;

    int moves() const { return configs.empty() ? 0 : int(configs.size()) - 1; }
};

// Dominating-set reconfiguration seed (the source problem of the hardness
// constructions): graph plus start/target dominating sets.
struct DsInstance {
    Graph graph;
    VertexSet start;
    VertexSet target;
    std::optional<long> move_bound;
};

struct Instance {
    Graph graph;
    VertexSet start;
    VertexSet target;
    Variant variant;
    MoveRule rule;
    // Number of allowed moves (= configurations - 1). A negative value means
    // even the one-configuration sequence is disallowed.
    std::optional<long> move_bound;

    void validate() const {
        variant.check();
        if (start.universe() != graph.vertex_count() || target.universe() != graph.vertex_count())
            throw malformed_input_error("instance: config universe mismatch");
        if (!satisfies(graph, start, variant))
            throw malformed_input_error("instance: start does not satisfy variant " + variant.to_string());
        if (!satisfies(graph, target, variant))
            throw malformed_input_error("instance: target does not satisfy variant " + variant.to_string());
        if (rule.kind == MoveKind::tar) {
            if (rule.cap < 0) throw malformed_input_error("instance: negative cap");
            if (start.count() > rule.cap || target.count() > rule.cap)
                throw malformed_input_error("instance: endpoint exceeds tar cap");
        } else {
            if (start.count() != target.count())
                throw malformed_input_error("instance: ts/tj endpoints differ in size");
        }
    }
};

enum class ViolationReason { variant_fail, step_illegal, endpoint_mismatch, bound_exceeded };

inline std::string to_string(ViolationReason r) {
    switch (r) {
    case ViolationReason::variant_fail: return "variant-fail";
    case ViolationReason::step_illegal: return "step-illegal";
    case ViolationReason::endpoint_mismatch: return "endpoint-mismatch";
    default: return "bound-exceeded";
    }
}

struct SequenceViolation {
    int index = 0; // 1-based configuration index where the check failed
    ViolationReason reason = ViolationReason::variant_fail;
};

// Certificate checker shared by every solver: reports the first violation, or
// nothing when the sequence is a valid witness for the instance.
inline std::optional<SequenceViolation> validate_sequence(const Instance& inst,
                                                          const Sequence& seq) {
    const auto& cs = seq.configs;
    if (cs.empty()) return SequenceViolation{1, ViolationReason::endpoint_mismatch};
    if (!(cs.front() == inst.start)) return SequenceViolation{1, ViolationReason::endpoint_mismatch};
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (inst.move_bound && long(i) > *inst.move_bound)
            return SequenceViolation{int(i) + 1, ViolationReason::bound_exceeded};
        if (!satisfies(inst.graph, cs[i], inst.variant))
            return SequenceViolation{int(i) + 1, ViolationReason::variant_fail};
        if (inst.rule.kind == MoveKind::tar && cs[i].count() > inst.rule.cap)
            return SequenceViolation{int(i) + 1, ViolationReason::step_illegal};
        if (i > 0 && !is_legal_step(inst.graph, cs[i - 1], cs[i], inst.rule))
            return SequenceViolation{int(i) + 1, ViolationReason::step_illegal};
    }
    if (!(cs.back() == inst.target))
        return SequenceViolation{int(cs.size()), ViolationReason::endpoint_mismatch};
    return std::nullopt;
}

struct SearchStats {
    std::uint64_t visited = 0;   // distinct valid configurations stored
    std::uint64_t expanded = 0;  // configurations whose successors were enumerated
    std::uint64_t generated = 0; // candidate moves emitted across all expansions
    std::size_t max_branch = 0;  // largest per-expansion candidate count
};

struct Outcome {
    bool reachable = false;
    std::optional<long> min_moves;
    std::optional<Sequence> witness;
    SearchStats stats;
};

} // namespace alre
