#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "picard/enumerate.hpp"
#include "picard/errors.hpp"
#include "picard/real_quadratic.hpp"

namespace picard {

enum class EdgeLabel { Partner, D, B };

inline const char* edge_label_name(EdgeLabel l) {
    switch (l) {
        case EdgeLabel::Partner: return "C";
        case EdgeLabel::D: return "D";
        case EdgeLabel::B: return "B";
    }
    return "?";
}

/// The ambiguous image among C(q), C^2(q); the other is totally negative.
/// An involution on ambiguous numbers with integral d.
inline RealQuadratic partner(const RealQuadratic& q) {
    if (q.classify() != AmbiguityClass::Ambiguous) throw NotAmbiguousInput();
    RealQuadratic c1 = q.act_C();
    RealQuadratic c2 = q.act_C2();
    bool amb1 = c1.classify() == AmbiguityClass::Ambiguous;
    bool amb2 = c2.classify() == AmbiguityClass::Ambiguous;
    if (amb1 == amb2)
        throw PropositionViolation("C/C^2 ambiguity split failed at " + q.render());
    const RealQuadratic& other = amb1 ? c2 : c1;
    if (other.classify() != AmbiguityClass::TotallyNegative)
        throw PropositionViolation("non-ambiguous C image is not totally negative at " +
                                   q.render());
    return amb1 ? c1 : c2;
}

/// Whether the ambiguous partner of q is C(q) (as opposed to C^2(q)).
inline bool partner_via_c(const RealQuadratic& q) {
    return q.act_C().classify() == AmbiguityClass::Ambiguous;
}

struct LabeledEdge {
    std::size_t from, to;  // from < to, indices into the sorted vertex list
    EdgeLabel label;
    bool via_c2;  // Partner edges only: realized by C^2 from the 'from' endpoint

    friend bool operator<(const LabeledEdge& x, const LabeledEdge& y) {
        return std::tie(x.from, x.to, x.label) < std::tie(y.from, y.to, y.label);
    }
    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// One alternating Partner/D cycle: vertex indices plus the label of the
/// edge leaving each vertex toward the next.
struct ClosedPath {
    std::vector<std::size_t> vertices;
    std::vector<EdgeLabel> labels;  // labels[j] joins vertices[j] and vertices[j+1 mod n]
};

/// Subgraph of the coset diagram induced on the ambiguous numbers of the
/// k-path.  Partner, D and B are each perfect matchings on the vertices.
class AmbiguousGraph {
public:
    explicit AmbiguousGraph(const Int& k) : k_(k) {
        vertices_ = enumerate_ambiguous(k).members;  // sorted by (a, c)
        std::set<LabeledEdge> edges;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const RealQuadratic& q = vertices_[i];
            add_edge(edges, i, partner(q), EdgeLabel::Partner, !partner_via_c(q));
            add_edge(edges, i, q.act_D(), EdgeLabel::D, false);
            add_edge(edges, i, q.act_B(), EdgeLabel::B, false);
        }
        edges_.assign(edges.begin(), edges.end());
    }

    const Int& k() const { return k_; }
    const std::vector<RealQuadratic>& vertices() const { return vertices_; }
    const std::vector<LabeledEdge>& edges() const { return edges_; }

    std::size_t index_of(const RealQuadratic& q) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), q);
        if (it == vertices_.end() || !(*it == q))
            throw ClosureViolation("image " + q.render() + " is not a vertex");
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::vector<LabeledEdge> edges_with(EdgeLabel l) const {
        std::vector<LabeledEdge> out;
        for (const LabeledEdge& e : edges_)
            if (e.label == l) out.push_back(e);
        return out;
    }

    /// The matched vertex of v under the given label-class.
    std::size_t matched(std::size_t v, EdgeLabel l) const {
        for (const LabeledEdge& e : edges_)
            if (e.label == l && (e.from == v || e.to == v)) return e.from == v ? e.to : e.from;
        throw ClosureViolation("unmatched vertex");
    }

    /// Cycle decomposition of the Partner-union-D subgraph; every cycle
    /// alternates the two labels.
    std::vector<ClosedPath> layer_cycles() const {
        std::vector<bool> seen(vertices_.size(), false);
        std::vector<ClosedPath> out;
        for (std::size_t start = 0; start < vertices_.size(); ++start) {
            if (seen[start]) continue;
            ClosedPath path;
            std::size_t v = start;
            EdgeLabel next = EdgeLabel::Partner;
            do {
                seen[v] = true;
                path.vertices.push_back(v);
                path.labels.push_back(next);
                v = matched(v, next);
                next = next == EdgeLabel::Partner ? EdgeLabel::D : EdgeLabel::Partner;
            } while (v != start);
            out.push_back(std::move(path));
        }
        return out;
    }

    /// Connectivity of the whole graph, B edges included.
    bool connected() const {
        if (vertices_.empty()) return true;
        std::vector<bool> seen(vertices_.size(), false);
        std::deque<std::size_t> frontier{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!frontier.empty()) {
            std::size_t v = frontier.front();
            frontier.pop_front();
            for (const LabeledEdge& e : edges_) {
                std::size_t w;
                if (e.from == v)
                    w = e.to;
                else if (e.to == v)
                    w = e.from;
                else
                    continue;
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    frontier.push_back(w);
                }
            }
        }
        return count == vertices_.size();
    }

    std::string export_dot() const {
        std::ostringstream os;
        os << "graph ambiguous_k" << k_.str() << " {\n";
        for (const RealQuadratic& q : vertices_)
            os << "  " << q.node_id() << " [label=\"" << q.render() << "\"];\n";
        for (const LabeledEdge& e : edges_) {
            os << "  " << vertices_[e.from].node_id() << " -- "
               << vertices_[e.to].node_id() << " [label=\"" << edge_label_name(e.label)
               << "\"";
            if (e.label == EdgeLabel::B) os << ", style=bold";
            os << "];\n";
        }
        os << "}\n";
        return os.str();
    }

    std::string export_json() const {
        nlohmann::ordered_json j;
        j["k"] = k_.convert_to<long long>();
        j["vertices"] = nlohmann::ordered_json::array();
        for (const RealQuadratic& q : vertices_) {
            j["vertices"].push_back({{"a", q.a().convert_to<long long>()},
                                     {"b", q.b().convert_to<long long>()},
                                     {"c", q.c().convert_to<long long>()}});
        }
        j["edges"] = nlohmann::ordered_json::array();
        for (const LabeledEdge& e : edges_) {
            nlohmann::ordered_json je = {{"from", e.from},
                                         {"to", e.to},
                                         {"label", edge_label_name(e.label)}};
            if (e.label == EdgeLabel::Partner) je["via"] = e.via_c2 ? "C2" : "C";
            j["edges"].push_back(je);
        }
        j["cycles"] = nlohmann::ordered_json::array();
        for (const ClosedPath& p : layer_cycles()) j["cycles"].push_back(p.vertices);
        return j.dump(2) + "\n";
    }

private:
    void add_edge(std::set<LabeledEdge>& edges, std::size_t i, const RealQuadratic& image,
                  EdgeLabel label, bool via_c2) {
        std::size_t jdx = index_of(image);
        // vertices are visited in ascending order, so the first insertion is
        // from the lower endpoint; its "via" annotation wins
        edges.insert({std::min(i, jdx), std::max(i, jdx), label, via_c2});
    }

    Int k_;
    std::vector<RealQuadratic> vertices_;
    std::vector<LabeledEdge> edges_;
};

/// Closure of {start} under B, D, C, C^2, keeping only ambiguous images.
/// Visited-set membership is by value equality; the stored representatives
/// are the (possibly unreduced) triples the closed forms produce.
inline std::vector<RealQuadratic> bfs_orbit_ambiguous(const RealQuadratic& start,
                                                      std::size_t limit) {
    if (start.classify() != AmbiguityClass::Ambiguous) throw NotAmbiguousInput();
    std::set<RealQuadratic> visited_values;  // gcd-reduced
    std::vector<RealQuadratic> members;
    std::deque<RealQuadratic> frontier;
    auto visit = [&](const RealQuadratic& q) {
        if (q.classify() != AmbiguityClass::Ambiguous) return;
        if (!visited_values.insert(q.reduced()).second) return;
        if (members.size() >= limit) throw LimitExceeded("ambiguous orbit exceeded limit");
        members.push_back(q);
        frontier.push_back(q);
    };
    visit(start);
    while (!frontier.empty()) {
        RealQuadratic q = frontier.front();
        frontier.pop_front();
        visit(q.act_B());
        visit(q.act_D());
        visit(q.act_C());
        visit(q.act_C2());
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace picard
