#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace regimecast {

using Edge = std::pair<std::string, std::string>;  // parent -> child

// Directed acyclic graph over named variables. Insertion order of variables
// is preserved; edge storage is ordered so iteration is deterministic.
class Dag {
public:
    Dag() = default;
    explicit Dag(const std::vector<std::string>& variables);

    void add_variable(const std::string& name);
    bool has_variable(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws invalid_argument

    // Throws invalid_argument on self-loops, duplicates, unknown endpoints,
    // or when the edge would create a cycle.
    void add_edge(const std::string& parent, const std::string& child);
    void remove_edge(const std::string& parent, const std::string& child);
    bool has_edge(const std::string& parent, const std::string& child) const;

    // True when adding parent->child keeps the graph acyclic.
    bool edge_addable(const std::string& parent, const std::string& child) const;

    const std::vector<std::string>& variables() const { return vars_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::vector<std::string> parents(const std::string& child) const;
    std::vector<std::string> children(const std::string& parent) const;

    std::optional<std::vector<std::string>> topological_order() const;
    bool is_acyclic() const { return topological_order().has_value(); }

    // Undirected adjacency pairs, each with the lexicographically smaller name first.
    std::set<Edge> skeleton() const;

    // Canonical text form of the edge set, for tabu hashing and golden files.
    std::string canonical_edges() const;

    std::string to_dot(const std::string& graph_name = "g") const;

private:
    std::vector<std::string> vars_;
    std::set<Edge> edges_;
};

}  // namespace regimecast
