#include "regimecast/dag.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace regimecast {

Dag::Dag(const std::vector<std::string>& variables) {
    for (const auto& v : variables) add_variable(v);
}

void Dag::add_variable(const std::string& name) {
    if (has_variable(name)) throw std::invalid_argument("duplicate variable: " + name);
    vars_.push_back(name);
}

bool Dag::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

int Dag::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
    return static_cast<int>(it - vars_.begin());
}

void Dag::add_edge(const std::string& parent, const std::string& child) {
    index_of(parent);
    index_of(child);
    if (parent == child) throw std::invalid_argument("self-loop on " + parent);
    if (has_edge(parent, child))
        throw std::invalid_argument("duplicate edge " + parent + " -> " + child);
    edges_.insert({parent, child});
    if (!is_acyclic()) {
        edges_.erase({parent, child});
        throw std::invalid_argument("edge " + parent + " -> " + child + " creates a cycle");
    }
}

void Dag::remove_edge(const std::string& parent, const std::string& child) {
    if (edges_.erase({parent, child}) == 0)
        throw std::invalid_argument("no edge " + parent + " -> " + child);
}

bool Dag::has_edge(const std::string& parent, const std::string& child) const {
    return edges_.count({parent, child}) > 0;
}

bool Dag::edge_addable(const std::string& parent, const std::string& child) const {
    if (parent == child || has_edge(parent, child)) return false;
    Dag copy = *this;
    copy.edges_.insert({parent, child});
    return copy.is_acyclic();
}

std::vector<std::string> Dag::parents(const std::string& child) const {
    std::vector<std::string> out;
    for (const auto& [p, c] : edges_)
        if (c == child) out.push_back(p);
    return out;
}

std::vector<std::string> Dag::children(const std::string& parent) const {
    std::vector<std::string> out;
    for (const auto& [p, c] : edges_)
        if (p == parent) out.push_back(c);
    return out;
}

std::optional<std::vector<std::string>> Dag::topological_order() const {
    std::map<std::string, int> in_degree;
    for (const auto& v : vars_) in_degree[v] = 0;
    for (const auto& [p, c] : edges_) in_degree[c]++;

    // Kahn's algorithm; the frontier respects variable insertion order.
    std::vector<std::string> order;
    std::vector<std::string> frontier;
    for (const auto& v : vars_)
        if (in_degree[v] == 0) frontier.push_back(v);
    while (!frontier.empty()) {
        std::string v = frontier.front();
        frontier.erase(frontier.begin());
        order.push_back(v);
        for (const auto& c : children(v)) {
            if (--in_degree[c] == 0) frontier.push_back(c);
        }
    }
    if (order.size() != vars_.size()) return std::nullopt;
    return order;
}

std::set<Edge> Dag::skeleton() const {
    std::set<Edge> out;
    for (const auto& [p, c] : edges_)
        out.insert(p < c ? Edge{p, c} : Edge{c, p});
    return out;
}

std::string Dag::canonical_edges() const {
    std::ostringstream os;
    for (const auto& [p, c] : edges_) os << p << ">" << c << ";";
    return os.str();
}

std::string Dag::to_dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (const auto& v : vars_) os << "  \"" << v << "\";\n";
    for (const auto& [p, c] : edges_) os << "  \"" << p << "\" -> \"" << c << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace regimecast
