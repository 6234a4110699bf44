#include "k3fix/kodaira.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace k3fix {

int euler_number(KodairaFiberType f) {
    switch (f.kind) {
        case KodairaKind::I: return f.index;
        case KodairaKind::II: return 2;
        case KodairaKind::III: return 3;
        case KodairaKind::IV: return 4;
        case KodairaKind::Istar: return f.index + 6;
        case KodairaKind::IVstar: return 8;
        case KodairaKind::IIIstar: return 9;
        case KodairaKind::IIstar: return 10;
    }
    throw std::logic_error("unknown Kodaira kind");
}

std::string token(KodairaFiberType f) {
    switch (f.kind) {
        case KodairaKind::I: return "I" + std::to_string(f.index);
        case KodairaKind::II: return "II";
        case KodairaKind::III: return "III";
        case KodairaKind::IV: return "IV";
        case KodairaKind::Istar: return "I" + std::to_string(f.index) + "star";
        case KodairaKind::IVstar: return "IVstar";
        case KodairaKind::IIIstar: return "IIIstar";
        case KodairaKind::IIstar: return "IIstar";
    }
    throw std::logic_error("unknown Kodaira kind");
}

KodairaFiberType parse_fiber_token(std::string_view s) {
    if (s == "II") return kII;
    if (s == "III") return kIII;
    if (s == "IV") return kIV;
    if (s == "IVstar") return kIVstar;
    if (s == "IIIstar") return kIIIstar;
    if (s == "IIstar") return kIIstar;
    if (s.size() >= 2 && s.front() == 'I') {
        bool star = s.ends_with("star");
        std::string_view digits = s.substr(1, s.size() - 1 - (star ? 4 : 0));
        int n = -1;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size() && n >= 0) {
            return {star ? KodairaKind::Istar : KodairaKind::I, n};
        }
    }
    throw std::invalid_argument("unknown fiber type token '" + std::string(s) + "'");
}

GramGraph::GramGraph(std::vector<GramNode> nodes, std::vector<std::pair<int, int>> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].weight <= 0) throw std::invalid_argument("Gram graph node weight must be positive");
        for (std::size_t j = 0; j < i; ++j) {
            if (nodes_[i].id == nodes_[j].id) throw std::invalid_argument("duplicate Gram graph node id");
        }
    }
    for (const auto& [u, v] : edges_) {
        index_of(u);
        index_of(v);
    }
}

std::size_t GramGraph::index_of(int id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id == id) return i;
    }
    throw std::out_of_range("unknown Gram graph node " + std::to_string(id));
}

std::vector<int> GramGraph::neighbors(int id) const {
    std::vector<int> out;
    for (const auto& [u, v] : edges_) {
        if (u == id) out.push_back(v);
        else if (v == id) out.push_back(u);
    }
    return out;
}

bool GramGraph::has_edge(int u, int v) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const auto& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
}

bool GramGraph::is_tree() const {
    if (nodes_.empty() || edges_.size() + 1 != nodes_.size()) return false;
    // union-find: a cycle shows up as an edge joining one component to itself
    std::vector<std::size_t> parent(nodes_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges_) {
        std::size_t a = find(index_of(u));
        std::size_t b = find(index_of(v));
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

nlohmann::json to_json(const GramGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : g.nodes()) nodes.push_back({{"id", n.id}, {"weight", n.weight}});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"nodes", nodes}, {"edges", edges}};
}

GramGraph gram_graph_from_json(const nlohmann::json& j) {
    std::vector<GramNode> nodes;
    for (const auto& n : j.at("nodes")) nodes.push_back({n.at("id").get<int>(), n.at("weight").get<int>()});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("Gram graph edge must be [id, id]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return {std::move(nodes), std::move(edges)};
}

namespace {

GramGraph chain_with_weights(const std::vector<int>& weights) {
    std::vector<GramNode> nodes;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        nodes.push_back({static_cast<int>(i), weights[i]});
        if (i > 0) edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    return {std::move(nodes), std::move(edges)};
}

}  // namespace

GramGraph kodaira_graph(KodairaFiberType f) {
    switch (f.kind) {
        case KodairaKind::I: {
            if (f.index == 0) return {};
            std::vector<GramNode> nodes;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < f.index; ++i) {
                nodes.push_back({i, 1});
                edges.emplace_back(i, (i + 1) % f.index);
            }
            return {std::move(nodes), std::move(edges)};
        }
        case KodairaKind::II: return {{{0, 1}}, {}};
        case KodairaKind::III: return {{{0, 1}, {1, 1}}, {{0, 1}}};
        // three concurrent lines; recorded as pairwise incidences
        case KodairaKind::IV: return {{{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {0, 2}, {1, 2}}};
        case KodairaKind::Istar: {
            // D~_{n+4}: chain of n+1 double curves, two simple curves at each end
            std::vector<GramNode> nodes;
            std::vector<std::pair<int, int>> edges;
            const int chain = f.index + 1;
            for (int i = 0; i < chain; ++i) {
                nodes.push_back({i, 2});
                if (i > 0) edges.emplace_back(i - 1, i);
            }
            const int ends[4] = {0, 0, chain - 1, chain - 1};
            for (int e = 0; e < 4; ++e) {
                nodes.push_back({chain + e, 1});
                edges.emplace_back(ends[e], chain + e);
            }
            return {std::move(nodes), std::move(edges)};
        }
        case KodairaKind::IVstar:
            // E~6: node 0 is the triple curve; arms 1-2, 3-4, 5-6 end in simple curves
            return {{{0, 3}, {1, 2}, {2, 1}, {3, 2}, {4, 1}, {5, 2}, {6, 1}},
                    {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}};
        case KodairaKind::IIIstar: {
            // E~7: 1-2-3-4-3-2-1 with a double curve on the middle
            GramGraph chain = chain_with_weights({1, 2, 3, 4, 3, 2, 1});
            auto nodes = chain.nodes();
            auto edges = chain.edges();
            nodes.push_back({7, 2});
            edges.emplace_back(3, 7);
            return {std::move(nodes), std::move(edges)};
        }
        case KodairaKind::IIstar: {
            // E~8: 1-2-3-4-5-6-4-2 with a triple curve on the sextuple one
            GramGraph chain = chain_with_weights({1, 2, 3, 4, 5, 6, 4, 2});
            auto nodes = chain.nodes();
            auto edges = chain.edges();
            nodes.push_back({8, 3});
            edges.emplace_back(5, 8);
            return {std::move(nodes), std::move(edges)};
        }
    }
    throw std::logic_error("unknown Kodaira kind");
}

}  // namespace k3fix
