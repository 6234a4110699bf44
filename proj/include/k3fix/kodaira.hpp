#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace k3fix {

enum class KodairaKind { I, II, III, IV, Istar, IVstar, IIIstar, IIstar };

/// Kodaira singular fiber type. `index` is the n of I_n and I_n^*; it is 0 for every other kind.
struct KodairaFiberType {
    KodairaKind kind = KodairaKind::I;
    int index = 0;

    friend bool operator==(const KodairaFiberType&, const KodairaFiberType&) = default;
    friend auto operator<=>(const KodairaFiberType&, const KodairaFiberType&) = default;
};

inline constexpr KodairaFiberType kI0{KodairaKind::I, 0};
inline constexpr KodairaFiberType kII{KodairaKind::II, 0};
inline constexpr KodairaFiberType kIII{KodairaKind::III, 0};
inline constexpr KodairaFiberType kIV{KodairaKind::IV, 0};
inline constexpr KodairaFiberType kI0star{KodairaKind::Istar, 0};
inline constexpr KodairaFiberType kIVstar{KodairaKind::IVstar, 0};
inline constexpr KodairaFiberType kIIIstar{KodairaKind::IIIstar, 0};
inline constexpr KodairaFiberType kIIstar{KodairaKind::IIstar, 0};

/// Topological Euler number of the fiber.
int euler_number(KodairaFiberType f);

/// Shell-safe token: I0, I3, II, III, IV, I0star, I2star, IVstar, IIIstar, IIstar.
std::string token(KodairaFiberType f);
/// Inverse of token(). Throws std::invalid_argument on unknown tokens.
KodairaFiberType parse_fiber_token(std::string_view s);

struct GramNode {
    int id = 0;
    int weight = 1;

    friend bool operator==(const GramNode&, const GramNode&) = default;
};

/// Weighted incidence graph of the rational components of a configuration.
/// Edges are unordered; repeated edges and loops are allowed in the data (I_1, I_2)
/// but make the graph non-tree.
class GramGraph {
public:
    GramGraph() = default;
    GramGraph(std::vector<GramNode> nodes, std::vector<std::pair<int, int>> edges);

    const std::vector<GramNode>& nodes() const { return nodes_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t size() const { return nodes_.size(); }

    /// Position of a node id in nodes(); throws std::out_of_range for unknown ids.
    std::size_t index_of(int id) const;
    int weight(int id) const { return nodes_[index_of(id)].weight; }
    std::vector<int> neighbors(int id) const;
    bool has_edge(int u, int v) const;

    bool is_tree() const;

    friend bool operator==(const GramGraph&, const GramGraph&) = default;

private:
    std::vector<GramNode> nodes_;
    std::vector<std::pair<int, int>> edges_;
};

/// {"nodes":[{"id":..,"weight":..}],"edges":[[id,id]]}
nlohmann::json to_json(const GramGraph& g);
GramGraph gram_graph_from_json(const nlohmann::json& j);

/// Dual graph of the fiber's components with their multiplicities.
/// I0 has no rational components and yields the empty graph.
GramGraph kodaira_graph(KodairaFiberType f);

}  // namespace k3fix
