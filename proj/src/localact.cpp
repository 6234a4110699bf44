#include "k3fix/localact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace k3fix {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

PointType::PointType(int order, int k, int k_prime, int omega) : order_(order) {
    if (order != 2 && order != 3 && order != 6) {
        throw std::invalid_argument("point type order must be 2, 3 or 6");
    }
    k = mod(k, order);
    k_prime = mod(k_prime, order);
    omega_ = mod(omega, order);
    if (mod(k + k_prime, order) != omega_) {
        throw std::invalid_argument("point type exponents " + std::to_string(k) + "," +
                                    std::to_string(k_prime) + " do not multiply to the 2-form character");
    }
    k_ = std::min(k, k_prime);
    k_prime_ = std::max(k, k_prime);
}

std::string PointType::label() const {
    return "1/" + std::to_string(order_) + "(" + std::to_string(k_) + "," + std::to_string(k_prime_) + ")";
}

PowerResult power_type(const PointType& t, int i) {
    if (t.order() != 6) throw std::invalid_argument("power_type expects an order-6 point type");
    if (i != 2 && i != 3) throw std::invalid_argument("power_type exponent must be 2 or 3");
    // xi6^(k*i) = xi_{6/i}^k
    const int order = 6 / i;
    const int k = mod(t.k(), order);
    const int k_prime = mod(t.k_prime(), order);
    if (k == 0 || k_prime == 0) return OnFixedCurve{};
    return PointType(order, k, k_prime, t.omega());
}

int complete_eigenvalue(int along, int omega) { return mod(omega - along, 6); }

PointType type_from_along(int along) { return PointType::order6(along, complete_eigenvalue(along)); }

CurveStatus ActionAssignment::status(int id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return n.status;
    }
    throw std::out_of_range("no action recorded for node " + std::to_string(id));
}

LocalFixedData ActionAssignment::fixed_data() const {
    LocalFixedData d;
    auto count = [&d](const PointType& t) {
        if (t == PointType::order6(3, 4)) ++d.p34;
        else if (t == PointType::order6(2, 5)) ++d.p25;
    };
    for (const auto& e : edges) count(e.type);
    for (const auto& t : terminals) count(t.type);
    d.fixed_rational_curves =
        static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const NodeAction& n) {
            return n.status == CurveStatus::Fixed;
        }));
    return d;
}

namespace {

std::string branch_shape(const GramGraph& g, int node, int parent) {
    std::vector<std::string> children;
    for (int nb : g.neighbors(node)) {
        if (nb != parent) children.push_back(branch_shape(g, nb, node));
    }
    std::sort(children.begin(), children.end());
    std::string s = "(" + std::to_string(g.weight(node));
    for (const auto& c : children) s += c;
    return s + ")";
}

void collect_branch(const GramGraph& g, int node, int parent, std::vector<int>& out) {
    out.push_back(node);
    for (int nb : g.neighbors(node)) {
        if (nb != parent) collect_branch(g, nb, node, out);
    }
}

}  // namespace

ActionAssignment propagate(const GramGraph& g, const Anchor& anchor) {
    if (!g.is_tree()) throw PropagationError("propagation requires a connected tree of curves");
    g.index_of(anchor.curve);
    if (anchor.neighbor && !g.has_edge(anchor.curve, *anchor.neighbor)) {
        throw PropagationError("anchor neighbor does not meet the anchor curve");
    }

    struct Visit {
        int node;
        std::optional<int> from;
        int along;
    };

    std::map<int, CurveStatus> status;
    std::map<std::pair<int, int>, EdgeAction> edges;
    std::vector<TerminalPoint> terminals;
    std::deque<Visit> queue;

    auto add_edge = [&](int c, int along_c, int d) {
        const int along_d = complete_eigenvalue(along_c);
        EdgeAction e = c < d ? EdgeAction{c, d, along_c, along_d, type_from_along(along_c)}
                             : EdgeAction{d, c, along_d, along_c, type_from_along(along_c)};
        auto key = std::make_pair(e.u, e.v);
        if (auto it = edges.find(key); it != edges.end()) {
            if (!(it->second == e)) throw PropagationError("inconsistent action forced at an intersection");
            return false;
        }
        edges.emplace(key, e);
        return true;
    };
    auto add_terminal = [&](int c, int along) {
        terminals.push_back({c, mod(along, 6), type_from_along(along)});
    };

    const int start = mod(anchor.along, 6);
    if (anchor.neighbor) {
        add_edge(anchor.curve, start, *anchor.neighbor);
        queue.push_back({anchor.curve, anchor.neighbor, start});
        queue.push_back({*anchor.neighbor, anchor.curve, complete_eigenvalue(start)});
    } else {
        queue.push_back({anchor.curve, std::nullopt, start});
    }

    while (!queue.empty()) {
        const Visit v = queue.front();
        queue.pop_front();
        if (status.contains(v.node)) throw PropagationError("curve reached twice during propagation");

        std::vector<int> rest;
        for (int nb : g.neighbors(v.node)) {
            if (!v.from || nb != *v.from) rest.push_back(nb);
        }

        if (v.along == 0) {
            status[v.node] = CurveStatus::Fixed;
            for (int nb : rest) {
                if (add_edge(v.node, 0, nb)) queue.push_back({nb, v.node, complete_eigenvalue(0)});
            }
            continue;
        }

        status[v.node] = CurveStatus::Rotating;
        if (!v.from) add_terminal(v.node, v.along);
        const int opposite = mod(-v.along, 6);
        if (rest.empty()) {
            add_terminal(v.node, opposite);
        } else if (rest.size() == 1) {
            if (add_edge(v.node, opposite, rest[0])) {
                queue.push_back({rest[0], v.node, complete_eigenvalue(opposite)});
            }
        } else {
            // branches off the fixed points must form a single orbit under the rotation
            const std::size_t orbit = 6 / std::gcd(v.along, 6);
            const std::string shape = branch_shape(g, rest[0], v.node);
            const bool one_orbit =
                rest.size() == orbit && std::all_of(rest.begin(), rest.end(), [&](int nb) {
                    return branch_shape(g, nb, v.node) == shape;
                });
            if (!one_orbit) {
                throw PropagationError("curve " + std::to_string(v.node) +
                                       " rotates but carries branches that cannot be stable or permuted");
            }
            for (int nb : rest) {
                std::vector<int> branch;
                collect_branch(g, nb, v.node, branch);
                for (int id : branch) status[id] = CurveStatus::Permuted;
            }
            add_terminal(v.node, opposite);
        }
    }

    ActionAssignment out;
    for (const auto& n : g.nodes()) out.nodes.push_back({n.id, status.at(n.id)});
    for (auto& [key, e] : edges) out.edges.push_back(e);
    std::sort(terminals.begin(), terminals.end(), [](const TerminalPoint& a, const TerminalPoint& b) {
        return std::tie(a.node, a.along) < std::tie(b.node, b.along);
    });
    out.terminals = std::move(terminals);
    return out;
}

std::vector<PointType> chain_sequence(int start_exponent, int length) {
    if (length < 1) throw std::invalid_argument("chain_sequence length must be positive");
    std::vector<PointType> out;
    out.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) out.push_back(type_from_along(start_exponent + i));
    return out;
}

std::string to_string(BaseAction b) { return b == BaseAction::Trivial ? "trivial" : "involution"; }

BaseAction parse_base_action(std::string_view s) {
    if (s == "trivial") return BaseAction::Trivial;
    if (s == "involution") return BaseAction::Involution;
    throw std::invalid_argument("base action must be 'trivial' or 'involution'");
}

LocalFixedData fiber_catalog(KodairaFiberType f, BaseAction base) {
    if (base == BaseAction::Trivial) {
        if (f == kI0) return {0, 0, 0};
        if (f == kII) return {1, 0, 0};
        if (f == kIV) return {0, 1, 0};
        if (f == kIVstar) return {2, 1, 0};
        if (f == kIIstar) return {3, 4, 1};
    } else {
        if (f == kI0) return {3, 0, 0};
        if (f == kIV) return {1, 1, 0};
        if (f == kIVstar) return {3, 3, 1};
    }
    throw UnsupportedFiber("no local analysis for a " + token(f) + " fiber with " + to_string(base) +
                           " base action");
}

Anchor section_anchor(const GramGraph& g, BaseAction base) {
    for (const auto& n : g.nodes()) {
        if (n.weight == 1 && g.neighbors(n.id).size() <= 1) {
            // along + section direction = 1; section exponent 0 (fixed) or 3 (negated)
            return {n.id, complete_eigenvalue(base == BaseAction::Trivial ? 0 : 3), std::nullopt};
        }
    }
    throw std::invalid_argument("configuration has no simple end curve for the section");
}

LocalFixedData fiber_fixed_locus(KodairaFiberType f, BaseAction base) {
    const LocalFixedData expected = fiber_catalog(f, base);
    if (f != kIVstar && f != kIIstar) return expected;
    const GramGraph g = kodaira_graph(f);
    const LocalFixedData derived = propagate(g, section_anchor(g, base)).fixed_data();
    if (!(derived == expected)) {
        throw std::logic_error("propagated fixed locus of " + token(f) + " disagrees with the catalog");
    }
    return derived;
}

}  // namespace k3fix
