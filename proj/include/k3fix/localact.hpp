#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "k3fix/kodaira.hpp"

namespace k3fix {

/// Local type 1/order(k,k') of a fixed point: the linearized action is
/// diag(xi_order^k, xi_order^k'), and k + k' is the character on the 2-form.
/// The exponent pair is stored canonically with k <= k'.
class PointType {
public:
    /// Throws std::invalid_argument unless order is 2, 3 or 6 and k + k' = omega (mod order).
    PointType(int order, int k, int k_prime, int omega = 1);

    /// Order-6 type with omega exponent 1.
    static PointType order6(int k, int k_prime) { return {6, k, k_prime, 1}; }

    int order() const { return order_; }
    int k() const { return k_; }
    int k_prime() const { return k_prime_; }
    int omega() const { return omega_; }

    /// No eigenvalue equal to 1.
    bool isolated() const { return k_ != 0; }

    /// "1/6(2,5)"
    std::string label() const;

    friend bool operator==(const PointType&, const PointType&) = default;
    friend auto operator<=>(const PointType&, const PointType&) = default;

private:
    int order_;
    int k_;
    int k_prime_;
    int omega_;
};

struct OnFixedCurve {
    friend bool operator==(OnFixedCurve, OnFixedCurve) { return true; }
};

using PowerResult = std::variant<PointType, OnFixedCurve>;

/// Type of an order-6 point under zeta^i, i in {2,3}.
PowerResult power_type(const PointType& t, int i);

/// Exponent of the eigenvalue transverse to a direction with exponent `along`.
int complete_eigenvalue(int along, int omega = 1);

/// Order-6 type of a point at which one direction has exponent `along`.
PointType type_from_along(int along);

enum class CurveStatus {
    Fixed,     // pointwise fixed
    Rotating,  // stable, acting with two fixed points
    Permuted,  // moved onto another component
};

struct NodeAction {
    int id;
    CurveStatus status;

    friend bool operator==(const NodeAction&, const NodeAction&) = default;
};

/// Fixed intersection point of curves u < v with the exponent along each curve.
struct EdgeAction {
    int u;
    int v;
    int along_u;
    int along_v;
    PointType type;

    friend bool operator==(const EdgeAction&, const EdgeAction&) = default;
};

/// Fixed point of a rotating curve that is not an intersection with another graph node.
struct TerminalPoint {
    int node;
    int along;
    PointType type;

    friend bool operator==(const TerminalPoint&, const TerminalPoint&) = default;
};

struct LocalFixedData {
    int p34 = 0;
    int p25 = 0;
    int fixed_rational_curves = 0;

    LocalFixedData& operator+=(const LocalFixedData& o) {
        p34 += o.p34;
        p25 += o.p25;
        fixed_rational_curves += o.fixed_rational_curves;
        return *this;
    }
    friend LocalFixedData operator+(LocalFixedData a, const LocalFixedData& b) { return a += b; }
    friend LocalFixedData operator*(int n, LocalFixedData a) {
        a.p34 *= n;
        a.p25 *= n;
        a.fixed_rational_curves *= n;
        return a;
    }
    friend bool operator==(const LocalFixedData&, const LocalFixedData&) = default;
};

struct ActionAssignment {
    std::vector<NodeAction> nodes;      // graph order
    std::vector<EdgeAction> edges;      // sorted by (u, v)
    std::vector<TerminalPoint> terminals;  // sorted by (node, along)

    CurveStatus status(int id) const;
    /// Counts isolated points of type (3,4), (2,5) and the pointwise fixed curves.
    LocalFixedData fixed_data() const;

    friend bool operator==(const ActionAssignment&, const ActionAssignment&) = default;
};

/// Where the action is known: the exponent along `curve` at its intersection with
/// `neighbor`, or at a fixed point of `curve` off the graph when `neighbor` is empty.
struct Anchor {
    int curve;
    int along;
    std::optional<int> neighbor;
};

class PropagationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Spreads a known local action over a tree of stable rational curves. A curve with
/// nonzero exponent a at one fixed point has exponent -a at the other; across an
/// intersection the two along-exponents sum to 1. A rotating curve carrying more
/// branches than fixed points must permute them in one orbit of isomorphic branches.
/// Throws PropagationError on non-trees and on forced inconsistencies.
ActionAssignment propagate(const GramGraph& g, const Anchor& anchor);

/// Intersection types along an infinite chain when the first intersection has
/// along-exponent `start_exponent` on the outgoing curve.
std::vector<PointType> chain_sequence(int start_exponent, int length);

enum class BaseAction { Trivial, Involution };

std::string to_string(BaseAction b);
BaseAction parse_base_action(std::string_view s);

class UnsupportedFiber : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tabulated per-fiber contribution to the fixed locus of zeta, for the fibers
/// a zeta-stable fiber can have. Throws UnsupportedFiber otherwise.
LocalFixedData fiber_catalog(KodairaFiberType f, BaseAction base);

/// Fixed-locus contribution of one stable fiber. IV* and II* are computed by
/// propagating from the section's intersection point and checked against the catalog;
/// I0, II, IV are read from the catalog.
LocalFixedData fiber_fixed_locus(KodairaFiberType f, BaseAction base);

/// Anchor used for the section point on a tree-shaped fiber: the section meets a simple
/// end curve and its direction is fixed (trivial base action) or negated (involution).
Anchor section_anchor(const GramGraph& g, BaseAction base);

}  // namespace k3fix
