#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "k3fix/cyclotomic.hpp"

namespace k3fix {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows);

/// Exact determinant by Bareiss elimination. Throws on non-square input.
Integer determinant(const IntMatrix& m);

/// Smith normal form diagonal of an arbitrary integer matrix: min(rows, cols) entries,
/// non-negative, each dividing the next (zeros last).
std::vector<Integer> smith_invariants(IntMatrix m);

/// Integral lattice given by a symmetric integer Gram matrix.
class IntegralLattice {
public:
    IntegralLattice() = default;
    /// Throws std::invalid_argument when the matrix is not square and symmetric.
    explicit IntegralLattice(IntMatrix gram, std::optional<std::string> name = std::nullopt);

    const IntMatrix& gram() const { return gram_; }
    const std::optional<std::string>& name() const { return name_; }
    std::size_t rank() const { return gram_.size(); }

    Integer determinant() const { return k3fix::determinant(gram_); }
    bool is_even() const;
    bool is_nondegenerate() const { return rank() == 0 || determinant() != 0; }

    friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

private:
    IntMatrix gram_;
    std::optional<std::string> name_;
};

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

/// Gram entries multiplied by n; throws std::invalid_argument for n = 0.
IntegralLattice scale(const IntegralLattice& a, long n);

/// Gram matrix of the basis given by the rows of `basis`: B G B^T.
IntegralLattice change_basis(const IntegralLattice& a, const IntMatrix& basis);

/// (positive, negative) inertia, by fraction-free symmetric elimination.
/// Throws std::domain_error on degenerate lattices.
std::pair<int, int> signature(const IntegralLattice& l);

struct DiscriminantGroup {
    /// Invariant factors > 1 of L^* / L, each dividing the next.
    std::vector<Integer> divisors;

    Integer order() const;
    bool is_trivial() const { return divisors.empty(); }

    friend bool operator==(const DiscriminantGroup&, const DiscriminantGroup&) = default;
};

/// Throws std::domain_error on degenerate lattices.
DiscriminantGroup discriminant_group(const IntegralLattice& l);

bool is_p_elementary(const IntegralLattice& l, long p);

enum class PicardViolation { Degenerate, NotEven, NotUnimodular, WrongSignature, RankNotAllowed };

std::string to_string(PicardViolation v);

struct PicardClassification {
    std::optional<std::string> name;  // "U", "U+E8" or "U+E8^2"
    std::vector<PicardViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Identifies an even unimodular hyperbolic lattice of rank <= 20 by its rank.
/// Every failed precondition is reported.
PicardClassification classify_fixed_picard(const IntegralLattice& l);

/// Rank complement to 20 with matching discriminant invariant factors; false for
/// lattices that are not even and hyperbolic. Exact for the unimodular case only.
bool mirror_pair(const IntegralLattice& m, const IntegralLattice& w);

/// Built-in lattices: U, U(n), A2, E8 (negative definite), E8^2, U+E8, U+E8^2,
/// U(3)+A2^3, K3 (= U^3+E8^2). Throws std::invalid_argument for unknown names.
IntegralLattice lattice_by_name(const std::string& name);
std::vector<std::string> registry_names();

/// {"gram":[[...]], "name": optional}
nlohmann::json to_json(const IntegralLattice& l);
IntegralLattice lattice_from_json(const nlohmann::json& j);

}  // namespace k3fix
