#include "k3fix/lattice.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace k3fix {

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

Integer determinant(const IntMatrix& in) {
    const std::size_t n = in.size();
    for (const auto& row : in) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (n == 0) return 1;
    IntMatrix m = in;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<Integer> smith_invariants(IntMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& r : m) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    }
    const std::size_t diag = std::min(rows, cols);

    for (std::size_t t = 0; t < diag; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pr = rows;
            std::size_t pc = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == rows) break;
            std::swap(m[t], m[pr]);
            for (auto& r : m) std::swap(r[t], r[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the rest of the block; otherwise fold the offending row in
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
    }

    std::vector<Integer> out;
    out.reserve(diag);
    for (std::size_t t = 0; t < diag; ++t) out.push_back(abs(m[t][t]));
    return out;
}

IntegralLattice::IntegralLattice(IntMatrix gram, std::optional<std::string> name)
    : gram_(std::move(gram)), name_(std::move(name)) {
    const std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw std::invalid_argument("Gram matrix must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Gram matrix must be symmetric");
        }
    }
}

bool IntegralLattice::is_even() const {
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i][i] % 2 != 0) return false;
    }
    return true;
}

namespace {

std::optional<std::string> join_names(const std::optional<std::string>& a, const std::optional<std::string>& b) {
    if (a && b) return *a + "+" + *b;
    return std::nullopt;
}

}  // namespace

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
    if (a.rank() == 0) return b;
    if (b.rank() == 0) return a;
    const std::size_t n = a.rank() + b.rank();
    IntMatrix g(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) g[i][j] = a.gram()[i][j];
    }
    for (std::size_t i = 0; i < b.rank(); ++i) {
        for (std::size_t j = 0; j < b.rank(); ++j) g[a.rank() + i][a.rank() + j] = b.gram()[i][j];
    }
    return IntegralLattice(std::move(g), join_names(a.name(), b.name()));
}

IntegralLattice scale(const IntegralLattice& a, long n) {
    if (n == 0) throw std::invalid_argument("cannot scale a lattice by 0");
    IntMatrix g = a.gram();
    for (auto& row : g) {
        for (auto& x : row) x *= n;
    }
    std::optional<std::string> name;
    if (a.name() && n != 1) name = *a.name() + "(" + std::to_string(n) + ")";
    else name = a.name();
    return IntegralLattice(std::move(g), name);
}

IntegralLattice change_basis(const IntegralLattice& a, const IntMatrix& basis) {
    const std::size_t n = a.rank();
    const std::size_t m = basis.size();
    IntMatrix bg(m, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i].size() != n) throw std::invalid_argument("basis vectors have the wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) bg[i][j] += basis[i][k] * a.gram()[k][j];
        }
    }
    IntMatrix g(m, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) g[i][j] += bg[i][k] * basis[j][k];
        }
    }
    return IntegralLattice(std::move(g));
}

std::pair<int, int> signature(const IntegralLattice& l) {
    IntMatrix a = l.gram();
    const std::size_t n = a.size();
    int pos = 0;
    int neg = 0;
    auto swap_index = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (auto& r : a) std::swap(r[i], r[j]);
    };
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t piv = n;
        for (std::size_t i = t; i < n; ++i) {
            if (a[i][i] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == n) {
            // zero diagonal: e_i + e_j has square 2 a_ij
            std::size_t pi = n;
            std::size_t pj = n;
            for (std::size_t i = t; i < n && pi == n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
            if (pi == n) throw std::domain_error("signature of a degenerate lattice");
            for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
            for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
            piv = pi;
        }
        swap_index(t, piv);
        const Integer d = a[t][t];
        (sgn(d) > 0 ? pos : neg)++;
        // congruence by rows r -> d*r - a_rt * t keeps the matrix integral
        for (std::size_t r = t + 1; r < n; ++r) {
            const Integer f = a[r][t];
            if (f == 0) continue;
            for (std::size_t c = t; c < n; ++c) a[r][c] = d * a[r][c] - f * a[t][c];
            for (std::size_t c = t; c < n; ++c) a[c][r] = d * a[c][r] - f * a[c][t];
        }
    }
    return {pos, neg};
}

Integer DiscriminantGroup::order() const {
    Integer o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
}

DiscriminantGroup discriminant_group(const IntegralLattice& l) {
    if (!l.is_nondegenerate()) throw std::domain_error("discriminant group of a degenerate lattice");
    DiscriminantGroup out;
    for (auto& d : smith_invariants(l.gram())) {
        if (d != 1) out.divisors.push_back(d);
    }
    return out;
}

bool is_p_elementary(const IntegralLattice& l, long p) {
    const DiscriminantGroup g = discriminant_group(l);
    return std::all_of(g.divisors.begin(), g.divisors.end(), [p](const Integer& d) { return d == p; });
}

std::string to_string(PicardViolation v) {
    switch (v) {
        case PicardViolation::Degenerate: return "degenerate";
        case PicardViolation::NotEven: return "not-even";
        case PicardViolation::NotUnimodular: return "not-unimodular";
        case PicardViolation::WrongSignature: return "wrong-signature";
        case PicardViolation::RankNotAllowed: return "rank-not-in-2-10-18";
    }
    return "unknown";
}

PicardClassification classify_fixed_picard(const IntegralLattice& l) {
    PicardClassification out;
    const std::size_t r = l.rank();
    if (!l.is_nondegenerate()) {
        out.violations.push_back(PicardViolation::Degenerate);
    } else {
        if (!l.is_even()) out.violations.push_back(PicardViolation::NotEven);
        if (abs(l.determinant()) != 1) out.violations.push_back(PicardViolation::NotUnimodular);
        if (signature(l) != std::make_pair(1, static_cast<int>(r) - 1)) {
            out.violations.push_back(PicardViolation::WrongSignature);
        }
    }
    if (r != 2 && r != 10 && r != 18) out.violations.push_back(PicardViolation::RankNotAllowed);
    if (out.ok()) out.name = r == 2 ? "U" : r == 10 ? "U+E8" : "U+E8^2";
    return out;
}

namespace {

bool even_hyperbolic(const IntegralLattice& l) {
    if (l.rank() == 0 || !l.is_even() || !l.is_nondegenerate()) return false;
    return signature(l) == std::make_pair(1, static_cast<int>(l.rank()) - 1);
}

}  // namespace

bool mirror_pair(const IntegralLattice& m, const IntegralLattice& w) {
    if (!even_hyperbolic(m) || !even_hyperbolic(w)) return false;
    if (m.rank() + w.rank() != 20) return false;
    return discriminant_group(m) == discriminant_group(w);
}

namespace {

IntegralLattice hyperbolic_plane() { return IntegralLattice(to_int_matrix({{0, 1}, {1, 0}}), "U"); }

IntegralLattice a2() { return IntegralLattice(to_int_matrix({{-2, 1}, {1, -2}}), "A2"); }

IntegralLattice e8() {
    // negative Cartan matrix; node 2 is the branch point (Bourbaki labelling)
    std::vector<std::vector<long>> g(8, std::vector<long>(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    const int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (const auto& e : edges) g[e[0]][e[1]] = g[e[1]][e[0]] = 1;
    return IntegralLattice(to_int_matrix(g), "E8");
}

IntegralLattice power(const IntegralLattice& l, int k, const std::string& name) {
    IntegralLattice out;
    for (int i = 0; i < k; ++i) out = direct_sum(out, l);
    return IntegralLattice(out.gram(), name);
}

}  // namespace

IntegralLattice lattice_by_name(const std::string& name) {
    static const std::regex scaled_u(R"(U\((-?[0-9]+)\))");
    std::smatch match;
    if (name == "U") return hyperbolic_plane();
    if (std::regex_match(name, match, scaled_u)) {
        return IntegralLattice(scale(hyperbolic_plane(), std::stol(match[1].str())).gram(), name);
    }
    if (name == "A2") return a2();
    if (name == "E8") return e8();
    if (name == "E8^2") return power(e8(), 2, name);
    if (name == "U+E8") return IntegralLattice(direct_sum(hyperbolic_plane(), e8()).gram(), name);
    if (name == "U+E8^2") {
        return IntegralLattice(direct_sum(hyperbolic_plane(), power(e8(), 2, "E8^2")).gram(), name);
    }
    if (name == "U(3)+A2^3") {
        return IntegralLattice(direct_sum(scale(hyperbolic_plane(), 3), power(a2(), 3, "A2^3")).gram(), name);
    }
    if (name == "K3") {
        return IntegralLattice(direct_sum(power(hyperbolic_plane(), 3, "U^3"), power(e8(), 2, "E8^2")).gram(),
                               name);
    }
    throw std::invalid_argument("unknown lattice name '" + name + "'");
}

std::vector<std::string> registry_names() {
    return {"U", "U(3)", "A2", "E8", "E8^2", "U+E8", "U+E8^2", "U(3)+A2^3", "K3"};
}

nlohmann::json to_json(const IntegralLattice& l) {
    nlohmann::json gram = nlohmann::json::array();
    for (const auto& row : l.gram()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) {
            if (x.fits_slong_p()) r.push_back(x.get_si());
            else r.push_back(x.get_str());
        }
        gram.push_back(r);
    }
    nlohmann::json j{{"gram", gram}};
    if (l.name()) j["name"] = *l.name();
    return j;
}

IntegralLattice lattice_from_json(const nlohmann::json& j) {
    IntMatrix g;
    for (const auto& row : j.at("gram")) {
        std::vector<Integer> r;
        for (const auto& x : row) {
            if (x.is_number_integer()) r.emplace_back(x.get<long>());
            else if (x.is_string()) r.emplace_back(x.get<std::string>());
            else throw std::invalid_argument("Gram entries must be integers");
        }
        g.push_back(std::move(r));
    }
    std::optional<std::string> name;
    if (j.contains("name") && !j.at("name").is_null()) name = j.at("name").get<std::string>();
    return IntegralLattice(std::move(g), name);
}

}  // namespace k3fix
