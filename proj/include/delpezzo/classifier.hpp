#pragma once

/**
 * @file classifier.hpp
 * @brief Conductor-divisor enumeration on the normalized base change Z, the
 *        K_X^2 classification tables for p = 2, 3, and the volume bounds.
 *
 * Pipeline for classify_rows(p):
 *   restriction cases D with K_Z + D ~ g^*K_X
 *     -> keep D divisible by p-1, E = D/(p-1)
 *     -> m-filters on P(1,1,m) and F_m
 *     -> Cartier filter on K_Z + (p-1)E
 *     -> quadric fold (O(0,1) is represented by O(1,0))
 *     -> K_X^2 = p^eps (g^*K_X)^2 in normal form coeff * p^(eps+offset)
 */

#include "delpezzo/intersection.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delpezzo {

enum class Family { Plane, Quadric, WeightedPlane, Hirzebruch };

inline constexpr Family kAllFamilies[] = {Family::Plane, Family::WeightedPlane, Family::Quadric, Family::Hirzebruch};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Plane: return "plane";
        case Family::Quadric: return "quadric";
        case Family::WeightedPlane: return "weighted_plane";
        case Family::Hirzebruch: return "hirzebruch";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (Family f : kAllFamilies)
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family '" + std::string(s) +
                                "' (expected plane, quadric, weighted_plane or hirzebruch)");
}

/// Models of a family in enumeration order. P(1,1,m) starts at m = 2 and F_m at m = 1,
/// since P(1,1,1) is the plane and F_0 is the quadric.
inline std::vector<SurfaceModel> family_models(Family f, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    std::vector<SurfaceModel> out;
    switch (f) {
        case Family::Plane: out.push_back(SurfaceModel::projective_plane()); break;
        case Family::Quadric: out.push_back(SurfaceModel::quadric()); break;
        case Family::WeightedPlane:
            for (int m = 2; m <= m_max; ++m) out.push_back(SurfaceModel::weighted_plane(m));
            break;
        case Family::Hirzebruch:
            for (int m = 1; m <= m_max; ++m) out.push_back(SurfaceModel::hirzebruch(m));
            break;
    }
    return out;
}

inline Family family_of(const SurfaceModel& model) {
    switch (model.kind()) {
        case ModelKind::ProjectivePlane: return Family::Plane;
        case ModelKind::Quadric: return Family::Quadric;
        case ModelKind::WeightedPlane: return Family::WeightedPlane;
        case ModelKind::Hirzebruch: return Family::Hirzebruch;
        default: throw UnsupportedModel("model " + model.name() + " is not a base model");
    }
}

/// A divisor D on Z with K_Z + D ~ g^*K_X.
struct RestrictionCase {
    SurfaceModel model;
    DivisorClass d;
    Rational gk_square;

    friend bool operator==(const RestrictionCase& a, const RestrictionCase& b) {
        return a.d == b.d && a.gk_square == b.gk_square;
    }
};

inline RestrictionCase make_case(const DivisorClass& d) {
    const auto& model = d.model();
    return {model, d, self_intersection(model.canonical() + d)};
}

/// Closed-form list of restriction cases.
inline std::vector<RestrictionCase> restriction_cases(Family f, int m_max) {
    std::vector<RestrictionCase> out;
    for (const auto& z : family_models(f, m_max)) {
        switch (f) {
            case Family::Plane:
                out.push_back(make_case(DivisorClass::of(z, {1})));
                out.push_back(make_case(DivisorClass::of(z, {2})));
                break;
            case Family::Quadric:
                out.push_back(make_case(DivisorClass::of(z, {1, 1})));
                out.push_back(make_case(DivisorClass::of(z, {1, 0})));
                out.push_back(make_case(DivisorClass::of(z, {0, 1})));
                break;
            case Family::WeightedPlane: out.push_back(make_case(DivisorClass::of(z, {2}))); break;
            case Family::Hirzebruch:
                out.push_back(make_case(DivisorClass::of(z, {1, 0})));
                out.push_back(make_case(DivisorClass::of(z, {1, 1})));
                break;
        }
    }
    return out;
}

/// Brute-force rederivation of restriction_cases over coefficients in [0, box].
inline std::vector<RestrictionCase> restriction_cases_oracle(Family f, int m_max, int box) {
    if (box < 3) throw std::invalid_argument("oracle box must be >= 3");
    std::vector<RestrictionCase> out;
    for (const auto& z : family_models(f, m_max)) {
        const auto k = z.canonical();
        auto consider = [&](const DivisorClass& d) {
            if (d.is_zero() || !is_effective(d)) return;
            if (!is_ample(-(k + d))) return;
            if (z.kind() == ModelKind::WeightedPlane) {
                // K_W + D_W + cC ~ mu^*(K_Z + D) with c a nonnegative integer.
                const int m = z.m();
                Rational c = (d[0] + Rational(m - 2)) / Rational(m);
                if (!c.is_integer() || c.sign() < 0) return;
            }
            out.push_back(make_case(d));
        };
        if (z.rank() == 1) {
            for (int a = 0; a <= box; ++a) consider(DivisorClass::of(z, {a}));
        } else {
            for (int a = 0; a <= box; ++a)
                for (int b = 0; b <= box; ++b) consider(DivisorClass::of(z, {a, b}));
        }
    }
    return out;
}

/// Order-insensitive comparison of two case lists.
inline bool same_case_set(const std::vector<RestrictionCase>& a, const std::vector<RestrictionCase>& b) {
    auto contained = [](const auto& xs, const auto& ys) {
        return std::all_of(xs.begin(), xs.end(),
                           [&](const auto& x) { return std::find(ys.begin(), ys.end(), x) != ys.end(); });
    };
    return contained(a, b) && contained(b, a);
}

/// K_X^2 written as coeff * p^(eps + offset) with p not dividing coeff.
struct KxSquare {
    int p = 2;
    BigInt coeff = 1;
    int offset = 0;

    BigInt at(int epsilon) const { return coeff * ipow(BigInt(p), epsilon + offset); }

    /// "5·2^ε", "3·2^(ε+1)", "2^(ε+2)", "3^ε".
    std::string str() const {
        std::string power = std::to_string(p) + (offset == 0 ? "^ε" : "^(ε+" + std::to_string(offset) + ")");
        if (coeff == 1) return power;
        return coeff.str() + "·" + power;
    }

    friend bool operator==(const KxSquare&, const KxSquare&) = default;
};

/// p-adic normal form of a positive integer (g^*K_X)^2.
inline KxSquare kx_normal_form(int p, const Rational& gk_square) {
    if (!gk_square.is_integer() || gk_square.sign() <= 0)
        throw std::logic_error("(g^*K_X)^2 = " + gk_square.str() + " is not a positive integer");
    KxSquare out{p, gk_square.num(), 0};
    while (out.coeff % p == 0) {
        out.coeff /= p;
        ++out.offset;
    }
    return out;
}

/// One row of the classification table: (Z, E, (g^*K_X)^2, K_X^2).
struct ClassificationRow {
    int p;
    SurfaceModel model;
    DivisorClass e;
    Rational gk_square;
    KxSquare kx_square;
};

struct ClassifyOptions {
    int m_max = 8;
    bool fold = true;
};

/// Multiple q with qK_Z Cartier for a regular del Pezzo surface in characteristic p.
inline int cartier_index_bound(int p) {
    if (p == 2) return 4;
    if (p == 3) return 3;
    throw std::invalid_argument("Cartier index bound is only known for p = 2, 3");
}

/// The m-filters as stated for the classification (data, not derivation).
inline bool stated_m_filter(int p, const SurfaceModel& z) {
    if (p == 2) {
        if (z.kind() == ModelKind::WeightedPlane) return z.m() == 2 || z.m() == 4;
        if (z.kind() == ModelKind::Hirzebruch) return z.m() == 1 || z.m() == 2 || z.m() == 4;
        return true;
    }
    if (p == 3) {
        if (z.kind() == ModelKind::WeightedPlane) return z.m() == 3;
        return true;
    }
    throw std::invalid_argument("classification needs p = 2 or p = 3");
}

/// The m-filter recomputed from the lattice: qK_Z must be Cartier.
inline bool raw_m_filter(int p, const SurfaceModel& z) {
    const int q = cartier_index_bound(p);
    return is_cartier(Rational(q) * z.canonical());
}

namespace detail {

inline std::optional<DivisorClass> divide_in_lattice(const DivisorClass& d, int n) {
    DivisorClass e = Rational(BigInt(1), BigInt(n)) * d;
    if (!e.is_integral()) return std::nullopt;
    return e;
}

inline bool coeffs_less(const DivisorClass& a, const DivisorClass& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace detail

inline void require_classifiable_p(int p) {
    if (p != 2 && p != 3)
        throw std::invalid_argument("geometrically non-normal regular del Pezzo surfaces only occur for p = 2 or 3, got p = " +
                                    std::to_string(p));
}

inline std::vector<ClassificationRow> classify_rows(int p, ClassifyOptions options = {}) {
    require_classifiable_p(p);
    std::vector<ClassificationRow> rows;
    for (Family f : kAllFamilies) {
        for (const auto& z : family_models(f, options.m_max)) {
            std::vector<ClassificationRow> model_rows;
            for (const auto& c : restriction_cases(f, options.m_max)) {
                if (!(c.model == z)) continue;
                auto e = detail::divide_in_lattice(c.d, p - 1);
                if (!e) continue;
                if (!stated_m_filter(p, z)) continue;
                if (!is_cartier(z.canonical() + Rational(p - 1) * *e)) continue;
                if (options.fold && z.kind() == ModelKind::Quadric && (*e)[0].is_zero()) continue;
                model_rows.push_back({p, z, *e, c.gk_square, kx_normal_form(p, c.gk_square)});
            }
            std::sort(model_rows.begin(), model_rows.end(),
                      [](const auto& a, const auto& b) { return detail::coeffs_less(a.e, b.e); });
            rows.insert(rows.end(), model_rows.begin(), model_rows.end());
        }
    }
    return rows;
}

/// Both outcomes of one filter, for `classify --audit`.
struct FilterAudit {
    std::string filter;
    std::string stated_rule;
    std::string raw_rule;
    std::vector<std::string> candidates;
    std::vector<std::string> stated_pass;
    std::vector<std::string> raw_pass;
};

inline std::vector<FilterAudit> audit_filters(int p, int m_max = 8) {
    require_classifiable_p(p);
    const int q = cartier_index_bound(p);
    std::vector<FilterAudit> out;

    auto m_audit = [&](Family f, std::string stated_rule) {
        FilterAudit a;
        a.filter = "m-filter on " + family_name(f);
        a.stated_rule = std::move(stated_rule);
        a.raw_rule = std::to_string(q) + "K_Z Cartier";
        for (const auto& c : restriction_cases(f, m_max)) {
            if (!detail::divide_in_lattice(c.d, p - 1)) continue;
            const std::string m = std::to_string(c.model.m());
            if (std::find(a.candidates.begin(), a.candidates.end(), m) != a.candidates.end()) continue;
            a.candidates.push_back(m);
            if (stated_m_filter(p, c.model)) a.stated_pass.push_back(m);
            if (raw_m_filter(p, c.model)) a.raw_pass.push_back(m);
        }
        out.push_back(std::move(a));
    };

    if (p == 2) {
        m_audit(Family::WeightedPlane, "m divides 4");
        m_audit(Family::Hirzebruch, "m in {1,2,4}");
    } else {
        m_audit(Family::WeightedPlane, "m = 3 (table data)");
    }

    FilterAudit cart;
    cart.filter = "Cartier filter";
    cart.stated_rule = "g^*K_X Cartier";
    cart.raw_rule = "K_Z + (p-1)E Cartier";
    for (Family f : kAllFamilies) {
        for (const auto& c : restriction_cases(f, m_max)) {
            auto e = detail::divide_in_lattice(c.d, p - 1);
            if (!e) continue;
            const std::string tag = c.model.name() + " D=" + [&] {
                std::string s;
                for (std::size_t i = 0; i < c.d.rank(); ++i) s += (i ? "," : "") + c.d[i].str();
                return "(" + s + ")";
            }();
            cart.candidates.push_back(tag);
            bool ok = is_cartier(c.model.canonical() + c.d);
            if (ok) {
                cart.stated_pass.push_back(tag);
                cart.raw_pass.push_back(tag);
            }
        }
    }
    out.push_back(std::move(cart));
    return out;
}

// ---------------------------------------------------------------------------
// Volume bounds and very-ampleness numerics.

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not a prime");
}

/// Upper bound on the Frobenius length of geometric non-normality: 2 for p = 2,
/// 1 for p = 3, 0 for p >= 5 (geometrically canonical).
inline int frobenius_length_bound(int p) {
    require_prime(p);
    if (p == 2) return 2;
    if (p == 3) return 1;
    return 0;
}

/// K_X^2 bound in terms of the thickening exponent.
inline BigInt volume_bound_epsilon(int p, int epsilon) {
    require_prime(p);
    if (epsilon < 0) throw std::invalid_argument("epsilon must be >= 0");
    const BigInt nine = 9;
    if (p == 3) return std::max(nine, ipow(3, epsilon + 1));
    if (p == 2) return std::max(nine, ipow(2, epsilon + 3));
    return nine;
}

/// K_X^2 bound in terms of r = log_p [k : k^p], via epsilon <= ell_F (r - 1).
inline BigInt volume_bound_r(int p, int r) {
    require_prime(p);
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    // A perfect field forces geometric normality.
    if (r == 0) return 9;
    return std::max(BigInt(9), volume_bound_epsilon(p, frobenius_length_bound(p) * (r - 1)));
}

/// The same bound from the field degree [k : k^p] = p^r directly.
inline BigInt volume_bound_r_closed(int p, int r) {
    require_prime(p);
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    const BigInt degree = ipow(p, r);
    if (p == 3) return std::max(BigInt(9), degree);
    if (p == 2) return std::max(BigInt(9), BigInt(2 * degree * degree));
    return 9;
}

/// Parameters feeding the bound formulas: either epsilon or r is set.
struct BoundContext {
    int p;
    std::optional<int> epsilon;
    std::optional<int> r;
    int ell_max;

    static BoundContext with_epsilon(int p, int epsilon) {
        if (epsilon < 0) throw std::invalid_argument("epsilon must be >= 0");
        return {p, epsilon, std::nullopt, frobenius_length_bound(p)};
    }
    static BoundContext with_r(int p, int r) {
        if (r < 0) throw std::invalid_argument("r must be >= 0");
        return {p, std::nullopt, r, frobenius_length_bound(p)};
    }

    BigInt bound() const { return epsilon ? volume_bound_epsilon(p, *epsilon) : volume_bound_r(p, *r); }

    /// The branch formula used for this context.
    std::string formula() const {
        if (p >= 5) return "p >= 5: K_X^2 <= 9";
        if (epsilon) {
            return p == 3 ? "p = 3: K_X^2 <= max{9, 3^(eps+1)}" : "p = 2: K_X^2 <= max{9, 2^(eps+3)}";
        }
        if (*r == 0) return "r = 0 (perfect field): K_X^2 <= 9";
        return p == 3 ? "p = 3: K_X^2 <= max{9, [k:k^3]} = max{9, 3^r}"
                      : "p = 2: K_X^2 <= max{9, 2*[k:k^2]^2} = max{9, 2^(2r+1)}";
    }
};

/// Raised for p >= 5, where every regular del Pezzo surface is geometrically canonical.
struct GeometricallyNormalRegime : std::domain_error {
    using std::domain_error::domain_error;
};

/// q = p^e with e >= ell_F: A^q is globally generated for ample A.
inline int gg_exponent(int p) {
    if (p == 2) return 4;
    if (p == 3) return 3;
    require_prime(p);
    throw GeometricallyNormalRegime("p = " + std::to_string(p) +
                                    ": surfaces are geometrically canonical, no Frobenius exponent needed");
}

/// omega_X ⊗ H^(d+1) ⊗ A with A = -K, H = -qK on a d-fold is -q(d+1) K.
inline int fujita_multiple(int dim, int q) {
    if (dim < 0 || q < 1) throw std::invalid_argument("fujita_multiple needs dim >= 0 and q >= 1");
    return q * (dim + 1);
}

/// -mK_X is very ample for every m >= 12 on every regular del Pezzo surface.
inline constexpr int va_threshold() { return 12; }

}  // namespace delpezzo
