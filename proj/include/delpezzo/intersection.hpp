#pragma once

/**
 * @file intersection.hpp
 * @brief Intersection numbers, cone tests, Cartier and Riemann-Roch on surface models,
 *        plus the minimal resolution of P(1,1,m) and point blowups.
 */

#include "delpezzo/surface_model.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

inline Rational intersect(const DivisorClass& a, const DivisorClass& b) {
    a.require_same_model(b);
    const auto& model = a.model();
    Rational sum;
    for (std::size_t i = 0; i < model.rank(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < model.rank(); ++j) {
            const auto& f = model.form(i, j);
            if (f.is_zero() || b[j].is_zero()) continue;
            sum += a[i] * f * b[j];
        }
    }
    return sum;
}

inline Rational self_intersection(const DivisorClass& d) { return intersect(d, d); }

inline Rational canonical_square(const SurfaceModel& model) { return self_intersection(model.canonical()); }

namespace detail {

inline void require_cones(const DivisorClass& d, const char* what) {
    if (!d.model().is_base_model())
        throw UnsupportedModel(std::string(what) + " is not available on " + d.model().name() +
                               " (no cone data for this model)");
}

inline void require_integral(const DivisorClass& d, const char* what) {
    if (!d.is_integral()) throw NotIntegral(std::string(what) + " needs an integral class");
}

/// Coordinates of `target` in the basis `gens` (square, invertible), by exact
/// Gaussian elimination. Returns nullopt when the generators are dependent.
inline std::optional<Coeffs> solve_in_basis(const std::vector<Coeffs>& gens, const Coeffs& target) {
    const std::size_t n = target.size();
    if (gens.size() != n) return std::nullopt;
    // Columns are generators: sum_j x_j gens[j][i] = target[i].
    std::vector<Coeffs> a(n, Coeffs(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = gens[j][i];
        a[i][n] = target[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k <= n; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    Coeffs x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace detail

/// Membership in the effective cone of a base model.
inline bool is_effective(const DivisorClass& d) {
    detail::require_cones(d, "is_effective");
    detail::require_integral(d, "is_effective");
    auto coords = detail::solve_in_basis(d.model().effective_coeffs(), d.coeffs());
    if (!coords) throw LatticeError("effective generators of " + d.model().name() + " are degenerate");
    for (const auto& c : *coords)
        if (c.sign() < 0) return false;
    return true;
}

/// d.g >= 0 for every effective generator g.
inline bool is_nef(const DivisorClass& d) {
    detail::require_cones(d, "is_nef");
    for (const auto& g : d.model().effective_generators())
        if (intersect(d, g).sign() < 0) return false;
    return true;
}

/// Interior of the nef cone: strictly positive coordinates on the nef generators.
inline bool is_ample(const DivisorClass& d) {
    detail::require_cones(d, "is_ample");
    auto coords = detail::solve_in_basis(d.model().nef_coeffs(), d.coeffs());
    if (!coords) throw LatticeError("nef generators of " + d.model().name() + " are degenerate");
    for (const auto& c : *coords)
        if (c.sign() <= 0) return false;
    return true;
}

/// Nakai-Moishezon on the generator curves: d^2 > 0 and d.g > 0 for every effective generator.
inline bool nakai_ample(const DivisorClass& d) {
    detail::require_cones(d, "nakai_ample");
    if (self_intersection(d).sign() <= 0) return false;
    for (const auto& g : d.model().effective_generators())
        if (intersect(d, g).sign() <= 0) return false;
    return true;
}

/// On P(1,1,m) the class dF is Cartier iff m | d; elsewhere every integral class is.
inline bool is_cartier(const DivisorClass& d) {
    detail::require_integral(d, "is_cartier");
    if (d.model().kind() == ModelKind::WeightedPlane) {
        BigInt m = d.model().m();
        return d[0].num() % m == 0;
    }
    return true;
}

/// chi(O(D)) = 1 + D.(D - K)/2 on the four rational base models.
inline Rational riemann_roch_chi(const DivisorClass& d) {
    if (!d.model().is_base_model())
        throw UnsupportedModel("riemann_roch_chi is only available on the four base models, not " + d.model().name());
    if (!d.is_integral() || !is_cartier(d)) throw NotCartier("riemann_roch_chi needs a Cartier class");
    return Rational(1) + intersect(d, d - d.model().canonical()) / Rational(2);
}

/// Coefficient a in K_W = mu^* K_Z + a C for the minimal resolution of P(1,1,m).
inline Rational discrepancy(int m) {
    if (m < 1) throw std::invalid_argument("discrepancy needs m >= 1");
    return Rational(BigInt(2 - m), BigInt(m));
}

/// Pullback of dF on P(1,1,m) to its minimal resolution F_m: d F_W + (d/m) C.
inline DivisorClass resolution_pullback(int m, const DivisorClass& d) {
    if (d.model().kind() != ModelKind::WeightedPlane || d.model().m() != m)
        throw ModelMismatch("resolution_pullback expects a class on P(1,1," + std::to_string(m) + "), got " +
                            d.model().name());
    const auto w = SurfaceModel::hirzebruch(m);
    return DivisorClass(w, {d[0] / Rational(m), d[0]});
}

/// Blow up one more point of residue degree `degree`.
inline SurfaceModel blowup(const SurfaceModel& base, int degree) {
    return SurfaceModel::blowup_chain(base, {degree});
}

/// Total transform of `d` on the blowup `target`. The model of `d` must be the
/// base of `target` or an earlier stage of the same chain.
inline DivisorClass total_transform(const SurfaceModel& target, const DivisorClass& d) {
    if (target.kind() != ModelKind::BlowupChain)
        throw UnsupportedModel("total_transform target must be a blowup chain, got " + target.name());
    const auto& src = d.model();
    bool compatible = false;
    if (src.kind() == ModelKind::BlowupChain) {
        const auto& sc = src.centers();
        const auto& tc = target.centers();
        compatible = src.base() == target.base() && sc.size() <= tc.size() &&
                     std::equal(sc.begin(), sc.end(), tc.begin());
    } else {
        compatible = src == target.base();
    }
    if (!compatible)
        throw ModelMismatch("class on " + src.name() + " cannot be pulled back to " + target.name());
    Coeffs c = d.coeffs();
    c.resize(target.rank(), Rational(0));
    return DivisorClass(target, std::move(c));
}

/// Proper transform of a curve passing through the last center with the given multiplicity.
inline DivisorClass proper_transform(const SurfaceModel& target, const DivisorClass& d, int multiplicity) {
    if (multiplicity < 0) throw std::invalid_argument("multiplicity must be >= 0");
    auto t = total_transform(target, d);
    return t - Rational(multiplicity) * target.basis(target.rank() - 1);
}

}  // namespace delpezzo
