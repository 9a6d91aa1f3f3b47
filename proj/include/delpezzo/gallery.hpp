#pragma once

/**
 * @file gallery.hpp
 * @brief Numeric skeletons of the known regular, geometrically non-normal del Pezzo
 *        surfaces and their verification against the summary tables and the classifier.
 *
 * Recipes are evaluated through the lattice: a complete intersection of degrees
 * d_1..d_c in P^n is the rank-1 lattice with H^2 = prod d_i and K = (sum d_i - n - 1) H;
 * a blowup record blows that lattice up at a point of the given residue degree and
 * tracks the proper transform of a hyperplane section through the center.
 */

#include "delpezzo/classifier.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <type_traits>
#include <string>
#include <variant>
#include <vector>

namespace delpezzo {

/// Lattice of a complete intersection surface with hyperplane class H.
inline SurfaceModel complete_intersection_model(const std::vector<int>& degrees, int ambient_dim) {
    if (degrees.empty()) throw std::invalid_argument("complete intersection needs at least one degree");
    if (ambient_dim - static_cast<int>(degrees.size()) != 2)
        throw std::invalid_argument("complete intersection of " + std::to_string(degrees.size()) + " equations in P^" +
                                    std::to_string(ambient_dim) + " is not a surface");
    BigInt h2 = 1;
    int sum = 0;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("hypersurface degree must be >= 1");
        h2 *= d;
        sum += d;
    }
    return SurfaceModel::lattice({"H"}, {{Rational(h2)}}, {Rational(sum - ambient_dim - 1)});
}

struct AdjunctionResult {
    Rational k2;
    /// -K is ample, i.e. sum d_i < n + 1.
    bool anti_canonical_ample;
};

inline AdjunctionResult complete_intersection_k2(const std::vector<int>& degrees, int ambient_dim) {
    auto model = complete_intersection_model(degrees, ambient_dim);
    return {canonical_square(model), model.canonical_coeffs()[0].sign() < 0};
}

inline AdjunctionResult hypersurface_k2(int degree, int ambient_dim) {
    if (ambient_dim != 3) throw std::invalid_argument("a hypersurface surface lives in P^3");
    return complete_intersection_k2({degree}, ambient_dim);
}

struct HypersurfaceRecipe {
    int degree;
    int ambient_dim;
};
struct CompleteIntersectionRecipe {
    std::vector<int> degrees;
    int ambient_dim;
};
/// Blow up a point of residue degree `center_degree` on the complete intersection
/// `base`, tracking a curve of class `curve` (in H units) through it.
struct BlowupRecipe {
    CompleteIntersectionRecipe base;
    int center_degree;
    int curve;
    int multiplicity;
};
struct LiteralRecipe {
    std::string source;
};

using Recipe = std::variant<HypersurfaceRecipe, CompleteIntersectionRecipe, BlowupRecipe, LiteralRecipe>;

struct ExampleRecord {
    std::string id;
    std::string description;
    int p;
    Rational kx_square;
    int epsilon;
    SurfaceModel z_model;
    Recipe construction;
};

/// The eight records, ordered as in the two summary tables (p = 3 first).
inline std::vector<ExampleRecord> build_gallery() {
    using SM = SurfaceModel;
    std::vector<ExampleRecord> g;
    g.push_back({"fermat-hypersurface-p3", "Fermat cubic s0x0^3+..+s3x3^3 over F(s0..s3)", 3, Rational(3), 1,
                 SM::projective_plane(), HypersurfaceRecipe{3, 3}});
    g.push_back({"maddock-x1", "geometrically integral, not geometrically normal", 2, Rational(1), 0,
                 SM::projective_plane(), LiteralRecipe{"Maddock, main theorem"}});
    g.push_back({"maddock-x2", "not geometrically reduced", 2, Rational(2), 1, SM::projective_plane(),
                 LiteralRecipe{"Maddock"}});
    g.push_back({"fermat-complete-intersection", "two Fermat quadrics in P^4 over F(s0..s4,t0..t4)", 2, Rational(4),
                 2, SM::projective_plane(), CompleteIntersectionRecipe{{2, 2}, 4}});
    g.push_back({"geometric-quadric", "sum s_i x_i^2 = x0x1 + x2x3 = 0 in P^4 over F(s0..s4)", 2, Rational(4), 1,
                 SM::quadric(), CompleteIntersectionRecipe{{2, 2}, 4}});
    g.push_back({"fermat-blowup", "Fermat quadric blown up at the degree-2 point C2 ∩ C3", 2, Rational(6), 1,
                 SM::hirzebruch(1), BlowupRecipe{{{2}, 3}, 2, 1, 1}});
    g.push_back({"cone-blowup", "x^2+sy^2+zw blown up at the degree-2 point (x^2+s, z, w)", 2, Rational(6), 0,
                 SM::hirzebruch(2), BlowupRecipe{{{2}, 3}, 2, 1, 1}});
    g.push_back({"fermat-hypersurface-p2", "Fermat quadric s0x0^2+..+s3x3^2 over F(s0..s3)", 2, Rational(8), 1,
                 SM::projective_plane(), HypersurfaceRecipe{2, 3}});
    return g;
}

/// One row of the summary tables: X | K_X^2 | eps | normalized base change.
struct SummaryRow {
    std::string id;
    int p;
    int k2;
    int epsilon;
    SurfaceModel z_model;
};

/// The summary tables as reference data, kept separate from the constructed records.
inline std::vector<SummaryRow> summary_tables() {
    using SM = SurfaceModel;
    return {
        {"fermat-hypersurface-p3", 3, 3, 1, SM::projective_plane()},
        {"maddock-x1", 2, 1, 0, SM::projective_plane()},
        {"maddock-x2", 2, 2, 1, SM::projective_plane()},
        {"fermat-complete-intersection", 2, 4, 2, SM::projective_plane()},
        {"geometric-quadric", 2, 4, 1, SM::quadric()},
        {"fermat-blowup", 2, 6, 1, SM::hirzebruch(1)},
        {"cone-blowup", 2, 6, 0, SM::hirzebruch(2)},
        {"fermat-hypersurface-p2", 2, 8, 1, SM::projective_plane()},
    };
}

/// Lattice data produced by evaluating a blowup recipe.
struct BlowupEvaluation {
    SurfaceModel base;
    SurfaceModel blown_up;
    Rational base_k2;
    Rational k2;
    Rational curve_square;
    Rational proper_square;
    Rational minus_k_dot_proper;
};

inline BlowupEvaluation evaluate_blowup(const BlowupRecipe& r) {
    auto y = complete_intersection_model(r.base.degrees, r.base.ambient_dim);
    auto x = blowup(y, r.center_degree);
    auto curve = DivisorClass(y, {Rational(r.curve)});
    auto proper = proper_transform(x, curve, r.multiplicity);
    return {y,
            x,
            canonical_square(y),
            canonical_square(x),
            self_intersection(curve),
            self_intersection(proper),
            -intersect(x.canonical(), proper)};
}

/// K_X^2 recomputed from a recipe; nullopt for literal records.
inline std::optional<Rational> recompute_k2(const Recipe& recipe) {
    return std::visit(
        [](const auto& r) -> std::optional<Rational> {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, HypersurfaceRecipe>) {
                return hypersurface_k2(r.degree, r.ambient_dim).k2;
            } else if constexpr (std::is_same_v<T, CompleteIntersectionRecipe>) {
                return complete_intersection_k2(r.degrees, r.ambient_dim).k2;
            } else if constexpr (std::is_same_v<T, BlowupRecipe>) {
                return evaluate_blowup(r).k2;
            } else {
                return std::nullopt;
            }
        },
        recipe);
}

struct GalleryCheck {
    std::string record;
    std::string field;
    bool ok;
    std::string detail;
};

struct GalleryReport {
    std::vector<GalleryCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
    }
    std::vector<GalleryCheck> failures() const {
        std::vector<GalleryCheck> out;
        std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const auto& c) { return !c.ok; });
        return out;
    }
};

/// Rows of classify_rows(p) on the record's model whose K_X^2 at the record's eps equals its K^2.
inline std::vector<ClassificationRow> matching_rows(const ExampleRecord& rec) {
    std::vector<ClassificationRow> out;
    for (const auto& row : classify_rows(rec.p)) {
        if (!(row.model == rec.z_model)) continue;
        if (Rational(row.kx_square.at(rec.epsilon)) == rec.kx_square) out.push_back(row);
    }
    return out;
}

inline GalleryReport verify_gallery(const std::vector<ExampleRecord>& gallery, const std::vector<SummaryRow>& tables) {
    GalleryReport rep;
    auto check = [&](const std::string& rec, const std::string& field, bool ok, std::string detail) {
        rep.checks.push_back({rec, field, ok, std::move(detail)});
    };

    check("*", "record count", gallery.size() == tables.size(),
          std::to_string(gallery.size()) + " records vs " + std::to_string(tables.size()) + " table rows");

    for (const auto& row : tables) {
        auto it = std::find_if(gallery.begin(), gallery.end(), [&](const auto& r) { return r.id == row.id; });
        if (it == gallery.end()) {
            check(row.id, "presence", false, "no record for table row");
            continue;
        }
        const auto& rec = *it;
        check(rec.id, "p", rec.p == row.p, "record " + std::to_string(rec.p) + ", table " + std::to_string(row.p));
        check(rec.id, "K^2", rec.kx_square == Rational(row.k2),
              "record " + rec.kx_square.str() + ", table " + std::to_string(row.k2));
        check(rec.id, "epsilon", rec.epsilon == row.epsilon,
              "record " + std::to_string(rec.epsilon) + ", table " + std::to_string(row.epsilon));
        check(rec.id, "model", rec.z_model == row.z_model,
              "record " + rec.z_model.name() + ", table " + row.z_model.name());
    }

    for (const auto& rec : gallery) {
        check(rec.id, "K^2 positive", rec.kx_square.sign() > 0, rec.kx_square.str());
        check(rec.id, "characteristic", rec.p == 2 || rec.p == 3, std::to_string(rec.p));

        if (auto k2 = recompute_k2(rec.construction)) {
            check(rec.id, "K^2 via lattice", *k2 == rec.kx_square, "lattice " + k2->str() + ", record " +
                                                                        rec.kx_square.str());
        }
        if (const auto* h = std::get_if<HypersurfaceRecipe>(&rec.construction)) {
            check(rec.id, "-K ample", hypersurface_k2(h->degree, h->ambient_dim).anti_canonical_ample,
                  "degree " + std::to_string(h->degree));
        }
        if (const auto* ci = std::get_if<CompleteIntersectionRecipe>(&rec.construction)) {
            check(rec.id, "-K ample", complete_intersection_k2(ci->degrees, ci->ambient_dim).anti_canonical_ample,
                  "complete intersection");
        }
        if (const auto* b = std::get_if<BlowupRecipe>(&rec.construction)) {
            auto ev = evaluate_blowup(*b);
            check(rec.id, "K^2 drop", ev.base_k2 - ev.k2 == Rational(b->center_degree),
                  ev.base_k2.str() + " -> " + ev.k2.str());
            check(rec.id, "proper transform square", ev.proper_square.is_zero(),
                  "C^2 = " + ev.curve_square.str() + ", C'^2 = " + ev.proper_square.str());
            check(rec.id, "-K.C' > 0", ev.minus_k_dot_proper.sign() > 0, "-K.C' = " + ev.minus_k_dot_proper.str());
        }

        auto matches = matching_rows(rec);
        std::string detail = std::to_string(matches.size()) + " matching row(s)";
        for (const auto& m : matches) detail += "; " + m.model.name() + " " + m.kx_square.str();
        check(rec.id, "classification", matches.size() == 1, detail);
    }
    return rep;
}

inline GalleryReport verify_gallery() { return verify_gallery(build_gallery(), summary_tables()); }

}  // namespace delpezzo
