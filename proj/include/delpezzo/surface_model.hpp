#pragma once

/**
 * @file surface_model.hpp
 * @brief Class lattices of the rational surface models and divisor classes on them.
 *
 * A SurfaceModel is an immutable, cheaply copyable handle. The four base
 * families carry their effective and nef cone generators; blowup chains and
 * explicit lattices carry only the intersection form and canonical class.
 *
 * Basis conventions (part of the JSON format):
 *   plane           (H)           H^2 = 1,   K = -3H
 *   quadric         (F1, F2)      F1.F2 = 1, K = (-2, -2)
 *   hirzebruch(m)   (C, F)        C^2 = -m,  C.F = 1, F^2 = 0, K = (-2, -(m+2))
 *   weighted(m)     (F)           F^2 = 1/m, K = -(m+2)F
 *   blowup chain    base, E1..Ek  Ei^2 = -d_i, K = K_base + sum Ei
 */

#include "delpezzo/rational.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace delpezzo {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Operands live on different models.
struct ModelMismatch : LatticeError {
    using LatticeError::LatticeError;
};
/// The operation is not defined for this kind of model (e.g. cones of a blowup).
struct UnsupportedModel : LatticeError {
    using LatticeError::LatticeError;
};
struct NotIntegral : LatticeError {
    using LatticeError::LatticeError;
};
struct NotCartier : LatticeError {
    using LatticeError::LatticeError;
};

enum class ModelKind { ProjectivePlane, Quadric, Hirzebruch, WeightedPlane, BlowupChain, Lattice };

using Coeffs = std::vector<Rational>;

class DivisorClass;

class SurfaceModel {
public:
    static SurfaceModel projective_plane() {
        Impl impl;
        impl.kind = ModelKind::ProjectivePlane;
        impl.labels = {"H"};
        impl.form = {Rational(1)};
        impl.canonical = {Rational(-3)};
        impl.effective = {{Rational(1)}};
        impl.nef = {{Rational(1)}};
        return SurfaceModel(std::move(impl));
    }

    static SurfaceModel quadric() {
        Impl impl;
        impl.kind = ModelKind::Quadric;
        impl.labels = {"F1", "F2"};
        impl.form = {Rational(0), Rational(1), Rational(1), Rational(0)};
        impl.canonical = {Rational(-2), Rational(-2)};
        impl.effective = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        impl.nef = impl.effective;
        return SurfaceModel(std::move(impl));
    }

    /// P(O + O(m)) over the line; m = 0 is the quadric in a different basis.
    static SurfaceModel hirzebruch(int m) {
        if (m < 0) throw std::invalid_argument("hirzebruch surface needs m >= 0, got " + std::to_string(m));
        Impl impl;
        impl.kind = ModelKind::Hirzebruch;
        impl.m = m;
        impl.labels = {"C", "F"};
        impl.form = {Rational(-m), Rational(1), Rational(1), Rational(0)};
        impl.canonical = {Rational(-2), Rational(-(m + 2))};
        impl.effective = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        impl.nef = {{Rational(0), Rational(1)}, {Rational(1), Rational(m)}};
        return SurfaceModel(std::move(impl));
    }

    /// P(1,1,m); the class group is generated by F with F^2 = 1/m.
    static SurfaceModel weighted_plane(int m) {
        if (m < 1) throw std::invalid_argument("weighted plane needs m >= 1, got " + std::to_string(m));
        Impl impl;
        impl.kind = ModelKind::WeightedPlane;
        impl.m = m;
        impl.labels = {"F"};
        impl.form = {Rational(BigInt(1), BigInt(m))};
        impl.canonical = {Rational(-(m + 2))};
        impl.effective = {{Rational(1)}};
        impl.nef = {{Rational(1)}};
        return SurfaceModel(std::move(impl));
    }

    /// Successive blowups of `base` at centers of the given residue degrees.
    /// A chain over a chain is flattened.
    static SurfaceModel blowup_chain(const SurfaceModel& base, std::vector<int> centers) {
        if (base.kind() == ModelKind::BlowupChain) {
            std::vector<int> all = base.centers();
            all.insert(all.end(), centers.begin(), centers.end());
            return blowup_chain(base.base(), std::move(all));
        }
        for (int d : centers)
            if (d < 1) throw std::invalid_argument("blowup center degree must be >= 1, got " + std::to_string(d));
        if (centers.empty()) throw std::invalid_argument("blowup chain needs at least one center");

        const std::size_t r0 = base.rank();
        const std::size_t r = r0 + centers.size();
        Impl impl;
        impl.kind = ModelKind::BlowupChain;
        impl.base = std::make_shared<const SurfaceModel>(base);
        impl.centers = centers;
        impl.labels = base.labels();
        impl.form.assign(r * r, Rational(0));
        for (std::size_t i = 0; i < r0; ++i)
            for (std::size_t j = 0; j < r0; ++j) impl.form[i * r + j] = base.form(i, j);
        impl.canonical = base.canonical_coeffs();
        for (std::size_t k = 0; k < centers.size(); ++k) {
            impl.labels.push_back("E" + std::to_string(k + 1));
            impl.form[(r0 + k) * r + (r0 + k)] = Rational(-centers[k]);
            impl.canonical.emplace_back(1);
        }
        return SurfaceModel(std::move(impl));
    }

    /// An explicit lattice with no cone data, e.g. the hyperplane class of a
    /// complete intersection.
    static SurfaceModel lattice(std::vector<std::string> labels, std::vector<Coeffs> form, Coeffs canonical) {
        const std::size_t r = labels.size();
        if (r == 0) throw std::invalid_argument("lattice model needs rank >= 1");
        if (form.size() != r || canonical.size() != r)
            throw std::invalid_argument("lattice form/canonical size does not match the number of labels");
        Impl impl;
        impl.kind = ModelKind::Lattice;
        impl.labels = std::move(labels);
        impl.form.reserve(r * r);
        for (const auto& row : form) {
            if (row.size() != r) throw std::invalid_argument("lattice form is not square");
            impl.form.insert(impl.form.end(), row.begin(), row.end());
        }
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (impl.form[i * r + j] != impl.form[j * r + i])
                    throw std::invalid_argument("lattice form is not symmetric");
        for (const auto& l : impl.labels)
            if (l.empty() || l == "K") throw std::invalid_argument("invalid lattice basis label '" + l + "'");
        impl.canonical = std::move(canonical);
        return SurfaceModel(std::move(impl));
    }

    ModelKind kind() const { return impl_->kind; }

    bool is_base_model() const {
        auto k = kind();
        return k == ModelKind::ProjectivePlane || k == ModelKind::Quadric || k == ModelKind::Hirzebruch ||
               k == ModelKind::WeightedPlane;
    }

    /// The parameter m of a Hirzebruch or weighted-plane model.
    int m() const {
        if (kind() != ModelKind::Hirzebruch && kind() != ModelKind::WeightedPlane)
            throw UnsupportedModel("model " + name() + " has no parameter m");
        return impl_->m;
    }

    const SurfaceModel& base() const {
        if (kind() != ModelKind::BlowupChain) throw UnsupportedModel("model " + name() + " is not a blowup chain");
        return *impl_->base;
    }
    const std::vector<int>& centers() const {
        if (kind() != ModelKind::BlowupChain) throw UnsupportedModel("model " + name() + " is not a blowup chain");
        return impl_->centers;
    }

    std::size_t rank() const { return impl_->labels.size(); }
    const std::vector<std::string>& labels() const { return impl_->labels; }
    const Rational& form(std::size_t i, std::size_t j) const { return impl_->form[i * rank() + j]; }
    const Coeffs& canonical_coeffs() const { return impl_->canonical; }
    const std::vector<Coeffs>& effective_coeffs() const { return impl_->effective; }
    const std::vector<Coeffs>& nef_coeffs() const { return impl_->nef; }

    // Defined after DivisorClass.
    DivisorClass canonical() const;
    DivisorClass basis(std::size_t i) const;
    DivisorClass zero() const;
    std::vector<DivisorClass> effective_generators() const;
    std::vector<DivisorClass> nef_generators() const;

    /// Index of a basis label, or throws.
    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < rank(); ++i)
            if (labels()[i] == label) return i;
        throw std::invalid_argument("model " + name() + " has no basis element '" + label + "'");
    }

    /// Short human-readable name: "P^2", "P^1 x P^1", "P_{P^1}(O+O(m))", "P(1,1,m)".
    std::string name() const {
        switch (kind()) {
            case ModelKind::ProjectivePlane: return "P^2";
            case ModelKind::Quadric: return "P^1 x P^1";
            case ModelKind::Hirzebruch: return "P_{P^1}(O+O(" + std::to_string(impl_->m) + "))";
            case ModelKind::WeightedPlane: return "P(1,1," + std::to_string(impl_->m) + ")";
            case ModelKind::BlowupChain: {
                std::string s = "Bl[";
                for (std::size_t i = 0; i < impl_->centers.size(); ++i)
                    s += (i ? "," : "") + std::to_string(impl_->centers[i]);
                return s + "](" + impl_->base->name() + ")";
            }
            case ModelKind::Lattice: return "lattice(rank " + std::to_string(rank()) + ")";
        }
        return "?";
    }

    friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
        if (a.impl_ == b.impl_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
            case ModelKind::ProjectivePlane:
            case ModelKind::Quadric: return true;
            case ModelKind::Hirzebruch:
            case ModelKind::WeightedPlane: return a.impl_->m == b.impl_->m;
            case ModelKind::BlowupChain: return a.impl_->centers == b.impl_->centers && *a.impl_->base == *b.impl_->base;
            case ModelKind::Lattice:
                return a.impl_->labels == b.impl_->labels && a.impl_->form == b.impl_->form &&
                       a.impl_->canonical == b.impl_->canonical;
        }
        return false;
    }

private:
    struct Impl {
        ModelKind kind;
        int m = 0;
        std::shared_ptr<const SurfaceModel> base;
        std::vector<int> centers;
        std::vector<std::string> labels;
        Coeffs form;  // row-major rank x rank
        Coeffs canonical;
        std::vector<Coeffs> effective;
        std::vector<Coeffs> nef;
    };

    explicit SurfaceModel(Impl impl) : impl_(std::make_shared<const Impl>(std::move(impl))) {}

    std::shared_ptr<const Impl> impl_;
};

/// A class in the lattice of a model, as a coefficient vector over its basis.
class DivisorClass {
public:
    DivisorClass(SurfaceModel model, Coeffs coeffs) : model_(std::move(model)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != model_.rank())
            throw std::invalid_argument("class has " + std::to_string(coeffs_.size()) + " coefficients but model " +
                                        model_.name() + " has rank " + std::to_string(model_.rank()));
    }

    /// Convenience for integer coefficients.
    static DivisorClass of(const SurfaceModel& model, std::initializer_list<int> coeffs) {
        Coeffs c;
        for (int v : coeffs) c.emplace_back(v);
        return DivisorClass(model, std::move(c));
    }

    const SurfaceModel& model() const { return model_; }
    const Coeffs& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t rank() const { return coeffs_.size(); }

    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (!c.is_integer()) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    DivisorClass& operator+=(const DivisorClass& o) {
        require_same_model(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o) {
        require_same_model(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    DivisorClass& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
    DivisorClass operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coeffs_ == b.coeffs_ && a.model_ == b.model_;
    }

    void require_same_model(const DivisorClass& o) const {
        if (!(model_ == o.model_))
            throw ModelMismatch("classes live on different models: " + model_.name() + " vs " + o.model_.name());
    }

private:
    SurfaceModel model_;
    Coeffs coeffs_;
};

inline DivisorClass SurfaceModel::canonical() const { return DivisorClass(*this, canonical_coeffs()); }

inline DivisorClass SurfaceModel::basis(std::size_t i) const {
    if (i >= rank()) throw std::out_of_range("basis index out of range");
    Coeffs c(rank(), Rational(0));
    c[i] = Rational(1);
    return DivisorClass(*this, std::move(c));
}

inline DivisorClass SurfaceModel::zero() const { return DivisorClass(*this, Coeffs(rank(), Rational(0))); }

inline std::vector<DivisorClass> SurfaceModel::effective_generators() const {
    std::vector<DivisorClass> out;
    for (const auto& c : effective_coeffs()) out.emplace_back(*this, c);
    return out;
}

inline std::vector<DivisorClass> SurfaceModel::nef_generators() const {
    std::vector<DivisorClass> out;
    for (const auto& c : nef_coeffs()) out.emplace_back(*this, c);
    return out;
}

}  // namespace delpezzo
