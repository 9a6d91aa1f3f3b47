#pragma once

// JSON form of models and classes, shared by the CLI and the golden tests.
//
//   {"kind": "plane"}                     {"kind": "quadric"}
//   {"kind": "hirzebruch", "m": 2}        {"kind": "weighted_plane", "m": 3}
//   {"kind": "blowup", "base": {...}, "centers": [2]}
//   {"kind": "lattice", "labels": ["H"], "form": [["2"]], "canonical": ["-2"]}
//
//   class: {"model": {...}, "coeffs": ["-2", "-4"]}
//
// Rationals are strings "n" or "n/d"; plain JSON integers are accepted on input.

#include "delpezzo/surface_model.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace delpezzo {

using Json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw FormatError(std::string("bad rational: ") + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw FormatError("rational must be a string \"n\" or \"n/d\" or an integer, got " + j.dump());
}

inline Json coeffs_to_json(const Coeffs& c) {
    Json arr = Json::array();
    for (const auto& x : c) arr.push_back(to_json(x));
    return arr;
}

inline Coeffs coeffs_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("coefficients must be an array, got " + j.dump());
    Coeffs c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return c;
}

inline Json to_json(const SurfaceModel& model) {
    switch (model.kind()) {
        case ModelKind::ProjectivePlane: return Json{{"kind", "plane"}};
        case ModelKind::Quadric: return Json{{"kind", "quadric"}};
        case ModelKind::Hirzebruch: return Json{{"kind", "hirzebruch"}, {"m", model.m()}};
        case ModelKind::WeightedPlane: return Json{{"kind", "weighted_plane"}, {"m", model.m()}};
        case ModelKind::BlowupChain:
            return Json{{"kind", "blowup"}, {"base", to_json(model.base())}, {"centers", model.centers()}};
        case ModelKind::Lattice: {
            Json form = Json::array();
            for (std::size_t i = 0; i < model.rank(); ++i) {
                Json row = Json::array();
                for (std::size_t k = 0; k < model.rank(); ++k) row.push_back(to_json(model.form(i, k)));
                form.push_back(row);
            }
            return Json{{"kind", "lattice"},
                        {"labels", model.labels()},
                        {"form", form},
                        {"canonical", coeffs_to_json(model.canonical_coeffs())}};
        }
    }
    throw std::logic_error("unreachable model kind");
}

inline SurfaceModel model_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw FormatError("model must be an object with a string \"kind\", got " + j.dump());
    const auto kind = j["kind"].get<std::string>();
    auto int_field = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw FormatError(std::string("model kind '") + kind + "' needs integer field \"" + key + "\"");
        return j[key].get<int>();
    };
    try {
        if (kind == "plane") return SurfaceModel::projective_plane();
        if (kind == "quadric") return SurfaceModel::quadric();
        if (kind == "hirzebruch") return SurfaceModel::hirzebruch(int_field("m"));
        if (kind == "weighted_plane") return SurfaceModel::weighted_plane(int_field("m"));
        if (kind == "blowup") {
            if (!j.contains("base") || !j.contains("centers") || !j["centers"].is_array())
                throw FormatError("blowup model needs \"base\" and an array \"centers\"");
            std::vector<int> centers;
            for (const auto& c : j["centers"]) {
                if (!c.is_number_integer()) throw FormatError("blowup centers must be integers");
                centers.push_back(c.get<int>());
            }
            return SurfaceModel::blowup_chain(model_from_json(j["base"]), std::move(centers));
        }
        if (kind == "lattice") {
            if (!j.contains("labels") || !j.contains("form") || !j.contains("canonical"))
                throw FormatError("lattice model needs \"labels\", \"form\" and \"canonical\"");
            std::vector<std::string> labels;
            for (const auto& l : j["labels"]) {
                if (!l.is_string()) throw FormatError("lattice labels must be strings");
                labels.push_back(l.get<std::string>());
            }
            std::vector<Coeffs> form;
            if (!j["form"].is_array()) throw FormatError("lattice form must be an array of rows");
            for (const auto& row : j["form"]) form.push_back(coeffs_from_json(row));
            return SurfaceModel::lattice(std::move(labels), std::move(form), coeffs_from_json(j["canonical"]));
        }
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    throw FormatError("unknown model kind '" + kind + "'");
}

inline Json to_json(const DivisorClass& d) {
    return Json{{"model", to_json(d.model())}, {"coeffs", coeffs_to_json(d.coeffs())}};
}

/// Parses a class; `fallback` supplies the model when the JSON omits it.
inline DivisorClass class_from_json(const Json& j, const SurfaceModel* fallback = nullptr) {
    if (j.is_array()) {
        if (!fallback) throw FormatError("bare coefficient array needs a model");
        try {
            return DivisorClass(*fallback, coeffs_from_json(j));
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    if (!j.is_object() || !j.contains("coeffs"))
        throw FormatError("class must be an object with \"coeffs\", got " + j.dump());
    if (!j.contains("model") && !fallback) throw FormatError("class needs a \"model\"");
    SurfaceModel model = j.contains("model") ? model_from_json(j["model"]) : *fallback;
    try {
        return DivisorClass(model, coeffs_from_json(j["coeffs"]));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

}  // namespace delpezzo
