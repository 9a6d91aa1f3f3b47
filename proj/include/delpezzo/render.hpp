#pragma once

// Deterministic text, markdown and JSON renderings of classification rows,
// restriction cases, filter audits and the example gallery.

#include "delpezzo/gallery.hpp"
#include "delpezzo/serialize.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace delpezzo {

enum class Format { Text, Markdown, Json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "markdown" || s == "md") return Format::Markdown;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, markdown or json)");
}

/// A class in the notation of the tables: O(n) on the plane, O(a,b) on the
/// quadric, a linear combination of basis labels elsewhere ("C+F", "2F").
inline std::string class_label(const DivisorClass& d) {
    const auto& model = d.model();
    if (model.kind() == ModelKind::ProjectivePlane) return "O(" + d[0].str() + ")";
    if (model.kind() == ModelKind::Quadric) return "O(" + d[0].str() + "," + d[1].str() + ")";
    std::string out;
    for (std::size_t i = 0; i < d.rank(); ++i) {
        const auto& c = d[i];
        if (c.is_zero()) continue;
        std::string term;
        if (c == Rational(1)) {
            term = model.labels()[i];
        } else if (c == Rational(-1)) {
            term = "-" + model.labels()[i];
        } else if (c.is_integer()) {
            term = c.str() + model.labels()[i];
        } else {
            term = "(" + c.str() + ")" + model.labels()[i];
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

namespace detail {

inline std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++n;
    return n;
}

inline void write_aligned(std::ostream& os, const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << cells[i];
            if (i + 1 < cells.size()) os << std::string(width[i] - display_width(cells[i]) + 2, ' ');
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

inline void write_markdown(std::ostream& os, const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& cells) {
        os << '|';
        for (const auto& c : cells) os << ' ' << c << " |";
        os << '\n';
    };
    line(header);
    os << '|';
    for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& r : rows) line(r);
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

}  // namespace detail

inline Json to_json(const ClassificationRow& row) {
    return Json{{"p", row.p},
                {"Z", row.model.name()},
                {"model", to_json(row.model)},
                {"E", class_label(row.e)},
                {"e", to_json(row.e)},
                {"gk_square", to_json(row.gk_square)},
                {"kx_square",
                 {{"coeff", row.kx_square.coeff.str()}, {"offset", row.kx_square.offset}, {"expr", row.kx_square.str()}}}};
}

inline void render_rows(std::ostream& os, const std::vector<ClassificationRow>& rows, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({r.model.name(), class_label(r.e), r.gk_square.str(), r.kx_square.str()});
    if (fmt == Format::Markdown) {
        detail::write_markdown(os, {"$Z$", "$E$", "$(g^*K_X)^2$", "$K_X^2$"}, cells);
    } else {
        detail::write_aligned(os, {"Z", "E", "(g*K_X)^2", "K_X^2"}, cells);
    }
}

inline Json to_json(const FilterAudit& a) {
    return Json{{"filter", a.filter},       {"stated_rule", a.stated_rule}, {"raw_rule", a.raw_rule},
                {"candidates", a.candidates}, {"stated_pass", a.stated_pass}, {"raw_pass", a.raw_pass}};
}

inline void render_audit(std::ostream& os, const std::vector<FilterAudit>& audits, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& a : audits) arr.push_back(to_json(a));
        os << arr.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& a : audits) {
        cells.push_back({a.filter, a.stated_rule + ": {" + detail::join(a.stated_pass) + "}",
                         a.raw_rule + ": {" + detail::join(a.raw_pass) + "}",
                         a.stated_pass == a.raw_pass ? "agree" : "DIFFER"});
    }
    if (fmt == Format::Markdown) {
        detail::write_markdown(os, {"filter", "stated outcome", "raw outcome", "status"}, cells);
    } else {
        detail::write_aligned(os, {"filter", "stated outcome", "raw outcome", "status"}, cells);
    }
}

inline Json to_json(const RestrictionCase& c) {
    return Json{{"Z", c.model.name()}, {"D", class_label(c.d)}, {"d", to_json(c.d)}, {"gk_square", to_json(c.gk_square)}};
}

inline void render_cases(std::ostream& os, const std::vector<RestrictionCase>& cases, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& c : cases) arr.push_back(to_json(c));
        os << arr.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& c : cases) cells.push_back({c.model.name(), class_label(c.d), c.gk_square.str()});
    if (fmt == Format::Markdown) {
        detail::write_markdown(os, {"$Z$", "$D$", "$(g^*K_X)^2$"}, cells);
    } else {
        detail::write_aligned(os, {"Z", "D", "(g*K_X)^2"}, cells);
    }
}

inline Json to_json(const ExampleRecord& r) {
    return Json{{"id", r.id},
                {"p", r.p},
                {"K2", to_json(r.kx_square)},
                {"epsilon", r.epsilon},
                {"Z", r.z_model.name()},
                {"model", to_json(r.z_model)},
                {"description", r.description}};
}

/// The summary tables, one per characteristic, columns X | K^2 | eps | base change model.
inline void render_gallery(std::ostream& os, const std::vector<ExampleRecord>& gallery, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : gallery) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
        return;
    }
    bool first = true;
    for (int p : {3, 2}) {
        std::vector<std::vector<std::string>> cells;
        for (const auto& r : gallery)
            if (r.p == p) cells.push_back({r.id, r.kx_square.str(), std::to_string(r.epsilon), r.z_model.name()});
        if (cells.empty()) continue;
        if (!first) os << '\n';
        first = false;
        if (fmt == Format::Markdown) {
            os << "$p=" << p << "$ case\n\n";
            detail::write_markdown(
                os, {"$X$", "$K_X^2$", "$\\epsilon(X/k)$", "$(X \\times_k \\overline{k})_{\\red}^N$"}, cells);
        } else {
            os << "p = " << p << '\n';
            detail::write_aligned(os, {"X", "K_X^2", "eps", "base change"}, cells);
        }
    }
}

inline void render_report(std::ostream& os, const GalleryReport& rep, Format fmt) {
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& c : rep.checks)
            arr.push_back(Json{{"record", c.record}, {"field", c.field}, {"ok", c.ok}, {"detail", c.detail}});
        os << Json{{"passed", rep.passed()}, {"checks", arr}}.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& c : rep.checks) cells.push_back({c.ok ? "ok" : "FAIL", c.record, c.field, c.detail});
    if (fmt == Format::Markdown) {
        detail::write_markdown(os, {"status", "record", "check", "detail"}, cells);
    } else {
        detail::write_aligned(os, {"status", "record", "check", "detail"}, cells);
    }
    os << (rep.passed() ? "gallery verified\n" : "gallery verification FAILED\n");
}

}  // namespace delpezzo
