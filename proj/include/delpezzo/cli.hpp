#pragma once

// Command-line front end. `run` is the whole program minus argv handling, so the
// tests drive it with in-memory streams.
//
// Exit codes: 0 success or verified, 1 verification mismatch, 2 usage or input error.

#include "delpezzo/expression.hpp"
#include "delpezzo/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace delpezzo::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline int run_classify(int p, int m_max, bool no_fold, bool audit, Format fmt, std::ostream& out) {
    require_classifiable_p(p);
    if (m_max < 1) throw std::invalid_argument("--m-max must be >= 1");
    auto rows = classify_rows(p, {m_max, !no_fold});
    if (fmt == Format::Json && audit) {
        Json rows_json = Json::array();
        for (const auto& r : rows) rows_json.push_back(to_json(r));
        Json audit_json = Json::array();
        for (const auto& a : audit_filters(p, m_max)) audit_json.push_back(to_json(a));
        out << Json{{"rows", rows_json}, {"audit", audit_json}}.dump(2) << '\n';
        return kOk;
    }
    if (fmt == Format::Markdown) out << "$p=" << p << "$ case\n\n";
    render_rows(out, rows, fmt);
    if (audit) {
        out << '\n' << (fmt == Format::Markdown ? "Filter audit\n\n" : "filter audit\n");
        render_audit(out, audit_filters(p, m_max), fmt);
    }
    return kOk;
}

inline int run_bound(int p, std::optional<int> epsilon, std::optional<int> r, Format fmt, std::ostream& out) {
    if (epsilon.has_value() == r.has_value()) throw CLI::ValidationError("bound", "give exactly one of --epsilon, --r");
    auto ctx = epsilon ? BoundContext::with_epsilon(p, *epsilon) : BoundContext::with_r(p, *r);
    const BigInt value = ctx.bound();
    if (fmt == Format::Json) {
        Json j{{"p", p}};
        if (epsilon) j["epsilon"] = *epsilon;
        if (r) j["r"] = *r;
        j["ell_max"] = ctx.ell_max;
        j["bound"] = value.str();
        j["formula"] = ctx.formula();
        out << j.dump(2) << '\n';
    } else {
        out << value.str() << '\n' << "branch: " << ctx.formula() << '\n';
    }
    return kOk;
}

inline int run_examples(bool verify, Format fmt, std::ostream& out) {
    if (!verify) {
        render_gallery(out, build_gallery(), fmt);
        return kOk;
    }
    auto rep = verify_gallery();
    render_report(out, rep, fmt);
    return rep.passed() ? kOk : kMismatch;
}

inline int run_oracle(const std::string& family, int m_max, int box, Format fmt, std::ostream& out) {
    std::vector<Family> families;
    if (family == "all") {
        families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
    } else {
        families.push_back(parse_family(family));
    }
    bool all_equal = true;
    Json report = Json::array();
    for (Family f : families) {
        auto closed = restriction_cases(f, m_max);
        auto brute = restriction_cases_oracle(f, m_max, box);
        std::vector<RestrictionCase> only_closed, only_brute;
        for (const auto& c : closed)
            if (std::find(brute.begin(), brute.end(), c) == brute.end()) only_closed.push_back(c);
        for (const auto& c : brute)
            if (std::find(closed.begin(), closed.end(), c) == closed.end()) only_brute.push_back(c);
        const bool equal = only_closed.empty() && only_brute.empty();
        all_equal = all_equal && equal;

        if (fmt == Format::Json) {
            auto arr = [](const std::vector<RestrictionCase>& cs) {
                Json a = Json::array();
                for (const auto& c : cs) a.push_back(to_json(c));
                return a;
            };
            report.push_back(Json{{"family", family_name(f)},
                                  {"m_max", m_max},
                                  {"box", box},
                                  {"closed_form", arr(closed)},
                                  {"oracle", arr(brute)},
                                  {"only_closed_form", arr(only_closed)},
                                  {"only_oracle", arr(only_brute)},
                                  {"equal", equal}});
            continue;
        }
        out << "family " << family_name(f) << " (m_max " << m_max << ", box " << box << ")\n";
        out << "closed form:\n";
        render_cases(out, closed, fmt);
        out << "oracle:\n";
        render_cases(out, brute, fmt);
        out << "diff: ";
        if (equal) {
            out << "empty\n";
        } else {
            out << "\n  only in closed form:";
            for (const auto& c : only_closed) out << ' ' << c.model.name() << ' ' << class_label(c.d) << ';';
            out << "\n  only in oracle:";
            for (const auto& c : only_brute) out << ' ' << c.model.name() << ' ' << class_label(c.d) << ';';
            out << '\n';
        }
        out << '\n';
    }
    if (fmt == Format::Json) out << report.dump(2) << '\n';
    return all_equal ? kOk : kMismatch;
}

inline Json value_to_json(const ExpressionValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return to_json(*r);
    return to_json(std::get<DivisorClass>(v));
}

/// Evaluates one lattice request read from JSON; see README for the request forms.
inline Json evaluate_lattice_request(const Json& req) {
    if (!req.is_object()) throw FormatError("lattice request must be a JSON object");
    auto need = [&](const char* key) -> const Json& {
        if (!req.contains(key)) throw FormatError(std::string("lattice request needs \"") + key + "\"");
        return req[key];
    };
    auto int_arg = [&](const char* key) {
        const Json& j = need(key);
        if (!j.is_number_integer()) throw FormatError(std::string("\"") + key + "\" must be an integer");
        return j.get<int>();
    };

    if (req.contains("expr")) {
        SurfaceModel model = model_from_json(need("model"));
        std::map<std::string, DivisorClass> names;
        if (req.contains("classes")) {
            if (!req["classes"].is_object()) throw FormatError("\"classes\" must be an object");
            for (const auto& [name, cls] : req["classes"].items()) names.emplace(name, class_from_json(cls, &model));
        }
        if (!req["expr"].is_string()) throw FormatError("\"expr\" must be a string");
        return value_to_json(evaluate_expression(model, req["expr"].get<std::string>(), std::move(names)));
    }

    if (!req.contains("op") || !req["op"].is_string())
        throw FormatError("lattice request needs a string \"op\" or an \"expr\"");
    const auto op = req["op"].get<std::string>();
    auto cls = [&](const char* key) { return class_from_json(need(key)); };

    if (op == "intersect") return to_json(intersect(cls("a"), cls("b")));
    if (op == "canonical_square") return to_json(canonical_square(model_from_json(need("model"))));
    if (op == "is_effective") return is_effective(cls("class"));
    if (op == "is_nef") return is_nef(cls("class"));
    if (op == "is_ample") return is_ample(cls("class"));
    if (op == "is_cartier") return is_cartier(cls("class"));
    if (op == "riemann_roch_chi") return to_json(riemann_roch_chi(cls("class")));
    if (op == "discrepancy") return to_json(discrepancy(int_arg("m")));
    if (op == "resolution_pullback") return to_json(resolution_pullback(int_arg("m"), cls("class")));
    if (op == "blowup") return to_json(blowup(model_from_json(need("model")), int_arg("degree")));
    if (op == "total_transform") return to_json(total_transform(model_from_json(need("target")), cls("class")));
    if (op == "proper_transform")
        return to_json(proper_transform(model_from_json(need("target")), cls("class"), int_arg("multiplicity")));
    throw FormatError("unknown lattice op '" + op + "'");
}

inline int run_lattice(Format fmt, std::istream& in, std::ostream& out) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Json req;
    try {
        req = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON on standard input: ") + e.what());
    }
    Json result = evaluate_lattice_request(req);
    if (fmt == Format::Json) {
        out << Json{{"result", result}}.dump(2) << '\n';
    } else if (result.is_string()) {
        out << result.get<std::string>() << '\n';
    } else {
        out << result.dump() << '\n';
    }
    return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Intersection arithmetic and classification tables for regular del Pezzo surfaces", "delpezzo"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, markdown or json")
            ->check(CLI::IsMember({"text", "markdown", "md", "json"}));
    };

    int p = 0;
    int m_max = 8;
    bool no_fold = false;
    bool audit = false;
    auto* classify = app.add_subcommand("classify", "print the K_X^2 classification table for p = 2 or 3");
    classify->add_option("--p", p, "characteristic")->required();
    classify->add_option("--m-max", m_max, "largest m enumerated for P(1,1,m) and F_m");
    classify->add_flag("--no-fold", no_fold, "emit both O(1,0) and O(0,1) on the quadric");
    classify->add_flag("--audit", audit, "print stated and recomputed outcomes of every filter");
    add_format(classify);

    std::optional<int> epsilon;
    std::optional<int> r;
    auto* bound = app.add_subcommand("bound", "upper bound on K_X^2 from epsilon or r = log_p [k:k^p]");
    bound->add_option("--p", p, "characteristic (prime)")->required();
    auto* eps_opt = bound->add_option("--epsilon", epsilon, "thickening exponent");
    auto* r_opt = bound->add_option("--r", r, "log_p [k:k^p]");
    eps_opt->excludes(r_opt);
    add_format(bound);

    bool verify = false;
    auto* examples = app.add_subcommand("examples", "print or verify the example gallery");
    examples->add_flag("--verify", verify, "check every record; exit 1 on mismatch");
    add_format(examples);

    std::string family;
    int box = 12;
    auto* oracle = app.add_subcommand("oracle", "compare closed-form restriction cases with brute force");
    oracle->add_option("--family", family, "plane, quadric, weighted_plane, hirzebruch or all")->required();
    oracle->add_option("--m-max", m_max, "largest m enumerated");
    oracle->add_option("--box", box, "coefficient box [0, box] for the brute force");
    add_format(oracle);

    auto* lattice = app.add_subcommand("lattice", "evaluate a lattice request read as JSON from standard input");
    add_format(lattice);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        const Format fmt = parse_format(format);
        if (*classify) return detail::run_classify(p, m_max, no_fold, audit, fmt, out);
        if (*bound) return detail::run_bound(p, epsilon, r, fmt, out);
        if (*examples) return detail::run_examples(verify, fmt, out);
        if (*oracle) return detail::run_oracle(family, m_max, box, fmt, out);
        if (*lattice) return detail::run_lattice(fmt, in, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace delpezzo::cli
