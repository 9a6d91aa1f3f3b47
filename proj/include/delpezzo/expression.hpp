#pragma once

// Small evaluator for intersection expressions over a model's basis labels.
//
//   query  := sum ( '.' sum | '^2' )?
//   sum    := ['+'|'-'] term (('+'|'-') term)*
//   term   := number ['*'] atom | atom
//   atom   := label | 'K' | name | '(' sum ')'
//   number := digits ['/' digits]
//
// "K" is the canonical class; names come from an optional map of extra classes.
// Examples: "(C+3F).(C+3F)", "(K+2F)^2", "-K.E1", "1/2C+2F".

#include "delpezzo/intersection.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace delpezzo {

struct ExpressionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using ExpressionValue = std::variant<Rational, DivisorClass>;

class ExpressionParser {
public:
    ExpressionParser(SurfaceModel model, std::string text, std::map<std::string, DivisorClass> names = {})
        : model_(std::move(model)), text_(std::move(text)), names_(std::move(names)) {}

    ExpressionValue parse() {
        DivisorClass lhs = sum();
        skip_ws();
        if (accept('.')) {
            DivisorClass rhs = sum();
            expect_end();
            return intersect(lhs, rhs);
        }
        if (accept('^')) {
            skip_ws();
            if (!accept('2')) fail("only ^2 is supported");
            expect_end();
            return self_intersection(lhs);
        }
        expect_end();
        return lhs;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ExpressionError("expression '" + text_ + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Rational number() {
        auto digits = [&] {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return text_.substr(start, pos_ - start);
        };
        std::string num = digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string den = digits();
            if (den.empty()) fail("missing denominator");
            Rational d = Rational::parse(den);
            if (d.is_zero()) fail("zero denominator");
            return Rational::parse(num) / d;
        }
        return Rational::parse(num);
    }

    DivisorClass sum() {
        skip_ws();
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        DivisorClass acc = term();
        if (negative) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    DivisorClass term() {
        if (at_digit()) {
            Rational c = number();
            accept('*');
            return c * atom();
        }
        return atom();
    }

    DivisorClass atom() {
        if (accept('(')) {
            DivisorClass inner = sum();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected a class");
        std::string ident = text_.substr(start, pos_ - start);
        if (ident == "K") return model_.canonical();
        if (auto it = names_.find(ident); it != names_.end()) {
            if (!(it->second.model() == model_)) fail("class '" + ident + "' lives on another model");
            return it->second;
        }
        for (std::size_t i = 0; i < model_.rank(); ++i)
            if (model_.labels()[i] == ident) return model_.basis(i);
        fail("unknown class '" + ident + "'");
    }

    SurfaceModel model_;
    std::string text_;
    std::map<std::string, DivisorClass> names_;
    std::size_t pos_ = 0;
};

inline ExpressionValue evaluate_expression(const SurfaceModel& model, const std::string& text,
                                           std::map<std::string, DivisorClass> names = {}) {
    return ExpressionParser(model, text, std::move(names)).parse();
}

}  // namespace delpezzo
