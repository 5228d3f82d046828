#include "eltlab/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "eltlab/error.hpp"

namespace eltlab {

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms) {
    std::map<Rational, Rational> acc;
    for (const auto& t : terms) acc[t.exponent] += t.coefficient;
    for (const auto& [e, c] : acc)
        if (!c.is_zero()) terms_.push_back({e, c});
}

PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    std::vector<PuiseuxSeries::Term> all = x.terms_;
    all.insert(all.end(), y.terms_.begin(), y.terms_.end());
    return PuiseuxSeries(std::move(all));
}

PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    std::vector<PuiseuxSeries::Term> all;
    all.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_) all.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
    return PuiseuxSeries(std::move(all));
}

PuiseuxSeries operator*(const Rational& alpha, const PuiseuxSeries& x) {
    std::vector<PuiseuxSeries::Term> all = x.terms_;
    for (auto& t : all) t.coefficient *= alpha;
    return PuiseuxSeries(std::move(all));
}

std::string PuiseuxSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        out += t.coefficient.to_string() + "*t^(" + t.exponent.to_string() + ")";
    }
    return out;
}

namespace {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view s) : s_(s) {}

    PuiseuxSeries run() {
        std::vector<PuiseuxSeries::Term> terms;
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty series");
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign(1);
            if (!first) {
                if (s_[pos_] == '+') {
                    ++pos_;
                } else if (s_[pos_] == '-') {
                    sign = Rational(-1);
                    ++pos_;
                } else {
                    throw ParseError(pos_, "expected '+' or '-'");
                }
                skip();
            }
            auto t = term();
            t.coefficient *= sign;
            terms.push_back(t);
            first = false;
            skip();
        }
        return PuiseuxSeries(std::move(terms));
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Rational number() {
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        try {
            return Rational::parse(s_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), "malformed rational");
        }
    }

    PuiseuxSeries::Term term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (pos_ < s_.size() && s_[pos_] != 't') {
            coeff = number();
            have_coeff = true;
            skip();
            if (pos_ == s_.size() || s_[pos_] != '*') return {Rational(0), coeff};
            ++pos_;
            skip();
        }
        if (pos_ == s_.size() || s_[pos_] != 't')
            throw ParseError(pos_, have_coeff ? "expected 't' after '*'" : "expected term");
        ++pos_;
        skip();
        if (pos_ == s_.size() || s_[pos_] != '^') return {Rational(1), coeff};
        ++pos_;
        skip();
        if (pos_ == s_.size() || s_[pos_] != '(') throw ParseError(pos_, "expected '(' after '^'");
        ++pos_;
        skip();
        Rational e = number();
        skip();
        if (pos_ == s_.size() || s_[pos_] != ')') throw ParseError(pos_, "expected ')'");
        ++pos_;
        return {e, coeff};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

PuiseuxSeries PuiseuxSeries::parse(std::string_view text) { return SeriesParser(text).run(); }

std::optional<Rational> valuation(const PuiseuxSeries& x) {
    if (x.is_zero()) return std::nullopt;
    return x.terms().front().exponent;
}

Scalar eltrop(const PuiseuxSeries& x) {
    if (x.is_zero()) return Scalar::neg_inf();
    const auto& lead = x.terms().front();
    return Scalar(-lead.exponent, lead.coefficient);
}

}  // namespace eltlab
