#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hardlef/matrix.hpp"

namespace hardlef {

/// Multivariate polynomial with rational coefficients. Keys are exponent
/// vectors of fixed length nvars; zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, Rational c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = std::move(c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t i) {
        internal_check(i < nvars, "polynomial: variable index out of range");
        Polynomial p(nvars);
        std::vector<int> e(nvars, 0);
        e[i] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == std::vector<int>(nvars_, 0));
    }
    Rational constant_value() const {
        internal_check(is_constant(), "polynomial: not a constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    void add_term(const std::vector<int>& exps, const Rational& c) {
        internal_check(exps.size() == nvars_, "polynomial: exponent length mismatch");
        if (c == 0) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        internal_check(nvars_ == o.nvars_, "polynomial: mixed variable counts");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += -b; }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        Polynomial r(a.nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms_) r.terms_[e] = c * k;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        internal_check(a.nvars_ == b.nvars_, "polynomial: mixed variable counts");
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Polynomial pow(int k) const {
        internal_check(k >= 0, "polynomial: negative power");
        Polynomial r = constant(nvars_, 1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        internal_check(var < nvars_, "polynomial: variable index out of range");
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            std::vector<int> f = e;
            f[var] -= 1;
            r.add_term(f, c * e[var]);
        }
        return r;
    }

    /// Substitute variable i by images[i]; all images share a common target
    /// variable space, which becomes the space of the result.
    Polynomial compose(const std::vector<Polynomial>& images) const {
        internal_check(images.size() == nvars_, "polynomial: wrong number of images");
        const std::size_t target = images.empty() ? 0 : images[0].nvars();
        for (const Polynomial& im : images)
            internal_check(im.nvars() == target, "polynomial: images in mixed spaces");
        Polynomial r(target);
        for (const auto& [e, c] : terms_) {
            Polynomial m = constant(target, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] > 0) m = m * images[i].pow(e[i]);
            r += m;
        }
        return r;
    }

    Rational evaluate(const QVector& point) const {
        internal_check(point.size() == nvars_, "polynomial: wrong evaluation point size");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            total += t;
        }
        return total;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        internal_check(names.size() == nvars_, "polynomial: wrong number of variable names");
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += hardlef::to_string(a);
            else if (a == 1)
                out += mono;
            else
                out += hardlef::to_string(a) + "*" + mono;
        }
        return out;
    }

private:
    std::size_t nvars_;
    Terms terms_;
};

namespace detail {

/// Recursive descent parser for polynomial expressions. Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*      division by constants only
///   factor := '-' factor | base ('^' uint)?
///   base   := uint | identifier | '(' expr ')'
/// Multiplication must be explicit; identifiers must be declared variables.
class PolyParser {
public:
    PolyParser(std::string_view src, const std::vector<std::string>& names)
        : src_(src), nvars_(names.size()) {
        for (std::size_t i = 0; i < names.size(); ++i) vars_[names[i]] = i;
    }

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial p = term();
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p += -term();
            else
                return p;
        }
    }
    Polynomial term() {
        Polynomial p = factor();
        while (true) {
            if (eat('*')) {
                p = p * factor();
            } else if (eat('/')) {
                Polynomial d = factor();
                if (!d.is_constant() || d.constant_value() == 0)
                    fail("division only by nonzero constants");
                p = (Rational(1) / d.constant_value()) * p;
            } else {
                return p;
            }
        }
    }
    Polynomial factor() {
        if (eat('-')) return -factor();
        Polynomial b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("exponent must be a nonnegative integer literal");
            return b.pow(static_cast<int>(uint_literal()));
        }
        return b;
    }
    Polynomial base() {
        const char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(nvars_, Rational(uint_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::string name = identifier();
            auto it = vars_.find(name);
            if (it == vars_.end()) fail("unknown variable '" + name + "'");
            return Polynomial::variable(nvars_, it->second);
        }
        fail("expected a number, variable, or '('");
    }
    unsigned long long uint_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoull(std::string(src_.substr(start, pos_ - start)));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    std::map<std::string, std::size_t> vars_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view src, const std::vector<std::string>& names) {
    return detail::PolyParser(src, names).parse();
}

/// Conventional coordinate names x1..xm (or any other single-letter prefix).
inline std::vector<std::string> coordinate_names(std::size_t m, const std::string& prefix = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

}  // namespace hardlef
