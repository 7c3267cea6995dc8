#include "thomforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace thomforge {

namespace {

std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

void require_same_space(const GradedPoly& p, const GradedPoly& q) {
    if (p.space() == q.space()) return;  // shared pointer fast path
    if (*p.space() != *q.space())
        throw SpaceMismatchError("operands live in different variable spaces");
}

}  // namespace

GradedPoly::GradedPoly(VarSpace::Ptr space, std::optional<int> trunc)
    : space_(std::move(space)), trunc_(trunc) {
    if (!space_) throw PreconditionError("polynomial without a variable space");
    if (trunc_ && *trunc_ < 0) throw PreconditionError("negative truncation order");
}

GradedPoly GradedPoly::zero(VarSpace::Ptr space, std::optional<int> trunc) {
    return GradedPoly(std::move(space), trunc);
}

GradedPoly GradedPoly::constant(VarSpace::Ptr space, const Rational& c, std::optional<int> trunc) {
    GradedPoly p(std::move(space), trunc);
    if (!c.is_zero()) p.terms_.emplace(Expo(p.space_->size(), 0), c);
    return p;
}

GradedPoly GradedPoly::variable(VarSpace::Ptr space, const std::string& name,
                                std::optional<int> trunc) {
    GradedPoly p(std::move(space), trunc);
    Expo e(p.space_->size(), 0);
    e[p.space_->index_of(name)] = 1;
    if (!trunc || p.space_->degree_of(e) <= *trunc) p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

GradedPoly GradedPoly::monomial(VarSpace::Ptr space, const std::map<std::string, int>& factors,
                                const Rational& coeff, std::optional<int> trunc) {
    GradedPoly p(std::move(space), trunc);
    if (coeff.is_zero()) return p;
    Expo e(p.space_->size(), 0);
    for (const auto& [name, exp] : factors) {
        if (exp < 0) throw PreconditionError("negative exponent for " + name);
        e[p.space_->index_of(name)] += exp;
    }
    if (!trunc || p.space_->degree_of(e) <= *trunc) p.terms_.emplace(std::move(e), coeff);
    return p;
}

std::optional<int> GradedPoly::lowest_degree() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        const int d = space_->degree_of(e);
        if (!best || d < *best) best = d;
    }
    return best;
}

std::optional<int> GradedPoly::highest_degree() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        const int d = space_->degree_of(e);
        if (!best || d > *best) best = d;
    }
    return best;
}

GradedPoly GradedPoly::truncated(int K) const {
    GradedPoly out(space_, min_trunc(trunc_, K));
    for (const auto& [e, c] : terms_)
        if (space_->degree_of(e) <= K) out.terms_.emplace(e, c);
    return out;
}

GradedPoly GradedPoly::with_truncation(std::optional<int> K) const {
    GradedPoly out = *this;
    out.trunc_ = K;
    return out;
}

void GradedPoly::insert_term(const Expo& expo, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(expo, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out(space_, trunc_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    require_same_space(*this, o);
    GradedPoly out(space_, min_trunc(trunc_, o.trunc_));
    for (const auto& [e, c] : terms_)
        if (!out.trunc_ || space_->degree_of(e) <= *out.trunc_) out.insert_term(e, c);
    for (const auto& [e, c] : o.terms_)
        if (!out.trunc_ || space_->degree_of(e) <= *out.trunc_) out.insert_term(e, c);
    return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    require_same_space(*this, o);
    GradedPoly out(space_, min_trunc(trunc_, o.trunc_));
    Expo e(space_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (out.trunc_ && space_->degree_of(e) > *out.trunc_) continue;
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

GradedPoly GradedPoly::operator*(const Rational& c) const {
    GradedPoly out(space_, trunc_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

GradedPoly GradedPoly::operator/(const Rational& c) const {
    if (c.is_zero()) throw PreconditionError("division by zero");
    return *this * (Rational(1) / c);
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    require_same_space(*this, o);
    return terms_ == o.terms_;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw PreconditionError("negative power");
    GradedPoly out = constant(space_, 1, trunc_);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

Rational GradedPoly::coefficient_of(const Expo& expo) const {
    if (expo.size() != space_->size()) throw SpaceMismatchError("exponent vector of wrong length");
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::coefficient_of(const std::map<std::string, int>& factors) const {
    Expo e(space_->size(), 0);
    for (const auto& [name, exp] : factors) e[space_->index_of(name)] = exp;
    return coefficient_of(e);
}

Rational GradedPoly::constant_term() const { return coefficient_of(Expo(space_->size(), 0)); }

GradedPoly GradedPoly::grade_component(int d) const {
    if (trunc_ && d > *trunc_)
        throw TruncationError("degree " + std::to_string(d) + " component requested from a series truncated at " +
                              std::to_string(*trunc_));
    GradedPoly out(space_, trunc_);
    for (const auto& [e, c] : terms_)
        if (space_->degree_of(e) == d) out.terms_.emplace(e, c);
    return out;
}

GradedPoly GradedPoly::substitute(const std::map<std::string, GradedPoly>& assignment,
                                  std::optional<int> K) const {
    std::optional<int> bound = min_trunc(trunc_, K);
    if (assignment.empty()) {
        return bound ? truncated(*bound) : *this;
    }
    VarSpace::Ptr target;
    for (const auto& [name, img] : assignment) {
        if (!space_->find(name)) throw SpaceMismatchError("assigned variable '" + name + "' not in source space");
        if (!target) {
            target = img.space();
        } else if (target != img.space() && *target != *img.space()) {
            throw SpaceMismatchError("assignment images live in different spaces");
        }
        bound = min_trunc(bound, img.truncation());
    }
    // Per-variable image table (pass-through variables map to themselves by name).
    std::vector<GradedPoly> image;
    image.reserve(space_->size());
    for (std::size_t i = 0; i < space_->size(); ++i) {
        const Variable& v = space_->var(i);
        auto it = assignment.find(v.name);
        GradedPoly img = (it != assignment.end()) ? it->second : GradedPoly::variable(target, v.name);
        if (!img.is_zero() && *img.lowest_degree() < v.degree)
            throw PreconditionError("image of degree-" + std::to_string(v.degree) + " variable " + v.name +
                                    " has a term of lower degree");
        image.push_back(std::move(img));
    }
    GradedPoly out = GradedPoly::zero(target, bound);
    for (const auto& [e, c] : terms_) {
        if (bound && space_->degree_of(e) > *bound) continue;  // cannot contribute below the bound
        GradedPoly term = GradedPoly::constant(target, c, bound);
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
            if (e[i] != 0) term = term * image[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

GradedPoly GradedPoly::embedded(VarSpace::Ptr bigger) const {
    // Variables that never occur with a positive exponent need not exist in
    // the target space.
    std::vector<std::optional<std::size_t>> remap(space_->size());
    for (std::size_t i = 0; i < space_->size(); ++i) {
        auto idx = bigger->find(space_->var(i).name);
        if (idx) remap[i] = *idx;
    }
    GradedPoly out(bigger, trunc_);
    for (const auto& [e, c] : terms_) {
        Expo ne(bigger->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!remap[i])
                throw SpaceMismatchError("no variable named '" + space_->var(i).name + "'");
            ne[*remap[i]] = e[i];
        }
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

GradedPoly invert_series(const GradedPoly& p, int K) {
    const Rational c0 = p.constant_term();
    if (c0.is_zero()) throw PreconditionError("cannot invert a series with zero constant term");
    const auto& sp = p.space();
    GradedPoly g = (p / c0 - GradedPoly::constant(sp, 1)).truncated(K);
    if (!g.is_zero() && *g.lowest_degree() <= 0)
        throw PreconditionError("series has non-constant terms of degree 0; inversion would not terminate");
    GradedPoly acc = GradedPoly::constant(sp, 1, K);
    GradedPoly term = acc;
    for (int k = 1; k <= K && !term.is_zero(); ++k) {
        term = (term * (-g)).truncated(K);
        acc = acc + term;
    }
    return acc / c0;
}

GradedPoly exp_series_bounded(const GradedPoly& p, int max_power) {
    GradedPoly acc = GradedPoly::constant(p.space(), 1, p.truncation());
    GradedPoly term = acc;
    Rational fact(1);
    for (int k = 1; k <= max_power && !term.is_zero(); ++k) {
        term = term * p;
        fact *= Rational(k);
        acc = acc + term / fact;
    }
    return acc;
}

// ----------------------------------------------------------------------------
// Parsing

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) != 0)) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos));
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos));
        return text.substr(start, pos - start);
    }
    // Variable names: identifier [A-Za-z][A-Za-z0-9_']* or the bracketed s-forms.
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || std::isalpha(static_cast<unsigned char>(text[pos])) == 0)
            throw ParseError("expected variable name at position " + std::to_string(pos));
        ++pos;
        if (text[start] == 's' && pos < text.size() && text[pos] == '[') {
            while (pos < text.size() && text[pos] != ']') ++pos;
            if (pos >= text.size()) throw ParseError("unterminated s[...] variable");
            ++pos;
            std::string out;
            for (std::size_t i = start; i < pos; ++i)
                if (std::isspace(static_cast<unsigned char>(text[i])) == 0) out += text[i];
            return out;
        }
        while (pos < text.size()) {
            const char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'')
                ++pos;
            else
                break;
        }
        return text.substr(start, pos - start);
    }
};

class Parser {
public:
    Parser(const std::string& text, VarSpace::Ptr space, std::optional<int> trunc)
        : lex_(text), space_(std::move(space)), trunc_(trunc) {}

    GradedPoly run() {
        GradedPoly p = poly();
        if (!lex_.eof()) throw ParseError("trailing input at position " + std::to_string(lex_.pos));
        return p;
    }

private:
    GradedPoly poly() {
        GradedPoly acc = GradedPoly::zero(space_, trunc_);
        bool first = true;
        while (true) {
            int sign = 1;
            if (lex_.accept('+')) {
                sign = 1;
            } else if (lex_.accept('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            acc = acc + term() * Rational(sign);
            first = false;
            const char c = lex_.peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

    GradedPoly term() {
        Rational coeff(1);
        bool have_any = false;
        if (std::isdigit(static_cast<unsigned char>(lex_.peek())) != 0) {
            std::string num = lex_.integer();
            std::string lit = num;
            if (lex_.accept('/')) lit += "/" + lex_.integer();
            coeff = Rational::from_string(lit);
            have_any = true;
        }
        GradedPoly acc = GradedPoly::constant(space_, coeff, trunc_);
        while (true) {
            const char c = lex_.peek();
            if (c == '(') {
                lex_.expect('(');
                GradedPoly sub = poly();
                lex_.expect(')');
                acc = acc * maybe_power(sub);
                have_any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
                const std::string nm = lex_.name();
                if (!space_->find(nm)) throw ParseError("unknown variable '" + nm + "'");
                acc = acc * maybe_power(GradedPoly::variable(space_, nm, trunc_));
                have_any = true;
            } else {
                break;
            }
        }
        if (!have_any) throw ParseError("empty term at position " + std::to_string(lex_.pos));
        return acc;
    }

    GradedPoly maybe_power(const GradedPoly& base) {
        if (lex_.accept('^')) {
            const int e = std::stoi(lex_.integer());
            return base.pow(e);
        }
        return base;
    }

    Lexer lex_;
    VarSpace::Ptr space_;
    std::optional<int> trunc_;
};

}  // namespace

GradedPoly GradedPoly::parse(const std::string& text, VarSpace::Ptr space, std::optional<int> trunc) {
    return Parser(text, std::move(space), trunc).run();
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    // Canonical graded-lexicographic order: ascending total degree, then the
    // exponent vector itself.
    std::vector<const std::pair<const Expo, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](const auto* a, const auto* b) {
        const int da = space_->degree_of(a->first), db = space_->degree_of(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        Rational c = t->second;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (!factors.empty()) factors += ' ';
            factors += space_->var(i).name;
            if (t->first[i] != 1) factors += "^" + std::to_string(t->first[i]);
        }
        if (factors.empty()) {
            os << c.str();
        } else {
            if (c != Rational(1)) os << c.str() << ' ';
            os << factors;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << p.str(); }

}  // namespace thomforge
