#include "beadweave/laurent.hpp"
#include "beadweave/errors.hpp"

#include <cctype>
#include <sstream>

namespace beadweave {

LaurentPoly::LaurentPoly(const Int& constant) {
    set(0, constant);
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

LaurentPoly LaurentPoly::monomial(const Int& c, int k) {
    LaurentPoly p;
    p.set(k, c);
    return p;
}

LaurentPoly LaurentPoly::t() {
    return monomial(1, 1);
}

LaurentPoly LaurentPoly::t_minus_one() {
    LaurentPoly p;
    p.set(1, 1);
    p.set(0, -1);
    return p;
}

void LaurentPoly::set(int exponent, const Int& c) {
    if (c == 0) {
        terms_.erase(exponent);
    } else {
        terms_[exponent] = c;
    }
}

Int LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && coeff(0) == 1;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) set(k, coeff(k) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) set(k, coeff(k) - c);
    return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    for (const auto& [ka, ca] : lhs.terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            r.set(ka + kb, r.coeff(ka + kb) + ca * cb);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (k == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << 't';
            if (k != 1) out << '^' << k;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
};

Int parse_unsigned_int(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == start) throw ParseError("expected integer in Laurent expression: " + cur.s);
    return Int(cur.s.substr(start, cur.i - start));
}

int parse_exponent(Cursor& cur) {
    bool neg = false;
    if (cur.eat('-')) neg = true;
    else cur.eat('+');
    Int e = parse_unsigned_int(cur);
    if (e > 1000000) throw ParseError("exponent out of range in Laurent expression");
    int v = static_cast<int>(e);
    return neg ? -v : v;
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Cursor cur{text};
    LaurentPoly result;
    bool any_term = false;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('-')) sign = -1;
        else if (cur.eat('+')) sign = 1;
        else if (any_term) throw ParseError("expected '+' or '-' in Laurent expression: " + text);

        Int c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            c = parse_unsigned_int(cur);
            have_coeff = true;
        }
        int k = 0;
        bool have_t = false;
        if (have_coeff) cur.eat('*');
        if (cur.peek() == 't') {
            ++cur.i;
            have_t = true;
            k = cur.eat('^') ? parse_exponent(cur) : 1;
        }
        if (!have_coeff && !have_t)
            throw ParseError("dangling sign in Laurent expression: " + text);
        result.set(k, result.coeff(k) + sign * c);
        any_term = true;
    }
    if (!any_term) throw ParseError("empty Laurent expression");
    return result;
}

HairSeries::HairSeries(int truncation_degree) : trunc_(truncation_degree) {
    if (truncation_degree < 0)
        throw PreconditionError("truncation degree must be non-negative");
}

Rational HairSeries::coeff(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HairSeries::set(int power, const Rational& c) {
    if (power < 0 || power > trunc_) return;
    if (c == 0) {
        terms_.erase(power);
    } else {
        terms_[power] = c;
    }
}

HairSeries HairSeries::truncated(int degree) const {
    HairSeries r(degree < trunc_ ? degree : trunc_);
    for (const auto& [m, c] : terms_) r.set(m, c);
    return r;
}

HairSeries& HairSeries::operator+=(const HairSeries& rhs) {
    HairSeries sum = truncated(rhs.trunc_);
    for (const auto& [m, c] : rhs.terms_) sum.set(m, sum.coeff(m) + c);
    *this = sum;
    return *this;
}

HairSeries operator+(HairSeries lhs, const HairSeries& rhs) {
    lhs += rhs;
    return lhs;
}

HairSeries operator*(const HairSeries& lhs, const HairSeries& rhs) {
    HairSeries r(lhs.trunc_ < rhs.trunc_ ? lhs.trunc_ : rhs.trunc_);
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            r.set(ma + mb, r.coeff(ma + mb) + ca * cb);
    return r;
}

std::string HairSeries::str() const {
    std::ostringstream out;
    if (terms_.empty()) {
        out << "0";
    } else {
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << c;
            if (m >= 1) out << "*h";
            if (m >= 2) out << '^' << m;
        }
    }
    out << " + O(h^" << trunc_ + 1 << ")";
    return out.str();
}

HairSeries lp_exp_substitute(const LaurentPoly& p, int degree) {
    if (degree < 0) throw PreconditionError("lp_exp_substitute: degree must be >= 0");
    HairSeries r(degree);
    for (const auto& [k, c] : p.terms()) {
        // c * exp(k h): coefficient of h^m is c * k^m / m!
        Int k_pow = 1;
        Int factorial = 1;
        for (int m = 0; m <= degree; ++m) {
            if (m > 0) {
                k_pow *= k;
                factorial *= m;
            }
            r.set(m, r.coeff(m) + Rational(c * k_pow, factorial));
        }
    }
    return r;
}

} // namespace beadweave
