#pragma once

// Exact arithmetic in the bead ring Z[t,t^-1] and truncated power series
// in the hair variable h with rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace beadweave {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Laurent polynomial over the integers, sparse map exponent -> coefficient.
// No zero coefficients are stored; equality is coefficient-wise.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Int& constant);
    explicit LaurentPoly(long constant);

    // c * t^k
    static LaurentPoly monomial(const Int& c, int k);
    static LaurentPoly t();        // the generator t
    static LaurentPoly t_minus_one();

    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Sum of all coefficients, i.e. the value at t = 1.
    Int eval_at_one() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

    // Canonical text form: terms in ascending exponent, '*' between a
    // coefficient and t, '^' before an exponent other than 1.
    // Examples: "0", "-1+t", "3*t", "t^-2", "-2+2*t".
    std::string str() const;

    // Parses integer-coefficient Laurent expressions over the symbol `t`,
    // e.g. "1", "t-1", "3*t-3", "t^-2". Whitespace-insensitive.
    // Throws ParseError on malformed input.
    static LaurentPoly parse(const std::string& text);

private:
    void set(int exponent, const Int& c);
    std::map<int, Int> terms_;
};

// Power series in h truncated at a fixed total degree, exact rational
// coefficients. No coefficient is stored above the truncation degree.
class HairSeries {
public:
    explicit HairSeries(int truncation_degree);

    int truncation_degree() const { return trunc_; }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int power) const;
    bool is_zero() const { return terms_.empty(); }

    void set(int power, const Rational& c);

    HairSeries truncated(int degree) const;
    HairSeries& operator+=(const HairSeries& rhs);
    friend HairSeries operator+(HairSeries lhs, const HairSeries& rhs);
    // Product truncates at the smaller of the two truncation degrees.
    friend HairSeries operator*(const HairSeries& lhs, const HairSeries& rhs);
    friend bool operator==(const HairSeries& lhs, const HairSeries& rhs) = default;

    std::string str() const;

private:
    int trunc_ = 0;
    std::map<int, Rational> terms_;
};

// Substitutes t -> exp(h) into p and truncates at total degree d:
// each term c * t^k contributes c * sum_m (k^m / m!) h^m for m = 0..d.
HairSeries lp_exp_substitute(const LaurentPoly& p, int degree);

} // namespace beadweave
