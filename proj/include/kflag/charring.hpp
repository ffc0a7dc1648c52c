// Exact arithmetic in Z[y^{±1}][e^{±ϖ_1},...,e^{±ϖ_r}] and its localization
// at the multiplicative set of factors (1 - c·e^μ y^k), c = ±1.
//
// Exponent vectors have length r+1: the first r entries are character
// exponents in the fundamental-weight basis, the last entry is the
// y-exponent. Coefficients are arbitrary-precision integers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kflag {

using Coef = boost::multiprecision::cpp_int;
using Expo = std::vector<int>;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero polynomial") {}
};

// Multivariate Laurent polynomial; `vars` counts character variables,
// so every exponent vector has vars+1 entries (the trailing one is y).
class CharPoly {
public:
    CharPoly() : vars_(0) {}
    explicit CharPoly(int vars) : vars_(vars) {}

    static CharPoly zero(int vars) { return CharPoly(vars); }
    static CharPoly unit(int vars);
    // coefficient * e^{coords} * y^{y_exp}
    static CharPoly monomial(const std::vector<int>& coords, int y_exp,
                             Coef coefficient = 1);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Coef>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Expo& e, const Coef& c);

    CharPoly operator-() const;
    CharPoly operator+(const CharPoly& o) const;
    CharPoly operator-(const CharPoly& o) const;
    CharPoly operator*(const CharPoly& o) const;
    CharPoly& operator+=(const CharPoly& o);
    CharPoly& operator-=(const CharPoly& o);
    bool operator==(const CharPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const CharPoly& o) const { return !(*this == o); }

    CharPoly scaled(const Coef& c) const;
    // multiply by c * e^{shift} (shift has vars+1 entries)
    CharPoly mono_mul(const Expo& shift, const Coef& c = 1) const;

    // apply an integer-linear map to the character exponents, y untouched
    CharPoly map_char_exponents(const std::function<std::vector<int>(const std::vector<int>&)>& f) const;
    // e^λ ↦ e^{-λ}, y ↦ y^{-1}
    CharPoly dual() const;
    // y ↦ y^{-1}
    CharPoly subst_y_inverse() const;
    // substitute y := value (a polynomial in the same ring)
    CharPoly subst_y(const CharPoly& value) const;

    // e^μ ↦ q^{ht(μ)} for a caller-supplied height functional (the pairing
    // with ρ̌). Result has one character variable (q) plus the y slot.
    CharPoly q_specialize(const std::function<int(const std::vector<int>&)>& ht) const;

    std::string to_string(const std::vector<std::string>& var_names) const;
    // default names x1..xr and y (or q,y when vars()==1 and q_names is set)
    std::string to_string(bool q_variable = false) const;

private:
    int vars_;
    std::map<Expo, Coef> terms_;
};

// (1 - sign·e^m) with m a nonzero (vars+1)-exponent whose first nonzero
// entry is positive.
struct DenFactor {
    Expo m;
    int sign;  // +1 or -1

    bool operator<(const DenFactor& o) const {
        if (m != o.m) return m < o.m;
        return sign < o.sign;
    }
    bool operator==(const DenFactor& o) const { return m == o.m && sign == o.sign; }
};

CharPoly factor_poly(int vars, const DenFactor& f);

// Exact division of p by (1 - sign·e^m); nullopt when not divisible.
std::optional<CharPoly> div_exact(const CharPoly& p, const DenFactor& f);

// numerator / Π (1 - c_j e^{m_j})^{mult_j}, denominator kept factored.
class RatChar {
public:
    RatChar() = default;
    explicit RatChar(CharPoly num) : num_(std::move(num)) {}
    static RatChar zero(int vars) { return RatChar(CharPoly::zero(vars)); }
    static RatChar unit(int vars) { return RatChar(CharPoly::unit(vars)); }

    const CharPoly& num() const { return num_; }
    const std::map<DenFactor, int>& den() const { return den_; }
    int vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }

    // divide by (1 - sign·e^m)^mult; m need not be normalized.
    void push_den(const Expo& m, int sign, int mult);

    RatChar operator+(const RatChar& o) const;
    RatChar operator-(const RatChar& o) const;
    RatChar operator*(const RatChar& o) const;
    RatChar operator-() const;
    RatChar& operator+=(const RatChar& o) { *this = *this + o; return *this; }

    RatChar mul_poly(const CharPoly& p) const;
    RatChar mono_mul(const Expo& shift, const Coef& c = 1) const;

    // clears every denominator factor that exactly divides the numerator
    void reduce();

    std::optional<CharPoly> is_polynomial() const;

    bool equals(const RatChar& o) const;

    RatChar map_char_exponents(const std::function<std::vector<int>(const std::vector<int>&)>& f) const;
    RatChar dual() const;
    RatChar subst_y_inverse() const;

    std::string to_string(bool q_variable = false) const;

private:
    CharPoly num_;
    std::map<DenFactor, int> den_;
};

RatChar rat_sum(const std::vector<RatChar>& terms);

}  // namespace kflag
