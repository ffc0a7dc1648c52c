#include "kflag/charring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace kflag {

CharPoly CharPoly::unit(int vars) {
    CharPoly p(vars);
    p.terms_[Expo(vars + 1, 0)] = 1;
    return p;
}

CharPoly CharPoly::monomial(const std::vector<int>& coords, int y_exp, Coef coefficient) {
    CharPoly p(static_cast<int>(coords.size()));
    if (coefficient != 0) {
        Expo e = coords;
        e.push_back(y_exp);
        p.terms_[std::move(e)] = std::move(coefficient);
    }
    return p;
}

void CharPoly::add_term(const Expo& e, const Coef& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CharPoly CharPoly::operator-() const {
    CharPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CharPoly CharPoly::operator+(const CharPoly& o) const {
    CharPoly r = *this;
    r += o;
    return r;
}

CharPoly& CharPoly::operator+=(const CharPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CharPoly CharPoly::operator-(const CharPoly& o) const {
    CharPoly r = *this;
    r -= o;
    return r;
}

CharPoly& CharPoly::operator-=(const CharPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CharPoly CharPoly::operator*(const CharPoly& o) const {
    CharPoly r(vars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    Expo e(vars_ + 1);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i <= vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

CharPoly CharPoly::scaled(const Coef& c) const {
    CharPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

CharPoly CharPoly::mono_mul(const Expo& shift, const Coef& c) const {
    CharPoly r(vars_);
    if (c == 0) return r;
    Expo e(vars_ + 1);
    for (const auto& [ea, ca] : terms_) {
        for (int i = 0; i <= vars_; ++i) e[i] = ea[i] + shift[i];
        r.terms_.emplace(e, ca * c);
    }
    return r;
}

CharPoly CharPoly::map_char_exponents(
    const std::function<std::vector<int>(const std::vector<int>&)>& f) const {
    CharPoly r(vars_);
    std::vector<int> coords(vars_);
    for (const auto& [e, c] : terms_) {
        std::copy(e.begin(), e.begin() + vars_, coords.begin());
        std::vector<int> img = f(coords);
        Expo ne = std::move(img);
        ne.push_back(e[vars_]);
        r.add_term(ne, c);
    }
    return r;
}

CharPoly CharPoly::dual() const {
    CharPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Expo ne(vars_ + 1);
        for (int i = 0; i <= vars_; ++i) ne[i] = -e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

CharPoly CharPoly::subst_y_inverse() const {
    CharPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Expo ne = e;
        ne[vars_] = -ne[vars_];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

CharPoly CharPoly::subst_y(const CharPoly& value) const {
    CharPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        int k = e[vars_];
        Expo base = e;
        base[vars_] = 0;
        CharPoly term = CharPoly(vars_);
        term.terms_.emplace(base, c);
        // value^k; negative k unsupported (not needed)
        if (k < 0) throw std::runtime_error("subst_y: negative y exponent");
        for (int j = 0; j < k; ++j) term = term * value;
        r += term;
    }
    return r;
}

CharPoly CharPoly::q_specialize(const std::function<int(const std::vector<int>&)>& ht) const {
    CharPoly r(1);
    for (const auto& [e, c] : terms_) {
        std::vector<int> mu(e.begin(), e.begin() + vars_);
        r.add_term(Expo{ht(mu), e[vars_]}, c);
    }
    return r;
}

std::string CharPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coef a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < var_names.size(); ++i) {
            int k = e[i];
            if (k == 0) continue;
            std::ostringstream v;
            v << var_names[i];
            if (k != 1) v << "^" << k;
            parts.push_back(v.str());
        }
        if (parts.empty()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << "*";
                os << parts[i];
            }
        }
    }
    return os.str();
}

std::string CharPoly::to_string(bool q_variable) const {
    std::vector<std::string> names;
    if (q_variable && vars_ == 1) {
        names = {"q", "y"};
    } else {
        for (int i = 1; i <= vars_; ++i) names.push_back("x" + std::to_string(i));
        names.push_back("y");
    }
    return to_string(names);
}

CharPoly factor_poly(int vars, const DenFactor& f) {
    CharPoly p = CharPoly::unit(vars);
    p.add_term(f.m, -Coef(f.sign));
    return p;
}

namespace {

bool is_zero_vec(const Expo& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

int first_nonzero(const Expo& v) {
    for (int x : v)
        if (x != 0) return x;
    return 0;
}

}  // namespace

std::optional<CharPoly> div_exact(const CharPoly& p, const DenFactor& f) {
    // Group terms along the direction d = exponent of the factor monomial;
    // on each coset the division is a univariate synthetic division by
    // (1 - sign·z), exact iff the coefficients sum against sign^{-j} to 0.
    const Expo& d = f.m;
    const int n = static_cast<int>(d.size());
    int i0 = -1;
    for (int i = 0; i < n; ++i)
        if (d[i] != 0) { i0 = i; break; }
    assert(i0 >= 0 && d[i0] > 0);

    // coset representative -> sorted (offset j -> coefficient)
    std::map<Expo, std::map<int, Coef>> cosets;
    for (const auto& [e, c] : p.terms()) {
        int j = e[i0] >= 0 ? e[i0] / d[i0]
                           : -((-e[i0] + d[i0] - 1) / d[i0]);  // floor division
        Expo rep(n);
        for (int i = 0; i < n; ++i) rep[i] = e[i] - j * d[i];
        cosets[std::move(rep)][j] = c;
    }

    CharPoly q(p.vars());
    for (const auto& [rep, coeffs] : cosets) {
        // u(z) = Σ a_j z^j; need u = (1 - s z)·v. Then v_j = a_j + s·v_{j-1}
        // scanning upward, with v ending at zero for exactness.
        Coef carry = 0;
        auto it = coeffs.begin();
        int j = it->first;
        int last = coeffs.rbegin()->first;
        for (; j <= last; ++j) {
            Coef a = 0;
            if (it != coeffs.end() && it->first == j) {
                a = it->second;
                ++it;
            }
            Coef v = a + Coef(f.sign) * carry;
            if (v != 0) {
                Expo e(n);
                for (int i = 0; i < n; ++i) e[i] = rep[i] + j * d[i];
                q.add_term(e, v);
            }
            carry = v;
        }
        if (carry != 0) return std::nullopt;  // nonzero remainder
    }
    return q;
}

void RatChar::push_den(const Expo& m, int sign, int mult) {
    if (mult == 0) return;
    if (is_zero_vec(m)) {
        if (sign == 1) throw DivisionByZero();
        // (1 + 1) = 2: fold the constant into the numerator as an exact
        // rational only if it divides; constant denominators do not occur
        // in this artifact, so reject.
        throw std::runtime_error("constant denominator factor");
    }
    if (num_.is_zero()) return;
    Expo v = m;
    if (first_nonzero(v) < 0) {
        // 1/(1-c e^v)^m = (-c)^m e^{-mv} / (1 - c e^{-v})^m
        Expo shift(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            shift[i] = -mult * v[i];
            v[i] = -v[i];
        }
        Coef c = (sign == -1 || mult % 2 == 0) ? Coef(1) : Coef(-1);
        // (-c)^mult: sign=-1 gives +1 always; sign=+1 gives (-1)^mult
        num_ = num_.mono_mul(shift, c);
    }
    den_[DenFactor{std::move(v), sign}] += mult;
}

RatChar RatChar::mul_poly(const CharPoly& p) const {
    RatChar r = *this;
    r.num_ = r.num_ * p;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RatChar RatChar::mono_mul(const Expo& shift, const Coef& c) const {
    RatChar r = *this;
    r.num_ = r.num_.mono_mul(shift, c);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

RatChar RatChar::operator-() const {
    RatChar r = *this;
    r.num_ = -r.num_;
    return r;
}

RatChar RatChar::operator+(const RatChar& o) const {
    // common factored denominator: per-factor max multiplicity
    std::map<DenFactor, int> common = den_;
    for (const auto& [f, m] : o.den_) {
        auto it = common.find(f);
        if (it == common.end())
            common.emplace(f, m);
        else
            it->second = std::max(it->second, m);
    }
    const int v = vars();
    auto lift = [&](const RatChar& x) {
        CharPoly n = x.num_;
        for (const auto& [f, m] : common) {
            int have = 0;
            auto it = x.den_.find(f);
            if (it != x.den_.end()) have = it->second;
            CharPoly fp = factor_poly(v, f);
            for (int k = have; k < m; ++k) n = n * fp;
        }
        return n;
    };
    RatChar r;
    r.num_ = lift(*this) + lift(o);
    if (!r.num_.is_zero()) r.den_ = std::move(common);
    return r;
}

RatChar RatChar::operator-(const RatChar& o) const { return *this + (-o); }

RatChar RatChar::operator*(const RatChar& o) const {
    RatChar r;
    r.num_ = num_ * o.num_;
    if (r.num_.is_zero()) return RatChar::zero(vars());
    r.den_ = den_;
    for (const auto& [f, m] : o.den_) r.den_[f] += m;
    return r;
}

void RatChar::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = div_exact(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

std::optional<CharPoly> RatChar::is_polynomial() const {
    RatChar r = *this;
    r.reduce();
    if (r.den_.empty()) return r.num_;
    return std::nullopt;
}

bool RatChar::equals(const RatChar& o) const {
    RatChar d = *this - o;
    return d.num_.is_zero();
}

RatChar RatChar::map_char_exponents(
    const std::function<std::vector<int>(const std::vector<int>&)>& f) const {
    RatChar r(num_.map_char_exponents(f));
    const int v = vars();
    for (const auto& [fac, m] : den_) {
        std::vector<int> coords(fac.m.begin(), fac.m.begin() + v);
        std::vector<int> img = f(coords);
        Expo nm = std::move(img);
        nm.push_back(fac.m[v]);
        r.push_den(nm, fac.sign, m);
    }
    return r;
}

RatChar RatChar::dual() const {
    RatChar r(num_.dual());
    for (const auto& [fac, m] : den_) {
        Expo nm(fac.m.size());
        for (std::size_t i = 0; i < nm.size(); ++i) nm[i] = -fac.m[i];
        r.push_den(nm, fac.sign, m);
    }
    return r;
}

RatChar RatChar::subst_y_inverse() const {
    RatChar r(num_.subst_y_inverse());
    const int v = vars();
    for (const auto& [fac, m] : den_) {
        Expo nm = fac.m;
        nm[v] = -nm[v];
        r.push_den(nm, fac.sign, m);
    }
    return r;
}

std::string RatChar::to_string(bool q_variable) const {
    std::string s = num_.to_string(q_variable);
    if (den_.empty()) return s;
    std::ostringstream os;
    os << "(" << s << ") / (";
    bool first = true;
    for (const auto& [f, m] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << factor_poly(vars(), f).to_string(q_variable) << ")";
        if (m != 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

RatChar rat_sum(const std::vector<RatChar>& terms) {
    if (terms.empty()) return RatChar();
    // single common denominator across all terms, then one numerator sum
    std::map<DenFactor, int> common;
    for (const auto& t : terms) {
        for (const auto& [f, m] : t.den()) {
            auto it = common.find(f);
            if (it == common.end())
                common.emplace(f, m);
            else
                it->second = std::max(it->second, m);
        }
    }
    const int v = terms.front().vars();
    CharPoly num(v);
    for (const auto& t : terms) {
        CharPoly n = t.num();
        for (const auto& [f, m] : common) {
            int have = 0;
            auto it = t.den().find(f);
            if (it != t.den().end()) have = it->second;
            CharPoly fp = factor_poly(v, f);
            for (int k = have; k < m; ++k) n = n * fp;
        }
        num += n;
    }
    RatChar r(std::move(num));
    if (!r.num().is_zero())
        for (const auto& [f, m] : common) r.push_den(f.m, f.sign, m);
    return r;
}

}  // namespace kflag
