#include "asmdpp/multipoly.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace asmdpp {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (auto v : e) d += v;
    return d;
}

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
    if (arity == 0 || arity > kMaxVars) throw std::invalid_argument("unsupported polynomial arity");
}

MultiPoly MultiPoly::constant(const Integer& c, std::size_t arity) {
    MultiPoly p(arity);
    p.add_term(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v, std::size_t arity) {
    if (v >= arity) throw std::invalid_argument("variable outside polynomial arity");
    Exponents e{};
    e[v] = 1;
    return monomial(e, 1, arity);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Integer& c, std::size_t arity) {
    MultiPoly p(arity);
    for (std::size_t i = arity; i < kMaxVars; ++i)
        if (e[i] != 0) throw std::invalid_argument("exponent outside polynomial arity");
    p.add_term(e, c);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
}

Integer MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned MultiPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0 : asmdpp::total_degree(terms_.rbegin()->first);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

static Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a[i]) + b[i];
        if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
        r[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(1, arity_), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::specialize(Var v, const Integer& value) const {
    if (v >= arity_) throw std::invalid_argument("variable outside polynomial arity");
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        Integer pv;
        mpz_pow_ui(pv.get_mpz_t(), value.get_mpz_t(), e[v]);
        Exponents f = e;
        f[v] = 0;
        r.add_term(f, c * pv);
    }
    return r;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (point.size() < arity_) throw std::invalid_argument("evaluation point too short");
    // cache powers per variable
    std::vector<std::vector<Rational>> powers(arity_);
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(1);
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            t *= pw[e[i]];
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
    check_arity(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly rem = *this, quot(arity_);
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exponents qe{};
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (re[i] < lead_e[i]) throw std::domain_error("polynomial division is not exact");
            qe[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
        }
        if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
            throw std::domain_error("polynomial division is not exact");
        Integer qc = rc / lead_c;
        quot.add_term(qe, qc);
        rem -= monomial(qe, qc, arity_) * d;
    }
    return quot;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        bool constant_term = asmdpp::total_degree(e) == 0;
        Integer mag = abs(c);
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (constant_term || mag != 1) out += mag.get_str();
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            out += kVarNames[i];
            if (e[i] > 1) out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

MultiPoly MultiPoly::parse(std::string_view text, std::size_t arity) {
    MultiPoly result(arity);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("cannot parse polynomial: ") + what + " in '" +
                                    std::string(text) + "'");
    };
    skip();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("missing operator");
        }
        first = false;
        Integer coeff = 1;
        bool have_any = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            coeff = Integer(std::string(text.substr(start, i - start)));
            have_any = true;
        }
        Exponents e{};
        while (true) {
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
            if (i == text.size()) break;
            const char* pos = nullptr;
            for (std::size_t v = 0; v < arity; ++v)
                if (kVarNames[v] == text[i]) pos = &kVarNames[v];
            if (!pos) break;
            std::size_t v = static_cast<std::size_t>(pos - kVarNames);
            ++i;
            unsigned exp = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                std::size_t s = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (s == i) fail("missing exponent");
                exp = static_cast<unsigned>(std::stoul(std::string(text.substr(s, i - s))));
            }
            unsigned total = e[v] + exp;
            if (total > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
            e[v] = static_cast<std::uint16_t>(total);
            have_any = true;
        }
        if (!have_any) fail("empty term");
        result.add_term(e, sign * coeff);
    }
    return result;
}

MultiPoly px(unsigned e) { return MultiPoly::variable(X).pow(e); }
MultiPoly py(unsigned e) { return MultiPoly::variable(Y).pow(e); }
MultiPoly pz(unsigned e) { return MultiPoly::variable(Z).pow(e); }
MultiPoly pw(unsigned e) { return MultiPoly::variable(W).pow(e); }
MultiPoly pq(unsigned e) { return MultiPoly::variable(Q).pow(e); }
MultiPoly pconst(const Integer& c) { return MultiPoly::constant(c); }

}  // namespace asmdpp
