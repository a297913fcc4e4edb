#include "groth/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace groth {

MultiPoly MultiPoly::constant(Coeff c) {
    MultiPoly p;
    if (c != 0) p.terms_[Monomial{}] = std::move(c);
    return p;
}

MultiPoly MultiPoly::var(int i, int e) {
    if (i < 1) throw MathError("variable index must be positive");
    if (e == 0) return constant(1);
    Monomial m;
    m.x.assign(i, 0);
    m.x[i - 1] = e;
    MultiPoly p;
    p.terms_[m] = 1;
    return p;
}

MultiPoly MultiPoly::beta(int k) {
    Monomial m;
    m.beta = k;
    MultiPoly p;
    p.terms_[m] = 1;
    return p;
}

MultiPoly MultiPoly::term(const Monomial& m, Coeff c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

Coeff MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
}

int MultiPoly::max_var() const {
    int v = 0;
    for (const auto& [m, c] : terms_) v = std::max<int>(v, (int)m.x.size());
    return v;
}

int MultiPoly::max_x_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Coeff& c) {
    if (c == 0) return;
    Monomial key = m;
    key.trim();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& q) const {
    MultiPoly r = *this;
    r += q;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& q) const {
    MultiPoly r = *this;
    r -= q;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& q) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : q.terms_) {
            Monomial m;
            m.beta = m1.beta + m2.beta;
            m.x.assign(std::max(m1.x.size(), m2.x.size()), 0);
            for (std::size_t i = 0; i < m1.x.size(); ++i) m.x[i] += m1.x[i];
            for (std::size_t i = 0; i < m2.x.size(); ++i) m.x[i] += m2.x[i];
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Coeff& c) const {
    if (c == 0) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
}

MultiPoly act_si(int i, const MultiPoly& p) {
    if (i < 1) throw MathError("act_si index must be positive");
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        if ((int)mm.x.size() < i + 1) mm.x.resize(i + 1, 0);
        std::swap(mm.x[i - 1], mm.x[i]);
        r.add_term(mm, c);
    }
    return r;
}

namespace {

// Divided difference of q = (1 + beta*x_{i+1})^twist * p in one pass:
// antisymmetrize q term by term into buckets indexed by the x_i-exponent,
// then divide by (x_i - x_{i+1}) by synthetic division, with carries
// q_{d-1} = A_d + x_{i+1} q_d. A nonzero remainder is an arithmetic bug.
MultiPoly divdiff_core(int i, const MultiPoly& p, bool beta_twist) {
    std::map<int, MultiPoly> bucket;
    int maxd = 0;
    auto emit = [&](const Monomial& m, const Coeff& c) {
        int d1 = m.exp(i), d2 = m.exp(i + 1);
        if (d1 == d2) return;  // killed by the antisymmetrization
        Monomial a = m;
        if ((int)a.x.size() < i + 1) a.x.resize(i + 1, 0);
        Monomial b = a;
        a.x[i - 1] = 0;  // + m, x_{i+1}-exponent d2 kept
        a.trim();
        b.x[i - 1] = 0;  // - s_i(m), x_{i+1}-exponent becomes d1
        b.x[i] = d1;
        b.trim();
        bucket[d1].add_term(a, c);
        bucket[d2].add_term(b, -c);
        maxd = std::max({maxd, d1, d2});
    };
    for (const auto& [m, c] : p.terms()) {
        emit(m, c);
        if (beta_twist) {
            Monomial mm = m;
            mm.beta += 1;
            if ((int)mm.x.size() < i + 1) mm.x.resize(i + 1, 0);
            mm.x[i] += 1;
            emit(mm, c);
        }
    }
    MultiPoly result;
    MultiPoly carry;  // q_d while descending
    for (int d = maxd; d >= 1; --d) {
        MultiPoly qd = std::move(carry);
        auto it = bucket.find(d);
        if (it != bucket.end()) qd += it->second;
        // record q_{d-1} = qd with x_i^(d-1) attached
        for (const auto& [m, c] : qd.terms()) {
            Monomial mm = m;
            if ((int)mm.x.size() < i) mm.x.resize(i, 0);
            mm.x[i - 1] += d - 1;
            result.add_term(mm, c);
        }
        carry = qd * MultiPoly::var(i + 1);
    }
    MultiPoly rem = std::move(carry);
    auto it0 = bucket.find(0);
    if (it0 != bucket.end()) rem += it0->second;
    if (!rem.is_zero()) throw InternalError("divdiff: nonzero remainder");
    return result;
}

}  // namespace

MultiPoly divdiff(int i, const MultiPoly& p) {
    if (i < 1) throw MathError("divdiff index must be positive");
    return divdiff_core(i, p, false);
}

MultiPoly beta_divdiff(int i, const MultiPoly& p) {
    if (i < 1) throw MathError("divdiff index must be positive");
    return divdiff_core(i, p, true);
}

MultiPoly isobaric(int i, const MultiPoly& p) {
    return beta_divdiff(i, MultiPoly::var(i) * p);
}

MultiPoly oplus(const MultiPoly& p, const MultiPoly& q) {
    return p + q + MultiPoly::beta() * p * q;
}

MultiPoly shift_down_poly(const MultiPoly& p) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.exp(1) > 0) continue;
        Monomial mm;
        mm.beta = m.beta;
        if (m.x.size() > 1) mm.x.assign(m.x.begin() + 1, m.x.end());
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly truncate_vars(const MultiPoly& p, int vars) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if ((int)m.x.size() > vars) continue;
        r.add_term(m, c);
    }
    return r;
}

std::optional<int> graded_degree(const MultiPoly& p) {
    std::optional<int> deg;
    for (const auto& [m, c] : p.terms()) {
        int d = m.x_degree() - m.beta;
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg ? deg : std::optional<int>(0);
}

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        bool has_vars = m.beta > 0 || !m.x.empty();
        Coeff a = c;
        if (a < 0) {
            os << "-";
            a = -a;
        }
        bool wrote = false;
        if (a != 1 || !has_vars) {
            os << a.str();
            wrote = true;
        }
        if (m.beta > 0) {
            if (wrote) os << "*";
            os << "b^" << m.beta;
            wrote = true;
        }
        for (std::size_t j = 0; j < m.x.size(); ++j) {
            if (m.x[j] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (j + 1);
            if (m.x[j] > 1) os << "^" << m.x[j];
            wrote = true;
        }
    }
    return os.str();
}

std::string to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"b", m.beta}, {"x", m.x}, {"c", c.str()}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

MultiPoly poly_from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    MultiPoly p;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        m.beta = t.at("b").get<int>();
        m.x = t.at("x").get<std::vector<int>>();
        p.add_term(m, Coeff(t.at("c").get<std::string>()));
    }
    return p;
}

}  // namespace groth
