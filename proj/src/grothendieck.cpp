#include "groth/grothendieck.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "json.hpp"

namespace groth {

void GrothExpansion::add(const Permutation& w, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly GrothExpansion::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? MultiPoly() : it->second;
}

std::set<Permutation> GrothExpansion::support() const {
    std::set<Permutation> s;
    for (const auto& [w, c] : terms_) s.insert(w);
    return s;
}

GrothExpansion GrothExpansion::operator+(const GrothExpansion& o) const {
    GrothExpansion r = *this;
    for (const auto& [w, c] : o.terms_) r.add(w, c);
    return r;
}

GrothExpansion GrothExpansion::scaled(const MultiPoly& c) const {
    GrothExpansion r;
    for (const auto& [w, cc] : terms_) r.add(w, cc * c);
    return r;
}

// ---------------------------------------------------------------------------
// grothendieck(w) with a process-wide cache

namespace {

class GrothCache {
  public:
    std::shared_ptr<const MultiPoly> find(const Permutation& w) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(w);
        return it == map_.end() ? nullptr : it->second;
    }
    void insert(const Permutation& w, std::shared_ptr<const MultiPoly> p) {
        std::unique_lock lock(mu_);
        terms_ += p->size();
        if (terms_ > budget_) {  // soft memory guard
            map_.clear();
            terms_ = p->size();
        }
        map_.emplace(w, std::move(p));
    }

  private:
    mutable std::shared_mutex mu_;
    std::map<Permutation, std::shared_ptr<const MultiPoly>> map_;
    std::size_t terms_ = 0;
    std::size_t budget_ = []() -> std::size_t {
        if (const char* s = std::getenv("GROTH_CACHE_TERMS")) return std::strtoull(s, nullptr, 10);
        return 12'000'000;
    }();
};

GrothCache& cache() {
    static GrothCache c;
    return c;
}

}  // namespace

std::shared_ptr<const MultiPoly> grothendieck_ptr(const Permutation& w) {
    if (auto hit = cache().find(w)) return hit;
    MultiPoly result;
    int n = w.size();
    // smallest ascent inside the window; absent only for the top element
    int asc = 0;
    for (int i = 1; i < n; ++i) {
        if (w(i) < w(i + 1)) {
            asc = i;
            break;
        }
    }
    if (n == 0) {
        result = MultiPoly::constant(1);
    } else if (asc == 0) {  // w = n...321: staircase monomial
        Monomial m;
        m.x.assign(n - 1, 0);
        for (int i = 1; i < n; ++i) m.x[i - 1] = n - i;
        result = MultiPoly::term(m, 1);
    } else {
        auto longer = grothendieck_ptr(w.swap_positions(asc, asc + 1));
        result = beta_divdiff(asc, *longer);
    }
    auto p = std::make_shared<const MultiPoly>(std::move(result));
    cache().insert(w, p);
    return p;
}

MultiPoly grothendieck(const Permutation& w) { return *grothendieck_ptr(w); }

// ---------------------------------------------------------------------------
// oracle via bounded compatible sequences

namespace {

// Blocks of a compatible sequence: for each value t of i, the letters a with
// i_j = t form a strictly decreasing run. Column t contributes x_t^(block size).
void oracle_blocks(const Permutation& target, const Permutation& cur, int col, int max_col,
                   int max_letter, bool bounded, const Monomial& mono, MultiPoly& out) {
    if (col > max_col) {
        if (cur == target) {
            Monomial m = mono;
            m.trim();
            m.beta = m.x_degree() - (int)target.length();
            out.add_term(m, 1);
        }
        return;
    }
    // choose a strictly decreasing (possibly empty) block for column col
    struct Frame {
        Permutation u;
        int last;  // last letter used in this block
        int count;
    };
    std::vector<Frame> stack;
    stack.push_back({cur, max_letter + 1, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        Monomial m = mono;
        if (f.count > 0) {
            if ((int)m.x.size() < col) m.x.resize(col, 0);
            m.x[col - 1] += f.count;
        }
        oracle_blocks(target, f.u, col + 1, max_col, max_letter, bounded, m, out);
        int lo = bounded ? col : 1;  // bounded sequences need i_j <= a_j
        for (int a = f.last - 1; a >= lo; --a) {
            Permutation next = f.u.des_r().count(a) ? f.u : f.u.swap_positions(a, a + 1);
            if (!bruhat_leq(next, target)) continue;
            stack.push_back({next, a, f.count + 1});
        }
    }
}

}  // namespace

MultiPoly groth_oracle(const Permutation& w) {
    MultiPoly out;
    Monomial mono;
    int max_letter = std::max(1, w.size() - 1);
    oracle_blocks(w, Permutation::identity(), 1, std::max(1, max_letter), max_letter,
                  /*bounded=*/true, mono, out);
    return out;
}

MultiPoly stable_groth_truncated(const Permutation& w, int n) {
    MultiPoly out;
    Monomial mono;
    int max_letter = std::max(1, w.size() - 1);
    oracle_blocks(w, Permutation::identity(), 1, n, max_letter, /*bounded=*/false, mono, out);
    return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    // rank criterion: u <= w iff #{a<=i : u(a)<=j} >= #{a<=i : w(a)<=j} for all i, j
    int n = std::max(u.size(), w.size());
    for (int i = 1; i <= n; ++i) {
        std::vector<int> ru(n + 1, 0), rw(n + 1, 0);
        for (int a = 1; a <= i; ++a) {
            ru[u(a)]++;
            rw[w(a)]++;
        }
        int su = 0, sw = 0;
        for (int j = 1; j <= n; ++j) {
            su += ru[j];
            sw += rw[j];
            if (su < sw) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// basis expansion by peeling

namespace {

// Order under which x^(code(w)) is the unique extreme monomial of the
// lowest-degree part of grothendieck(w): compare exponent vectors from the right.
bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t t = n; t-- > 0;) {
        int av = t < a.size() ? a[t] : 0;
        int bv = t < b.size() ? b[t] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

long expansion_budget(const MultiPoly& p) {
    if (const char* s = std::getenv("GROTH_STEP_BUDGET")) return std::strtol(s, nullptr, 10);
    long base = (long)p.size() + p.max_x_degree();
    return std::max(10L * base * base, 10000L);
}

}  // namespace

GrothExpansion expand(const MultiPoly& p) {
    GrothExpansion out;
    MultiPoly rem = p;
    long budget = expansion_budget(p);
    long steps = 0;
    // peel the colex-extreme monomial of the current minimal x-degree; the
    // degree-d stratum is mirrored in `slice` so each peel avoids a rescan
    struct ColexLess {
        bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
            return colex_less(a, b);
        }
    };
    std::map<std::vector<int>, MultiPoly, ColexLess> slice;
    int d = 0;
    while (!rem.is_zero()) {
        if (slice.empty()) {
            d = rem.max_x_degree();
            for (const auto& [m, c] : rem.terms()) d = std::min(d, m.x_degree());
            for (const auto& [m, c] : rem.terms()) {
                if (m.x_degree() == d) slice[m.x].add_term(Monomial{m.beta, {}}, c);
            }
        }
        if (++steps > budget)
            throw InternalError("expand: peeling exceeded step budget (set GROTH_STEP_BUDGET)");
        auto last = std::prev(slice.end());
        std::vector<int> target = last->first;
        MultiPoly gamma = last->second;
        slice.erase(last);
        Permutation w = lehmer_decode(target);
        auto gw = grothendieck_ptr(w);
        out.add(w, gamma);
        for (const auto& [mg, cg] : gamma.terms()) {
            for (const auto& [m, c] : gw->terms()) {
                Monomial mm = m;
                mm.beta += mg.beta;
                rem.add_term(mm, -c * cg);
                if (mm.x_degree() == d && mm.x != target) {
                    auto it = slice.find(mm.x);
                    if (it == slice.end()) it = slice.emplace(mm.x, MultiPoly()).first;
                    it->second.add_term(Monomial{mm.beta, {}}, -c * cg);
                    if (it->second.is_zero()) slice.erase(it);
                }
            }
        }
    }
    return out;
}

MultiPoly eval(const GrothExpansion& e) {
    MultiPoly sum;
    for (const auto& [w, c] : e.terms()) {
        auto gw = grothendieck_ptr(w);
        for (const auto& [mg, cg] : c.terms()) {
            for (const auto& [m, cc] : gw->terms()) {
                Monomial mm = m;
                mm.beta += mg.beta;
                sum.add_term(mm, cc * cg);
            }
        }
    }
    return sum;
}

namespace {
std::vector<std::pair<Permutation, MultiPoly>> sorted_terms(const GrothExpansion& e) {
    std::vector<std::pair<Permutation, MultiPoly>> v(e.terms().begin(), e.terms().end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        long la = a.first.length(), lb = b.first.length();
        if (la != lb) return la < lb;
        return a.first < b.first;
    });
    return v;
}
}  // namespace

std::string to_text(const GrothExpansion& e) {
    if (e.terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted_terms(e)) {
        if (!first) os << " + ";
        first = false;
        if (c.size() == 1) {
            const auto& [m, val] = *c.terms().begin();
            if (val != 1 || m.beta == 0) os << val.str() << "*";
            if (m.beta > 0) os << "b^" << m.beta << "*";
        } else {
            os << "(" << to_text(c) << ")*";
        }
        os << "G[" << w.str() << "]";
    }
    return os.str();
}

std::string to_json(const GrothExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : sorted_terms(e)) {
        terms.push_back({{"w", w.window()},
                         {"coeff", nlohmann::json::parse(to_json(c))}});
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

// ---------------------------------------------------------------------------
// transition formulas

GrothExpansion lenart_transition(int k, const Permutation& v) {
    if (k < 1) throw MathError("lenart_transition: k must be positive");
    GrothExpansion out;
    int bmax = std::max(v.size(), k) + 1;
    // phase B: covers (k, b) with strictly decreasing b
    auto run_b = [&](const Permutation& start, int p) {
        struct Frame {
            Permutation u;
            int last_b;
            int q;
        };
        std::vector<Frame> stack{{start, bmax + 1, 0}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            Coeff sign = (p % 2 == 0) ? 1 : -1;
            out.add(f.u, MultiPoly::beta(p + f.q) * sign);
            for (int b = f.last_b - 1; b > k; --b) {
                if (auto w = bruhat_cover(f.u, k, b)) stack.push_back({*w, b, f.q + 1});
            }
        }
    };
    // phase A: covers (a, k) with strictly decreasing a, then switch to B
    struct FrameA {
        Permutation u;
        int last_a;
        int p;
    };
    std::vector<FrameA> stack{{v, k, 0}};
    while (!stack.empty()) {
        FrameA f = stack.back();
        stack.pop_back();
        run_b(f.u, f.p);
        for (int a = f.last_a - 1; a >= 1; --a) {
            if (auto w = bruhat_cover(f.u, a, k)) stack.push_back({*w, a, f.p + 1});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// k-Pieri chains

namespace {

long chain_F(const std::vector<std::pair<int, int>>& steps) {
    long F = 0;
    std::size_t q = steps.size();
    // initial run: b_1 = ... = b_i with a_1 > ... > a_i
    std::size_t run = q ? 1 : 0;
    while (run < q && steps[run].second == steps[0].second &&
           steps[run].first < steps[run - 1].first)
        ++run;
    for (std::size_t i = 1; i <= q; ++i) {
        bool in_run = i <= run;
        bool pair_cond = i < q && steps[i - 1].second == steps[i].second &&
                         steps[i - 1].first > steps[i].first;
        if (in_run || pair_cond) ++F;
    }
    return F;
}

long chain_P(const std::vector<std::pair<int, int>>& steps) {
    long P = 0;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (steps[j].first == steps[i].first) {
                ++P;
                break;
            }
        }
    }
    return P;
}

// DFS over all unmarked k-Pieri chains out of v. Every prefix of a valid
// chain is valid, so each visited node is an endpoint. z-style constraints
// are injected through the step filter.
template <typename Filter, typename Visit>
void pieri_dfs(const Permutation& v, int k, int bmax, Filter&& allowed, Visit&& visit) {
    std::vector<std::pair<int, int>> steps;
    struct Frame {
        Permutation u;
        std::size_t depth;
        std::pair<int, int> step;
    };
    std::vector<Frame> stack;
    auto push_children = [&](const Permutation& u) {
        int last_a = steps.empty() ? 0 : steps.back().first;
        int last_b = steps.empty() ? bmax : steps.back().second;
        bool last_rep = false;
        if (steps.size() >= 2) {
            for (std::size_t j = 0; j + 1 < steps.size(); ++j)
                if (steps[j].first == steps.back().first) last_rep = true;
        }
        for (int a = 1; a <= k; ++a) {
            for (int b = k + 1; b <= last_b; ++b) {
                if (!steps.empty()) {
                    if (b > last_b) continue;                                   // (P1)
                    if (last_rep && a < last_a && b >= last_b) continue;        // (P0)
                }
                if (!allowed(a, b)) continue;
                if (auto w = bruhat_cover(u, a, b)) stack.push_back({*w, steps.size() + 1, {a, b}});
            }
        }
    };
    visit(v, steps);
    push_children(v);
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        steps.resize(f.depth - 1);
        steps.push_back(f.step);
        visit(f.u, steps);
        push_children(f.u);
    }
}

}  // namespace

std::map<Permutation, PieriChain> pieri_chains_from(const Permutation& v, int k) {
    std::map<Permutation, PieriChain> out;
    int bmax = std::max(v.size(), k) + 1;
    pieri_dfs(
        v, k, bmax, [](int, int) { return true; },
        [&](const Permutation& w, const std::vector<std::pair<int, int>>& steps) {
            PieriChain chain{steps, chain_F(steps), chain_P(steps)};
            auto [it, fresh] = out.emplace(w, chain);
            if (!fresh) throw InternalError("two unmarked k-Pieri chains share an endpoint");
        });
    return out;
}

std::optional<PieriChain> pieri_chain(const Permutation& v, const Permutation& w, int k) {
    if (k < 1) throw MathError("pieri_chain: k must be positive");
    auto chains = pieri_chains_from(v, k);
    auto it = chains.find(w);
    if (it == chains.end()) return std::nullopt;
    return it->second;
}

namespace {
Coeff binomial(long n, long r) {
    if (r < 0 || r > n || n < 0) return 0;
    Coeff c = 1;
    for (long t = 0; t < r; ++t) {
        c *= n - t;
        c /= t + 1;
    }
    return c;
}
}  // namespace

GrothExpansion lensot_product(int p, int k, const Permutation& v) {
    if (p < 1 || p > k) throw MathError("p out of range");
    GrothExpansion out;
    long lv = v.length();
    for (const auto& [w, chain] : pieri_chains_from(v, k)) {
        long lw = w.length();
        Coeff c = binomial(lw - lv - chain.F - chain.P, p - chain.F);
        if (c == 0) continue;
        out.add(w, MultiPoly::beta((int)(lw - lv - p)) * c);
    }
    return out;
}

GrothExpansion grassmannian_pieri(int p, int k, const std::vector<int>& lambda) {
    if (p < 1 || p > k) throw MathError("p out of range");
    std::vector<int> lam = lambda;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) throw MathError("not a partition");
    if ((int)lam.size() > k) throw MathError("too many parts");
    lam.resize(k, 0);
    GrothExpansion out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> mu = lam;
        int weight = 0;
        std::set<int> cols;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                mu[i] += 1;
                ++weight;
                cols.insert(mu[i]);
            }
        }
        if (weight < p) continue;
        bool partition = true;
        for (int i = 0; i + 1 < k; ++i)
            if (mu[i] < mu[i + 1]) partition = false;
        if (!partition) continue;
        Coeff c = binomial((long)cols.size() - 1, weight - p);
        if (c == 0) continue;
        out.add(grassmannian_perm(mu, k), MultiPoly::beta(weight - p) * c);
    }
    return out;
}

GrothExpansion two_power_product(int k) {
    if (k < 1) throw MathError("k must be positive");
    GrothExpansion out;
    Coeff pow2 = Coeff(1) << k;
    out.add(Permutation::identity(), MultiPoly::constant(pow2));
    for (int j = 1; j <= k; ++j) {
        std::vector<int> ones(j, 1);
        Coeff c = (Coeff(1) << (k - j)) * ((j % 2 == 0) ? -1 : 1);
        out.add(grassmannian_perm(ones, k), MultiPoly::beta(j) * c);
    }
    return out;
}

std::pair<MultiPoly, GrothExpansion> symp_groth(const FpfInvolution& z) {
    long lfpf = alpha_fpf(z).length();
    GrothExpansion e;
    for (const Permutation& w : fpf_class(z))
        e.add(w, MultiPoly::beta((int)(w.length() - lfpf)));
    return {eval(e), e};
}

}  // namespace groth
