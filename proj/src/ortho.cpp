#include "groth/ortho.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <shared_mutex>
#include <bit>
#include <tuple>

#include "json.hpp"

namespace groth {

MultiPoly invgroth(const Involution& z) {
    long ell_inv = inv_stats(z).ell_inv;
    GrothExpansion e;
    for (const Permutation& w : binv(z))
        e.add(w, MultiPoly::beta((int)(w.length() - ell_inv)));
    return eval(e);
}

MultiPoly invgroth_dominant(const std::vector<int>& lambda) {
    Involution z = dominant_involution(lambda);  // checks symmetry
    MultiPoly p = MultiPoly::constant(1);
    for (const auto& [i, j] : rothe(z.to_permutation()).diagram) {
        if (i > j) continue;
        if (i == j)
            p = p * MultiPoly::var(i);
        else
            p = p * oplus(MultiPoly::var(i), MultiPoly::var(j));
    }
    return p;
}

namespace {

MultiPoly dominant_ortho_product(const Involution& z) {
    MultiPoly p = MultiPoly::constant(1);
    for (const auto& [i, j] : rothe(z.to_permutation()).diagram) {
        if (i > j) continue;
        p = p * oplus(MultiPoly::var(i), MultiPoly::var(j));
    }
    return p;
}

class OrthoCache {
  public:
    std::shared_ptr<const MultiPoly> find(const Involution& z) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(z);
        return it == map_.end() ? nullptr : it->second;
    }
    void insert(const Involution& z, std::shared_ptr<const MultiPoly> p) {
        std::unique_lock lock(mu_);
        terms_ += p->size();
        if (terms_ > 4'000'000) {
            map_.clear();
            terms_ = p->size();
        }
        map_.emplace(z, std::move(p));
    }

  private:
    mutable std::shared_mutex mu_;
    std::map<Involution, std::shared_ptr<const MultiPoly>> map_;
    std::size_t terms_ = 0;
};

OrthoCache& ortho_cache() {
    static OrthoCache c;
    return c;
}

}  // namespace

MultiPoly ortho_groth(const Involution& z) {
    if (auto hit = ortho_cache().find(z)) return *hit;
    DomPath path = dom_path(z);  // validates vexillarity and every step
    // paths from different involutions share their tails near the dominant
    // endpoint, so every intermediate polynomial is cached as well; resume
    // from the cached intermediate closest to z
    std::size_t top = path.involutions.size() - 1;
    std::size_t start = top;
    MultiPoly p;
    bool found = false;
    for (std::size_t t = 1; t <= top && !found; ++t) {
        if (auto hit = ortho_cache().find(path.involutions[t])) {
            p = *hit;
            start = t;
            found = true;
        }
    }
    if (!found) {
        p = dominant_ortho_product(path.involutions[top]);
        ortho_cache().insert(path.involutions[top], std::make_shared<const MultiPoly>(p));
        start = top;
    }
    for (std::size_t t = start; t-- > 0;) {
        p = beta_divdiff(path.indices[t], p);
        ortho_cache().insert(path.involutions[t], std::make_shared<const MultiPoly>(p));
    }
    return p;
}

MultiPoly qd_formula(const Involution& z) {
    InvStats s = inv_stats(z);
    if (!is_vexillary(z)) throw MathError("not vexillary: " + z.str());
    if (!s.quasi_dominant) throw MathError("not quasi-dominant: " + z.str());
    MultiPoly p = invgroth(z);
    for (int i = 1; i <= s.k; ++i)
        p = p * (MultiPoly::constant(2) + MultiPoly::beta() * MultiPoly::var(i));
    return p;
}

Gco gco(const Involution& z) {
    Gco g;
    g.ell_inv = inv_stats(z).ell_inv;
    GrothExpansion e = expand(ortho_groth(z));
    for (const auto& [w, c] : e.terms()) {
        if (c.size() != 1)
            throw InternalError("gco: coefficient of " + w.str() + " is not a beta power");
        const auto& [mon, val] = *c.terms().begin();
        if (!mon.x.empty() || mon.beta != (int)(w.length() - g.ell_inv))
            throw InternalError("gco: coefficient of " + w.str() + " has wrong grading");
        if (val < 0) throw InternalError("gco: negative coefficient at " + w.str());
        g.values[w] = val;
    }
    return g;
}

std::map<Permutation, Coeff> dom_thm_gco(const Involution& z) {
    InvStats s = inv_stats(z);
    if (!is_vexillary(z)) throw MathError("not vexillary: " + z.str());
    if (!s.quasi_dominant) throw MathError("not quasi-dominant: " + z.str());
    int k = s.k;
    std::map<Permutation, Coeff> out;
    for (const Permutation& v : binv(z)) {
        long lv = v.length();
        if (k == 0) {
            out[v] += 1;  // identity only; 2^0
            continue;
        }
        for (const auto& [w, chain] : pieri_chains_from(v, k)) {
            if (w == v) {
                out[w] += Coeff(1) << k;
                continue;
            }
            Coeff rho = Coeff(1) << (k + lv - w.length() + chain.P);
            Coeff eps = (1 + chain.F) % 2 == 0 ? 1 : -1;
            out[w] += eps * rho;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// ---------------------------------------------------------------------------
// shiftable sets

ShiftableData shiftable_data(const Involution& z) {
    if (!is_vexillary(z)) throw MathError("not vexillary: " + z.str());
    ShiftableData d;
    d.z = z;
    for (const auto& [a, b] : z.cycles()) d.left_endpoints.push_back(a);
    std::sort(d.left_endpoints.begin(), d.left_endpoints.end());
    const auto& ep = d.left_endpoints;
    int q = (int)ep.size();

    // maximal runs of consecutive endpoints; the run containing 1 is immobile
    for (int i = 0; i < q;) {
        LeftSegment seg;
        seg.points.push_back(ep[i]);
        int j = i + 1;
        while (j < q && ep[j] == ep[j - 1] + 1) seg.points.push_back(ep[j++]);
        seg.mobile = (seg.points.front() != 1);
        d.segments.push_back(std::move(seg));
        i = j;
    }

    auto segment_of = [&](int a) -> const LeftSegment& {
        for (const auto& seg : d.segments)
            if (std::find(seg.points.begin(), seg.points.end(), a) != seg.points.end()) return seg;
        throw InternalError("segment_of: not a left endpoint");
    };

    // crossing bounds: a_j bounds a_i when exactly {i} = {t : i<=t<j, b_t<b_j}
    for (int i = 0; i < q; ++i) {
        std::vector<int> crb;
        const LeftSegment& seg_i = segment_of(ep[i]);
        for (int j = i + 1; j < q; ++j) {
            if (&segment_of(ep[j]) != &seg_i) continue;
            bool ok = z.apply(ep[i]) < z.apply(ep[j]);
            for (int t = i + 1; t < j && ok; ++t)
                if (z.apply(ep[t]) < z.apply(ep[j])) ok = false;
            if (ok) crb.push_back(ep[j]);
        }
        d.crossing_bounds[ep[i]] = std::move(crb);
    }

    std::vector<int> mobile_points;
    for (const auto& seg : d.segments)
        if (seg.mobile) mobile_points.insert(mobile_points.end(), seg.points.begin(), seg.points.end());
    std::sort(mobile_points.begin(), mobile_points.end());

    // enumerate candidate subsets of mobile endpoints, ordered by (size, lex)
    std::vector<std::vector<int>> candidates;
    int m = (int)mobile_points.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int t = 0; t < m; ++t)
            if (mask & (1u << t)) s.push_back(mobile_points[t]);
        candidates.push_back(std::move(s));
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    long cyc = (long)z.cycles().size();
    for (const auto& s : candidates) {
        auto in_s = [&](int a) { return std::binary_search(s.begin(), s.end(), a); };
        bool shiftable = true;
        for (int a : ep) {
            if (in_s(a)) continue;
            for (int c : d.crossing_bounds[a])
                if (in_s(c)) shiftable = false;
        }
        if (!shiftable) continue;

        ShiftTerm term;
        term.set = s;
        // sigma_S: product of the cycles (c_0, c_1, ..., c_k) per mobile segment
        Permutation sigma;
        for (const auto& seg : d.segments) {
            if (!seg.mobile) continue;
            std::vector<int> cyc_pts;
            cyc_pts.push_back(seg.points.front() - 1);  // c_0, a fixed point of z
            for (int a : seg.points)
                if (in_s(a)) cyc_pts.push_back(a);
            if (cyc_pts.size() == 1) continue;
            int n = *std::max_element(cyc_pts.begin(), cyc_pts.end());
            std::vector<int> win(n);
            std::iota(win.begin(), win.end(), 1);
            for (std::size_t t = 0; t + 1 < cyc_pts.size(); ++t)
                win[cyc_pts[t] - 1] = cyc_pts[t + 1];
            win[cyc_pts.back() - 1] = cyc_pts.front();
            sigma = sigma * Permutation::from_window(std::move(win));
        }
        term.sigma = sigma;
        term.conjugate = Involution::from_permutation(
            sigma.inverse() * z.to_permutation() * sigma);

        MultiPoly varpi = MultiPoly::constant(1);
        Coeff theta = 1;
        for (int a : ep) {
            if (!in_s(a)) {
                varpi = varpi * (MultiPoly::constant(2) + MultiPoly::beta() * MultiPoly::var(a));
                theta *= 2;
            } else {
                bool has_bound = false;
                for (int c : d.crossing_bounds[a])
                    if (in_s(c)) has_bound = true;
                if (has_bound) {
                    varpi = varpi * MultiPoly::constant(-1);
                    theta *= -1;
                } else {
                    varpi = varpi * (MultiPoly::constant(1) + MultiPoly::beta() * MultiPoly::var(a));
                }
            }
        }
        term.varpi = varpi;
        term.theta = theta;
        Coeff expect = Coeff(1) << (int)(cyc - (long)s.size());
        if (theta != expect && theta != -expect)
            throw InternalError("shiftable_data: theta != +-2^(cyc-|S|)");
        d.sets.push_back(std::move(term));
    }
    return d;
}

MultiPoly ivex_formula(const Involution& z) {
    ShiftableData d = shiftable_data(z);
    MultiPoly sum;
    for (const auto& term : d.sets)
        sum += term.varpi * MultiPoly::beta((int)term.set.size()) * invgroth(term.conjugate);
    return sum;
}

bool is_locally_noncrossing(const Involution& z) {
    ShiftableData d = shiftable_data(z);
    for (const auto& seg : d.segments) {
        if (!seg.mobile) continue;
        for (std::size_t i = 0; i < seg.points.size(); ++i)
            for (std::size_t j = i + 1; j < seg.points.size(); ++j)
                if (z.apply(seg.points[i]) < z.apply(seg.points[j])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// B_inv^+

BinvPlus binv_plus(const Involution& z) {
    BinvPlus out;
    InvStats s = inv_stats(z);
    out.k = s.k;
    out.j = s.j;
    out.binv_members = binv(z);
    int bmax = z.max_support() + 1;

    std::set<Permutation> members;
    // state: current permutation, last step (a, b), and the set of column
    // indices used before the last step (needed by condition (P0))
    using State = std::tuple<Permutation, int, int, unsigned>;
    std::set<State> seen;
    std::queue<State> work;
    for (const Permutation& v : out.binv_members) {
        members.insert(v);
        State st{v, 0, bmax, 0u};
        if (seen.insert(st).second) work.push(st);
    }
    int amin = std::max(out.j, 1);
    while (!work.empty()) {
        auto [cur, last_a, last_b, prev_mask] = work.front();
        work.pop();
        bool last_repeated = last_a != 0 && (prev_mask & (1u << last_a));
        for (int a = amin; a <= out.k; ++a) {
            for (int b = out.k + 1; b <= last_b; ++b) {
                if (last_repeated && a < last_a && b >= last_b) continue;  // (P0)
                if (!(a < z.apply(a) || z.apply(b) < b)) continue;
                auto w = bruhat_cover(cur, a, b);
                if (!w) continue;
                members.insert(*w);
                unsigned mask = prev_mask | (last_a ? (1u << last_a) : 0u);
                State st{*w, a, b, mask};
                if (seen.insert(st).second) work.push(st);
            }
        }
    }

    out.members.assign(members.begin(), members.end());
    std::stable_sort(out.members.begin(), out.members.end(),
                     [](const Permutation& a, const Permutation& b) {
                         long la = a.length(), lb = b.length();
                         if (la != lb) return la < lb;
                         return a < b;
                     });
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < out.members.size(); ++i) index[out.members[i]] = (int)i;
    int maxwin = 0;
    for (const auto& w : out.members) maxwin = std::max(maxwin, w.size());
    for (std::size_t i = 0; i < out.members.size(); ++i) {
        const Permutation& v = out.members[i];
        for (int t = 1; t <= maxwin; ++t) {
            Permutation w = Permutation::simple(t) * v;
            if (w.length() != v.length() + 1) continue;
            auto it = index.find(w);
            if (it != index.end()) out.edges.push_back({(int)i, it->second});
        }
    }
    // weak connectivity, reported only
    if (!out.members.empty()) {
        std::vector<std::vector<int>> adj(out.members.size());
        for (auto [a, b] : out.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> vis(out.members.size(), 0);
        std::queue<int> bfs;
        bfs.push(0);
        vis[0] = 1;
        std::size_t cnt = 1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int t : adj[u])
                if (!vis[t]) {
                    vis[t] = 1;
                    ++cnt;
                    bfs.push(t);
                }
        }
        out.connected = (cnt == out.members.size());
    }
    return out;
}

// ---------------------------------------------------------------------------
// shifts and stable limits

GrothExpansion shift_expansion(const GrothExpansion& e, bool up) {
    GrothExpansion out;
    for (const auto& [w, c] : e.terms()) {
        if (up) {
            out.add(one_times(w, 1), c);
        } else if (w(1) == 1) {
            out.add(shift_down_perm(w, 1), c);
        }
    }
    return out;
}

MultiPoly stable_truncation(const Involution& z, StableKind kind, int steps, int vars) {
    Involution shifted = one_times(z, steps);
    MultiPoly p = kind == StableKind::GQ ? ortho_groth(shifted) : invgroth(shifted);
    return truncate_vars(p, vars);
}

MultiPoly stab_operator(int n, const MultiPoly& p) {
    MultiPoly r = p;
    for (int m = n; m >= 2; --m)
        for (int i = 1; i <= m - 1; ++i) r = isobaric(i, r);
    return r;
}

// ---------------------------------------------------------------------------
// I-Grassmannian expansion

std::vector<IgrassTerm> igrass_expansion(const std::vector<int>& mu_in, int n) {
    std::vector<int> mu = mu_in;
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    igrassmannian(mu, n);  // validates strictness and part bound
    int r = (int)mu.size();
    std::vector<IgrassTerm> out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> lam = mu;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) lam[i] += 1;
        bool ok = lam.empty() || lam[0] <= n;
        for (int i = 0; i + 1 < r && ok; ++i)
            if (lam[i] <= lam[i + 1]) ok = false;
        if (!ok) continue;
        IgrassTerm term;
        term.lambda = lam;
        term.beta_pow = (int)std::popcount(mask);
        std::set<int> cols;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) cols.insert(mu[i] + (i + 1));  // shifted column
        int sign = ((int)cols.size() + term.beta_pow) % 2 == 0 ? 1 : -1;
        term.sign = sign;
        MultiPoly varpi = MultiPoly::constant(1);
        for (int i = 0; i < r; ++i) {
            bool filled = mask & (1u << i);
            bool below_same_col =
                filled && i + 1 < r && (mask & (1u << (i + 1))) && mu[i + 1] + 1 == mu[i];
            bool top_row = !filled || !below_same_col;
            if (!top_row) continue;
            varpi = varpi * (MultiPoly::constant(2 + mu[i] - lam[i]) +
                             MultiPoly::beta() * MultiPoly::var(n + 1 - mu[i]));
        }
        term.varpi = varpi;
        term.conjugate = igrassmannian(lam, n);
        out.push_back(std::move(term));
    }
    std::sort(out.begin(), out.end(), [](const IgrassTerm& a, const IgrassTerm& b) {
        if (a.beta_pow != b.beta_pow) return a.beta_pow < b.beta_pow;
        return a.lambda < b.lambda;
    });
    return out;
}

// ---------------------------------------------------------------------------
// closed forms for the families (2, n) and g_2n

namespace {
void shuffles(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& cur,
              std::size_t i, std::size_t j, std::vector<std::vector<int>>& out) {
    if (i == a.size() && j == b.size()) {
        out.push_back(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffles(a, b, cur, i + 1, j, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffles(a, b, cur, i, j + 1, out);
        cur.pop_back();
    }
}

int letters_between(const std::vector<int>& word, int x, int y) {
    int px = -1, py = -1;
    for (int t = 0; t < (int)word.size(); ++t) {
        if (word[t] == x) px = t;
        if (word[t] == y) py = t;
    }
    return std::abs(px - py) - 1;
}
}  // namespace

GrothExpansion closed_form_t(int n) {
    if (n < 3) throw MathError("t-family closed form needs n >= 3");
    std::vector<int> a{n, 2};
    std::vector<int> b{1};
    for (int t = 3; t <= n - 1; ++t) b.push_back(t);
    b.push_back(n + 1);
    std::vector<std::vector<int>> sh;
    std::vector<int> cur;
    shuffles(a, b, cur, 0, 0, sh);
    GrothExpansion out;
    for (const auto& word : sh) {
        int between = letters_between(word, n, 2);
        bool in_x = word.front() == 1 && word.back() == n + 1 && between <= 1;
        bool in_y = between == 1 || between == 2;
        Coeff c = (in_x ? 2 : 0) + (in_y ? 1 : 0);
        if (c == 0) continue;
        Permutation w = Permutation::from_window(word).inverse();
        out.add(w, MultiPoly::beta(between) * c);
    }
    return out;
}

GrothExpansion closed_form_g(int n) {
    if (n <= 2) throw MathError("g-family closed form needs n > 2");
    Involution z = g_grassmannian(2, n);
    long ell_inv = inv_stats(z).ell_inv;
    std::vector<int> umax_word;
    for (int i = 1; i <= n; ++i) {
        umax_word.push_back(n + i);
        umax_word.push_back(i);
    }
    Permutation u_max = Permutation::from_window(umax_word).inverse();
    GrothExpansion out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> word;
        for (int i = 1; i <= n; ++i) {
            if (mask & (1u << (i - 1))) {
                word.push_back(n + i);
                word.push_back(i);
            } else {
                word.push_back(i);
                word.push_back(n + i);
            }
        }
        Permutation w = Permutation::from_window(word).inverse();
        int beta_pow = (int)(w.length() - ell_inv);
        if (w == u_max) {
            if (n % 2 == 0) out.add(w, MultiPoly::beta(beta_pow));
            continue;
        }
        int odes = 0;
        for (int i : w.des_l())
            if (i % 2 == 1) ++odes;
        if (odes != beta_pow)
            throw InternalError("closed_form_g: |ODes_L| != length difference");
        out.add(w, MultiPoly::beta(beta_pow) * (Coeff(1) << (n - 1 - odes)));
    }
    return out;
}

std::string shiftable_to_json(const ShiftableData& d) {
    nlohmann::json j;
    j["z"] = nlohmann::json::parse(to_json(d.z));
    j["left_endpoints"] = d.left_endpoints;
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& seg : d.segments)
        segs.push_back({{"points", seg.points}, {"mobile", seg.mobile}});
    j["left_segments"] = segs;
    nlohmann::json crb;
    for (const auto& [a, bounds] : d.crossing_bounds) crb[std::to_string(a)] = bounds;
    j["crossing_bounds"] = crb;
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& t : d.sets) {
        sets.push_back({{"set", t.set},
                        {"sigma", t.sigma.window()},
                        {"conjugate", nlohmann::json::parse(to_json(t.conjugate))},
                        {"varpi", nlohmann::json::parse(to_json(t.varpi))},
                        {"theta", t.theta.str()},
                        {"beta_pow", t.set.size()}});
    }
    j["shiftable_sets"] = sets;
    return j.dump();
}

}  // namespace groth
