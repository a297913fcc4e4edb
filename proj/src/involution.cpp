#include "groth/involution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace groth {

Involution Involution::from_cycles(std::vector<std::pair<int, int>> cycles) {
    std::set<int> seen;
    for (auto& [a, b] : cycles) {
        if (a > b) std::swap(a, b);
        if (a < 1 || a == b) throw MathError("invalid cycle");
        if (seen.count(a) || seen.count(b)) throw MathError("cycles not disjoint");
        seen.insert(a);
        seen.insert(b);
    }
    std::sort(cycles.begin(), cycles.end());
    Involution z;
    z.cycles_ = std::move(cycles);
    for (auto& [a, b] : z.cycles_) z.maxsupp_ = std::max(z.maxsupp_, b);
    return z;
}

Involution Involution::from_permutation(const Permutation& w) {
    std::vector<std::pair<int, int>> cycles;
    for (int i = 1; i <= w.size(); ++i) {
        int j = w(i);
        if (w(j) != i) throw MathError("permutation is not an involution");
        if (i < j) cycles.push_back({i, j});
    }
    return from_cycles(std::move(cycles));
}

int Involution::apply(int i) const {
    for (const auto& [a, b] : cycles_) {
        if (a == i) return b;
        if (b == i) return a;
    }
    return i;
}

Permutation Involution::to_permutation() const {
    std::vector<int> win(max_support());
    std::iota(win.begin(), win.end(), 1);
    for (const auto& [a, b] : cycles_) std::swap(win[a - 1], win[b - 1]);
    return Permutation::from_window(std::move(win));
}

std::string Involution::str() const {
    if (cycles_.empty()) return "()";
    std::ostringstream os;
    for (const auto& [a, b] : cycles_) os << "(" << a << "," << b << ")";
    return os.str();
}

InvStats inv_stats(const Involution& z) {
    InvStats s;
    Permutation w = z.to_permutation();
    s.cyc = (long)z.cycles().size();
    s.ell = w.length();
    if ((s.ell + s.cyc) % 2 != 0) throw InternalError("parity of ell + cyc");
    s.ell_inv = (s.ell + s.cyc) / 2;
    int n = z.max_support();
    for (int i = 1; i <= n; ++i)
        if (z.apply(i) > z.apply(i + 1) && z.apply(i + 1) <= i) s.des_v.insert(i);
    int k = 0;
    for (int i = 1; i <= n; ++i)
        if (z.apply(i) > i) k = i;
    s.k = k;
    s.quasi_dominant = (s.k == s.cyc);
    if (z.is_identity()) {
        s.j = 1;
    } else {
        int j = 0;
        while (z.apply(j + 1) == j + 1) ++j;
        s.j = j;
    }
    // cross-check ell_inv = |upper half of the Rothe diagram|
    long half = 0;
    for (const auto& [i, jj] : rothe(w).diagram)
        if (i <= jj) ++half;
    if (half != s.ell_inv) throw InternalError("ell_inv != |D^(z)|");
    return s;
}

bool is_vexillary(const Involution& z) { return is_vexillary(z.to_permutation()); }

namespace {
// Forbidden induced arc patterns, each as (vertex count, arc list).
const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> kForbiddenArcs = {
    {4, {{1, 2}, {3, 4}}},
    {6, {{1, 4}, {3, 6}}},
    {7, {{1, 5}, {3, 7}, {4, 6}}},
    {7, {{1, 5}, {2, 4}, {3, 7}}},
    {8, {{1, 6}, {2, 5}, {3, 8}, {4, 7}}},
};
}  // namespace

bool is_vexillary_by_arcs(const Involution& z) {
    int n = z.max_support();
    for (const auto& [m, arcs] : kForbiddenArcs) {
        if (m > n) continue;
        std::vector<int> pick(m);
        // enumerate m-subsets of [n] as increasing sequences
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            // the chosen vertices must be closed under z, so that the induced
            // diagram is an honest sub-involution with genuine fixed points
            bool match = true;
            for (int a = 0; a < m && match; ++a) {
                int partner = z.apply(idx[a]);
                if (partner != idx[a] &&
                    std::find(idx.begin(), idx.end(), partner) == idx.end())
                    match = false;
            }
            for (int a = 0; a < m && match; ++a) {
                for (int b = a + 1; b < m && match; ++b) {
                    bool has = z.apply(idx[a]) == idx[b];
                    bool want = std::find(arcs.begin(), arcs.end(),
                                          std::make_pair(a + 1, b + 1)) != arcs.end();
                    if (has != want) match = false;
                }
            }
            if (match) return false;
            // next subset
            int t = m - 1;
            while (t >= 0 && idx[t] == n - (m - 1 - t)) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return true;
}

Permutation alpha_inv(const Involution& z) {
    if (z.is_identity()) return Permutation::identity();
    int q = z.max_support();
    std::vector<int> word;
    std::set<int> seen;
    for (int a = 1; a <= q; ++a) {
        int b = z.apply(a);
        if (b < a) continue;
        if (!seen.count(b)) {
            word.push_back(b);
            seen.insert(b);
        }
        if (!seen.count(a)) {
            word.push_back(a);
            seen.insert(a);
        }
    }
    return Permutation::from_window(std::move(word)).inverse();
}

namespace {
// Closure of the one-line windows under substitutions among the value
// patterns {cab, cba, bca} on three consecutive positions.
std::set<std::vector<int>> sim_closure(const std::vector<int>& start) {
    std::set<std::vector<int>> seen{start};
    std::queue<std::vector<int>> work;
    work.push(start);
    int n = (int)start.size();
    while (!work.empty()) {
        std::vector<int> u = work.front();
        work.pop();
        for (int i = 0; i + 2 < n; ++i) {
            int x = u[i], y = u[i + 1], zv = u[i + 2];
            int c = std::max({x, y, zv});
            int a = std::min({x, y, zv});
            int b = x + y + zv - a - c;
            bool ok = (x == c && y == a && zv == b) ||  // cab
                      (x == c && y == b && zv == a) ||  // cba
                      (x == b && y == c && zv == a);    // bca
            if (!ok) continue;
            const int pats[3][3] = {{c, a, b}, {c, b, a}, {b, c, a}};
            for (const auto& pat : pats) {
                std::vector<int> v = u;
                v[i] = pat[0];
                v[i + 1] = pat[1];
                v[i + 2] = pat[2];
                if (seen.insert(v).second) work.push(v);
            }
        }
    }
    return seen;
}
}  // namespace

std::set<Permutation> binv(const Involution& z) {
    Permutation a = alpha_inv(z);
    int n = std::max(a.size(), z.max_support());
    std::set<Permutation> out;
    for (const auto& win : sim_closure(a.inverse().window_padded(n)))
        out.insert(Permutation::from_window(win).inverse());
    return out;
}

FpfInvolution::FpfInvolution(int n, const Involution& z) : n_(n), z_(z) {
    if (n < 2 || n % 2 != 0) throw MathError("fpf: n must be even and positive");
    if (z.max_support() > n) throw MathError("fpf: support exceeds n");
    for (int i = 1; i <= n; ++i)
        if (z.apply(i) == i) throw MathError("fpf: fixed point in [n]");
}

Permutation alpha_fpf(const FpfInvolution& z) {
    std::vector<int> word;
    for (int a = 1; a <= z.n(); ++a) {
        int b = z.base().apply(a);
        if (a < b) {
            word.push_back(a);
            word.push_back(b);
        }
    }
    return Permutation::from_window(std::move(word)).inverse();
}

std::set<Permutation> fpf_class(const FpfInvolution& z) {
    Permutation a = alpha_fpf(z);
    int n = std::max(a.size(), z.n());
    std::set<std::vector<int>> seen{a.inverse().window_padded(n)};
    std::queue<std::vector<int>> work;
    work.push(*seen.begin());
    while (!work.empty()) {
        std::vector<int> u = work.front();
        work.pop();
        for (int i = 0; i + 3 < n; i += 2) {  // windows at odd 1-based positions
            int vals[4] = {u[i], u[i + 1], u[i + 2], u[i + 3]};
            int s[4];
            std::copy(vals, vals + 4, s);
            std::sort(s, s + 4);
            int A = s[0], B = s[1], C = s[2], D = s[3];
            auto is = [&](int p, int q, int r, int t) {
                return vals[0] == p && vals[1] == q && vals[2] == r && vals[3] == t;
            };
            bool ok = is(A, D, B, C) || is(B, C, A, D) || is(B, D, A, C);
            if (!ok) continue;
            const int pats[3][4] = {{A, D, B, C}, {B, C, A, D}, {B, D, A, C}};
            for (const auto& pat : pats) {
                std::vector<int> v = u;
                for (int t = 0; t < 4; ++t) v[i + t] = pat[t];
                if (seen.insert(v).second) work.push(v);
            }
        }
    }
    std::set<Permutation> out;
    for (const auto& win : seen) out.insert(Permutation::from_window(win).inverse());
    return out;
}

Involution dom_pq(int p, int q) {
    if (p == 0 && q == 0) return Involution();
    if (p < 1 || q < 2 * p) throw MathError("dom_pq requires q >= 2p >= 2");
    std::vector<std::pair<int, int>> cycles;
    for (int i = 1; i <= p; ++i) cycles.push_back({i, q + 1 - i});
    return Involution::from_cycles(std::move(cycles));
}

namespace {
// Distinguished ascent of a non-dominant vexillary involution (from the
// Lehmer code: the smallest i with c_i < c_{i+1} maximizing c_{i+1}).
int distinguished_ascent(const Permutation& w) {
    auto code = lehmer_code(w);
    code.push_back(0);
    int m = -1, j = -1;
    for (int i = 0; i + 1 < (int)code.size(); ++i) {
        if (code[i] < code[i + 1] && code[i + 1] > m) {
            m = code[i + 1];
            j = i + 1;  // 1-based index
        }
    }
    return j;
}
}  // namespace

DomPath dom_path(const Involution& z) {
    if (!is_vexillary(z)) throw MathError("not vexillary: " + z.str());
    DomPath path;
    InvStats stats = inv_stats(z);
    path.p = (int)stats.cyc;
    path.q = z.max_support();
    path.involutions.push_back(z);
    Involution cur = z;
    Involution target = dom_pq(path.p, path.q);
    long guard = 0;
    while (!(cur == target)) {
        if (++guard > 10000) throw InternalError("dom_path does not terminate");
        Permutation w = cur.to_permutation();
        int j;
        if (!is_dominant(w)) {
            j = distinguished_ascent(w);
            if (j < 1) throw InternalError("no distinguished ascent");
        } else {
            // dominant ascent: minimal i in [p] with c^_i < q - 2i + 1,
            // where c^_i = lambda_i - i + 1 counts upper cells in row i
            auto code = lehmer_code(w);
            int i0 = -1;
            for (int i = 1; i <= path.p; ++i) {
                int lam = i <= (int)code.size() ? code[i - 1] : 0;
                if (lam - i + 1 < path.q - 2 * i + 1) {
                    i0 = i;
                    break;
                }
            }
            if (i0 < 0) throw InternalError("dominant but no ascent and not dom_pq");
            j = cur.apply(i0);
        }
        Permutation sj = Permutation::simple(j);
        Involution next = Involution::from_permutation(sj * w * sj);
        if (next.to_permutation().length() != w.length() + 2)
            throw InternalError("dom_path step does not raise length by 2");
        if (!is_vexillary(next))
            throw InternalError("dom_path step leaves the vexillary class");
        path.indices.push_back(j);
        path.involutions.push_back(next);
        cur = next;
    }
    return path;
}

Involution t_family(int n) {
    if (n < 2) throw MathError("t_n requires n >= 2");
    return Involution::from_cycles({{1, n}});
}

Involution g_family(int n) {
    if (n < 1) throw MathError("g_n requires n >= 1");
    std::vector<std::pair<int, int>> cycles;
    for (int i = 1; i <= n; ++i) cycles.push_back({i, n + i});
    return Involution::from_cycles(std::move(cycles));
}

Involution w_family(int i, int j) {
    if (i < 1 || j <= i) throw MathError("w_ij requires 1 <= i < j");
    int k = (j - i - 1) / 2;
    std::vector<std::pair<int, int>> cycles;
    for (int t = 0; t <= k; ++t) cycles.push_back({i + t, j - t});
    return Involution::from_cycles(std::move(cycles));
}

Involution g_grassmannian(int i, int j) {
    if (i < 1 || j <= i) throw MathError("g_ij requires 0 < i < j");
    int m = j - i + 1;
    std::vector<int> mu(m);
    for (int t = 0; t < m; ++t) mu[t] = m - t;
    return igrassmannian(mu, j);
}

Involution igrassmannian(const std::vector<int>& mu, int n) {
    std::vector<int> m = mu;
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] <= m[i + 1]) throw MathError("not strict");
    if (!m.empty() && m[0] > n) throw MathError("part too large");
    if (!m.empty() && m.back() < 1) throw MathError("not strict");
    std::vector<std::pair<int, int>> cycles;
    for (std::size_t i = 0; i < m.size(); ++i)
        cycles.push_back({n + 1 - m[i], n + 1 + (int)i});
    return Involution::from_cycles(std::move(cycles));
}

std::vector<int> inv_shape(const Involution& z) {
    if (!is_vexillary(z)) throw MathError("not vexillary: " + z.str());
    Permutation w = z.to_permutation();
    std::map<int, int> rows;
    for (const auto& [i, j] : rothe(w).diagram)
        if (i <= j) rows[i]++;
    std::vector<int> sh;
    for (const auto& [i, c] : rows) sh.push_back(c);
    std::sort(sh.rbegin(), sh.rend());
    for (std::size_t i = 0; i + 1 < sh.size(); ++i)
        if (sh[i] <= sh[i + 1]) throw InternalError("involution shape is not strict");
    return sh;
}

Involution one_times(const Involution& z, int n) {
    std::vector<std::pair<int, int>> cycles;
    for (const auto& [a, b] : z.cycles()) cycles.push_back({a + n, b + n});
    return Involution::from_cycles(std::move(cycles));
}

Involution shift_down_inv(const Involution& z, int n) {
    std::vector<std::pair<int, int>> cycles;
    for (const auto& [a, b] : z.cycles()) {
        if (a <= n) throw MathError("not shiftable: involution moves " + std::to_string(a));
        cycles.push_back({a - n, b - n});
    }
    return Involution::from_cycles(std::move(cycles));
}

Involution dominant_involution(const std::vector<int>& lambda) {
    std::vector<int> lam = lambda;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    // symmetry check lambda = lambda^T
    for (std::size_t i = 0; i < lam.size(); ++i) {
        int col = 0;
        for (int part : lam)
            if (part > (int)i) ++col;
        if (col != lam[i]) throw MathError("not symmetric");
    }
    Permutation w = lehmer_decode(lam);
    return Involution::from_permutation(w);
}

Involution parse_involution(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s.push_back(c);
    if (s.empty() || s == "()" || s == "1") return Involution();
    try {
        if (s[0] == '(') {
            std::vector<std::pair<int, int>> cycles;
            std::size_t pos = 0;
            while (pos < s.size()) {
                if (s[pos] != '(') throw std::invalid_argument("bad cycle notation");
                std::size_t close = s.find(')', pos);
                if (close == std::string::npos) throw std::invalid_argument("bad cycle notation");
                std::string body = s.substr(pos + 1, close - pos - 1);
                std::size_t comma = body.find(',');
                if (comma == std::string::npos) throw std::invalid_argument("bad cycle notation");
                int a = std::stoi(body.substr(0, comma));
                int b = std::stoi(body.substr(comma + 1));
                cycles.push_back({a, b});
                pos = close + 1;
            }
            return Involution::from_cycles(std::move(cycles));
        }
        return Involution::from_permutation(parse_permutation(s));
    } catch (const MathError& e) {
        throw std::invalid_argument(std::string("bad involution: ") + e.what());
    }
}

namespace {
void involutions_rec(std::vector<int>& state, int n, std::vector<Involution>& out,
                     std::vector<std::pair<int, int>>& cycles) {
    int i = 1;
    while (i <= n && state[i - 1] != 0) ++i;
    if (i > n) {
        out.push_back(Involution::from_cycles(cycles));
        return;
    }
    state[i - 1] = i;  // fixed point
    involutions_rec(state, n, out, cycles);
    state[i - 1] = 0;
    for (int j = i + 1; j <= n; ++j) {
        if (state[j - 1] != 0) continue;
        state[i - 1] = j;
        state[j - 1] = i;
        cycles.push_back({i, j});
        involutions_rec(state, n, out, cycles);
        cycles.pop_back();
        state[i - 1] = 0;
        state[j - 1] = 0;
    }
}
}  // namespace

std::vector<Involution> all_involutions(int n) {
    std::vector<int> state(n, 0);
    std::vector<Involution> out;
    std::vector<std::pair<int, int>> cycles;
    involutions_rec(state, n, out, cycles);
    return out;
}

std::vector<FpfInvolution> all_fpf_involutions(int n) {
    if (n % 2 != 0) throw MathError("fpf: n must be even");
    std::vector<FpfInvolution> out;
    for (const auto& z : all_involutions(n)) {
        bool fpf = true;
        for (int i = 1; i <= n && fpf; ++i)
            if (z.apply(i) == i) fpf = false;
        if (fpf) out.push_back(FpfInvolution(n, z));
    }
    return out;
}

std::string to_json(const Involution& z) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& [a, b] : z.cycles()) cycles.push_back({a, b});
    return cycles.dump();
}

}  // namespace groth
