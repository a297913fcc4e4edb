#include "groth/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace groth {

void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    int workers = std::min<std::size_t>(jobs, n);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

namespace {

// One sweep case: returns a failure description or the empty string.
using Case = std::function<std::string()>;

std::string poly_mismatch(const std::string& input, const MultiPoly& expected,
                          const MultiPoly& actual) {
    if (expected == actual) return "";
    return input + " | " + to_text(expected) + " | " + to_text(actual);
}

std::string exp_mismatch(const std::string& input, const GrothExpansion& expected,
                         const GrothExpansion& actual) {
    if (expected == actual) return "";
    return input + " | " + to_text(expected) + " | " + to_text(actual);
}

std::string map_mismatch(const std::string& input, const std::map<Permutation, Coeff>& expected,
                         const std::map<Permutation, Coeff>& actual) {
    if (expected == actual) return "";
    auto render = [](const std::map<Permutation, Coeff>& m) {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [w, c] : m) {
            if (!first) os << ", ";
            first = false;
            os << w.str() << ":" << c.str();
        }
        os << "}";
        return os.str();
    };
    return input + " | " + render(expected) + " | " + render(actual);
}

std::vector<Involution> vexillary_involutions(int n) {
    std::vector<Involution> out;
    for (const auto& z : all_involutions(n))
        if (is_vexillary(z)) out.push_back(z);
    return out;
}

std::vector<std::vector<int>> strict_partitions_max(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> mu;
        for (int part = n; part >= 1; --part)
            if (mask & (1u << (part - 1))) mu.push_back(part);
        out.push_back(std::move(mu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> partitions_in_box(int rows, int max_part, int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int row, int bound, int weight) {
        out.push_back(cur);
        if (row >= rows) return;
        for (int part = 1; part <= bound && weight + part <= max_weight; ++part) {
            cur.push_back(part);
            rec(row + 1, part, weight + part);
            cur.pop_back();
        }
    };
    rec(0, max_part, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultiPoly two_plus_beta_x(int i) {
    return MultiPoly::constant(2) + MultiPoly::beta() * MultiPoly::var(i);
}
MultiPoly one_plus_beta_x(int i) {
    return MultiPoly::constant(1) + MultiPoly::beta() * MultiPoly::var(i);
}

std::vector<Case> build_cases(const std::string& theorem, int n_max) {
    std::vector<Case> cases;
    auto add = [&](Case c) { cases.push_back(std::move(c)); };

    if (theorem == "qd-thm") {
        for (const auto& z : vexillary_involutions(n_max)) {
            if (!inv_stats(z).quasi_dominant) continue;
            add([z]() { return poly_mismatch(z.str(), ortho_groth(z), qd_formula(z)); });
        }
    } else if (theorem == "ivex-thm") {
        for (const auto& z : vexillary_involutions(n_max))
            add([z]() { return poly_mismatch(z.str(), ortho_groth(z), ivex_formula(z)); });
    } else if (theorem == "iG-thm") {
        for (const auto& z : all_involutions(n_max)) {
            for (int i = 1; i <= n_max; ++i) {
                add([z, i]() {
                    MultiPoly lhs = beta_divdiff(i, invgroth(z));
                    MultiPoly rhs;
                    if (z.apply(i) > z.apply(i + 1)) {
                        Permutation si = Permutation::simple(i);
                        Permutation y = z.apply(i) == i + 1 ? z.to_permutation() * si
                                                            : si * z.to_permutation() * si;
                        rhs = invgroth(Involution::from_permutation(y));
                    } else {
                        rhs = -(MultiPoly::beta() * invgroth(z));
                    }
                    return poly_mismatch(z.str() + " i=" + std::to_string(i), rhs, lhs);
                });
            }
        }
    } else if (theorem == "dom-thm") {
        for (const auto& z : vexillary_involutions(n_max)) {
            if (!inv_stats(z).quasi_dominant) continue;
            add([z]() { return map_mismatch(z.str(), gco(z).values, dom_thm_gco(z)); });
        }
    } else if (theorem == "orthogonal-recursion") {
        for (const auto& z : vexillary_involutions(n_max)) {
            for (int i = 1; i <= n_max; ++i) {
                Permutation si = Permutation::simple(i);
                Permutation yw = si * z.to_permutation() * si;
                if (yw == z.to_permutation()) continue;
                Involution y = Involution::from_permutation(yw);
                if (!is_vexillary(y)) continue;
                add([z, y, i]() {
                    MultiPoly lhs = beta_divdiff(i, ortho_groth(z));
                    MultiPoly rhs = z.apply(i) > z.apply(i + 1)
                                        ? ortho_groth(y)
                                        : -(MultiPoly::beta() * ortho_groth(z));
                    return poly_mismatch(z.str() + " i=" + std::to_string(i), rhs, lhs);
                });
            }
        }
    } else if (theorem == "supp-thm") {
        for (const auto& z : vexillary_involutions(n_max)) {
            add([z]() {
                GrothExpansion lifted = shift_expansion(expand(ortho_groth(z)), /*up=*/true);
                GrothExpansion direct = expand(ortho_groth(one_times(z, 1)));
                bool equal = lifted == direct;
                bool expected = z.is_identity() || z.apply(1) == 1;
                if (equal == expected) return std::string();
                return z.str() + " | shift equality iff z(1)=1 | violated";
            });
        }
    } else if (theorem == "shift-cor") {
        for (const auto& z : vexillary_involutions(n_max)) {
            int prefix = z.is_identity() ? 0 : inv_stats(z).j;
            for (int n = 1; n <= prefix; ++n) {
                add([z, n]() {
                    // values of GC at the permutations of the form 1^n x w
                    auto down = gco(shift_down_inv(z, n)).values;
                    std::map<Permutation, Coeff> remapped;
                    for (const auto& [w, c] : gco(z).values) {
                        bool fixes = true;
                        for (int t = 1; t <= n; ++t)
                            if (w(t) != t) fixes = false;
                        if (fixes) remapped[shift_down_perm(w, n)] = c;
                    }
                    return map_mismatch(z.str() + " n=" + std::to_string(n), down, remapped);
                });
            }
            if (z.is_identity() || z.apply(1) == 1) {
                for (int n = 1; n <= 2; ++n) {
                    add([z, n]() {
                        auto up = gco(one_times(z, n)).values;
                        std::map<Permutation, Coeff> remapped;
                        for (const auto& [w, c] : gco(z).values) remapped[one_times(w, n)] = c;
                        return map_mismatch(z.str() + " 1^n n=" + std::to_string(n), up, remapped);
                    });
                }
            }
        }
    } else if (theorem == "b+conj") {
        for (const auto& z : vexillary_involutions(n_max)) {
            add([z]() {
                auto supp = gco(z).values;
                auto inner = binv(z);
                auto plus = binv_plus(z);
                std::set<Permutation> outer(plus.members.begin(), plus.members.end());
                for (const auto& v : inner) {
                    if (!supp.count(v))
                        return z.str() + " | binv inside supp | missing " + v.str();
                }
                for (const auto& [w, c] : supp) {
                    if (!outer.count(w))
                        return z.str() + " | supp inside binv+ | extra " + w.str();
                }
                return std::string();
            });
        }
    } else if (theorem == "fkgsp") {
        if (n_max % 2 == 0) {
            for (const auto& z : all_fpf_involutions(n_max)) {
                add([z]() {
                    auto [poly, exp] = symp_groth(z);
                    GrothExpansion direct = expand(poly);
                    if (!(direct == exp))
                        return exp_mismatch(z.str(), exp, direct);
                    for (const auto& [w, c] : direct.terms()) {
                        if (c.size() != 1 || c.terms().begin()->second != 1 ||
                            !c.terms().begin()->first.x.empty())
                            return z.str() + " | 0/1 beta powers | " + to_text(c) + " at " + w.str();
                    }
                    return std::string();
                });
            }
        }
    } else if (theorem == "lenart") {
        int nv = std::min(n_max, 5);
        for (int k = 1; k <= 4; ++k) {
            for (const auto& v : all_permutations(nv)) {
                if (v.length() > 6) continue;
                add([k, v]() {
                    MultiPoly direct = (MultiPoly::constant(1) +
                                        MultiPoly::beta() * MultiPoly::var(k)) *
                                       grothendieck(v);
                    return exp_mismatch("k=" + std::to_string(k) + " v=" + v.str(),
                                        expand(direct), lenart_transition(k, v));
                });
            }
        }
    } else if (theorem == "lensot") {
        int nv = std::min(n_max, 5);
        for (int k = 1; k <= 4; ++k) {
            for (int p = 1; p <= k; ++p) {
                for (const auto& v : all_permutations(nv)) {
                    if (v.length() > 6) continue;
                    add([p, k, v]() {
                        std::vector<int> ones(p, 1);
                        MultiPoly direct = grothendieck(grassmannian_perm(ones, k)) * grothendieck(v);
                        return exp_mismatch(
                            "p=" + std::to_string(p) + " k=" + std::to_string(k) + " v=" + v.str(),
                            expand(direct), lensot_product(p, k, v));
                    });
                }
                for (const auto& lam : partitions_in_box(k, 4, 6)) {
                    add([p, k, lam]() {
                        std::vector<int> ones(p, 1);
                        MultiPoly direct =
                            grothendieck(grassmannian_perm(ones, k)) * grothendieck(grassmannian_perm(lam, k));
                        std::ostringstream os;
                        os << "p=" << p << " k=" << k << " lambda=[";
                        for (int part : lam) os << part << " ";
                        os << "]";
                        return exp_mismatch(os.str(), expand(direct),
                                            grassmannian_pieri(p, k, lam));
                    });
                }
            }
        }
    } else if (theorem == "pieri") {
        int nv = std::min(n_max, 5);
        for (int k = 1; k <= 4; ++k) {
            for (const auto& v : all_permutations(nv)) {
                add([k, v]() {
                    // pieri_chains_from throws if two chains share an endpoint
                    auto chains = pieri_chains_from(v, k);
                    for (const auto& [w, chain] : chains) {
                        long diff = w.length() - v.length();
                        if (w == v) continue;
                        if (chain.F < 1)
                            return v.str() + " k=" + std::to_string(k) + " | F>=1 | " + w.str();
                        if (chain.F + chain.P > diff)
                            return v.str() + " k=" + std::to_string(k) + " | F+P<=l(w)-l(v) | " +
                                   w.str();
                    }
                    return std::string();
                });
            }
        }
    } else if (theorem == "1gr-lem") {
        int nmax = std::min(n_max, 5);
        for (int n = 1; n <= nmax; ++n) {
            for (int j = 0; j <= n; ++j) {
                add([n, j]() {
                    std::vector<int> ones(j, 1);
                    Permutation v = grassmannian_perm(ones, n);
                    GrothExpansion rhs;
                    for (int i = j; i <= n; ++i) {
                        std::vector<int> oi(i, 1);
                        Coeff sign = (i - j) % 2 == 0 ? 1 : -1;
                        rhs.add(grassmannian_perm(oi, n), MultiPoly::beta(i - j) * sign);
                    }
                    for (int i = j + 1; i <= n + 1; ++i) {
                        std::vector<int> oi(i, 1);
                        Coeff sign = (i - j) % 2 == 0 ? -1 : 1;
                        rhs.add(grassmannian_perm(oi, n + 1), MultiPoly::beta(i - j) * sign);
                    }
                    MultiPoly direct =
                        (MultiPoly::constant(1) + MultiPoly::beta() * MultiPoly::var(n + 1)) *
                        grothendieck(v);
                    std::string tag = "n=" + std::to_string(n) + " j=" + std::to_string(j);
                    std::string a = exp_mismatch(tag, expand(direct), rhs);
                    if (!a.empty()) return a;
                    return exp_mismatch(tag + " (transition)", rhs, lenart_transition(n + 1, v));
                });
            }
        }
    } else if (theorem == "prod-lem") {
        for (int k = 1; k <= n_max; ++k) {
            add([k]() {
                MultiPoly direct = MultiPoly::constant(1);
                for (int i = 1; i <= k; ++i) direct = direct * two_plus_beta_x(i);
                return exp_mismatch("k=" + std::to_string(k), expand(direct),
                                    two_power_product(k));
            });
        }
    } else if (theorem == "igrass-cor") {
        for (int n = 1; n <= std::min(n_max, 5); ++n) {
            for (const auto& mu : strict_partitions_max(n)) {
                add([mu, n]() {
                    MultiPoly sum;
                    for (const auto& term : igrass_expansion(mu, n)) {
                        MultiPoly t = term.varpi * MultiPoly::beta(term.beta_pow) *
                                      invgroth(term.conjugate);
                        sum += term.sign > 0 ? t : -t;
                    }
                    std::ostringstream os;
                    os << "mu=[";
                    for (int part : mu) os << part << " ";
                    os << "] n=" << n;
                    return poly_mismatch(os.str(), ortho_groth(igrassmannian(mu, n)), sum);
                });
            }
        }
    } else if (theorem == "supp-prop") {
        for (const auto& z : all_involutions(n_max)) {
            if (z.is_identity()) continue;
            add([z]() {
                int a = z.max_support() + 1, b = 0;
                for (const auto& [lo, hi] : z.cycles()) {
                    a = std::min(a, lo);
                    b = std::max(b, hi);
                }
                for (const auto& v : binv(z)) {
                    for (int i = 1; i < a; ++i)
                        if (v(i) != i) return z.str() + " | supp(v) in [a,b] | " + v.str();
                    if (v.size() > b) return z.str() + " | supp(v) in [a,b] | " + v.str();
                }
                for (const auto& w : binv_plus(z).members) {
                    for (int i = 1; i < a - 1; ++i)
                        if (w(i) != i) return z.str() + " | supp(w) in [a-1,b+1] | " + w.str();
                    if (w.size() > b + 1) return z.str() + " | supp(w) in [a-1,b+1] | " + w.str();
                }
                return std::string();
            });
        }
    } else {
        throw std::invalid_argument("unknown theorem id: " + theorem);
    }
    return cases;
}

}  // namespace

std::vector<std::string> verify_ids() {
    return {"qd-thm",  "ivex-thm", "iG-thm", "dom-thm", "orthogonal-recursion",
            "supp-thm", "shift-cor", "b+conj", "fkgsp",  "lenart",
            "lensot",  "pieri",    "1gr-lem", "prod-lem", "igrass-cor",
            "supp-prop"};
}

SweepReport run_verify(const std::string& theorem, int n_max, int jobs) {
    auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.theorem = theorem;
    report.n_max = n_max;
    std::vector<Case> cases = build_cases(theorem, n_max);
    report.cases_checked = (long)cases.size();
    std::vector<std::string> results(cases.size());
    parallel_for(jobs, cases.size(), [&](std::size_t i) { results[i] = cases[i](); });
    for (auto& r : results)
        if (!r.empty()) report.failures.push_back(std::move(r));
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_text(const SweepReport& r) {
    std::ostringstream os;
    os << "theorem=" << r.theorem << " n_max=" << r.n_max << " cases=" << r.cases_checked
       << " failures=" << r.failures.size() << " wall=" << r.wall_time << "s";
    for (const auto& f : r.failures) os << "\n  FAIL " << f;
    return os.str();
}

std::string report_json(const SweepReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["n_max"] = r.n_max;
    j["cases_checked"] = r.cases_checked;
    j["failures"] = r.failures;
    j["wall_time"] = r.wall_time;
    return j.dump();
}

std::vector<Coeff> values_table(int n) {
    std::vector<int> win(n);
    for (int i = 0; i < n; ++i) win[i] = n - i;
    Involution w0 = Involution::from_permutation(Permutation::from_window(win));
    std::set<Coeff> distinct;
    for (const auto& [w, c] : gco(w0).values) distinct.insert(c);
    return std::vector<Coeff>(distinct.begin(), distinct.end());
}

EqualityCensus equality_census(int n, int jobs, const std::function<void(long, long)>& progress) {
    auto zs = vexillary_involutions(n);
    EqualityCensus census;
    std::vector<int> dominant(zs.size()), equal(zs.size());
    std::atomic<long> done{0};
    parallel_for(jobs, zs.size(), [&](std::size_t i) {
        const Involution& z = zs[i];
        dominant[i] = is_dominant(z.to_permutation());
        auto supp = gco(z).values;
        auto plus = binv_plus(z);
        bool eq = supp.size() == plus.members.size();
        if (eq) {
            for (const auto& w : plus.members)
                if (!supp.count(w)) eq = false;
        }
        equal[i] = eq;
        long d = ++done;
        if (progress) progress(d, (long)zs.size());
    });
    for (std::size_t i = 0; i < zs.size(); ++i) {
        census.vexillary_total++;
        census.vexillary_equal += equal[i];
        if (dominant[i]) {
            census.dominant_total++;
            census.dominant_equal += equal[i];
        }
    }
    return census;
}

LncCounts lnc_counts(int n) {
    LncCounts counts;
    for (int m = 1; m <= n; ++m) {
        long total = 0;
        for (const auto& z : vexillary_involutions(m))
            if (is_locally_noncrossing(z)) ++total;
        counts.vexillary.push_back(total);
        long fixing = 0;
        for (const auto& z : vexillary_involutions(m + 1))
            if ((z.is_identity() || z.apply(1) == 1) && is_locally_noncrossing(z)) ++fixing;
        counts.fixing_one.push_back(fixing);
    }
    return counts;
}

std::vector<WijReportRow> wij_report(int n, int jobs) {
    std::vector<std::pair<int, int>> grid;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) grid.push_back({i, j});
    std::vector<WijReportRow> rows(grid.size());
    parallel_for(jobs, grid.size(), [&](std::size_t t) {
        auto [i, j] = grid[t];
        Involution z = w_family(i, j);
        auto supp = gco(z).values;
        auto plus = binv_plus(z);
        bool eq = supp.size() == plus.members.size();
        if (eq) {
            for (const auto& w : plus.members)
                if (!supp.count(w)) eq = false;
        }
        rows[t] = {i, j, i == 1 || (j - i) % 2 == 1, eq};
    });
    return rows;
}

std::string export_binv_plus_dot(const Involution& z) {
    BinvPlus plus = binv_plus(z);
    std::map<Permutation, Coeff> values = gco(z).values;
    std::ostringstream os;
    os << "digraph binv_plus {\n  node [shape=box];\n";
    for (const auto& w : plus.members) {
        Coeff c = values.count(w) ? values.at(w) : 0;
        os << "  \"" << w.inverse().str() << "\" [label=\"" << w.inverse().str() << ":" << c.str()
           << "\"";
        if (plus.binv_members.count(w)) os << ", style=filled, fillcolor=lightskyblue";
        os << "];\n";
    }
    std::vector<std::pair<int, int>> edges = plus.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
        os << "  \"" << plus.members[a].inverse().str() << "\" -> \""
           << plus.members[b].inverse().str() << "\";\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_binv_plus_json(const Involution& z) {
    BinvPlus plus = binv_plus(z);
    std::map<Permutation, Coeff> values = gco(z).values;
    nlohmann::json j;
    j["z"] = nlohmann::json::parse(to_json(z));
    j["k"] = plus.k;
    j["j"] = plus.j;
    j["connected"] = plus.connected;
    nlohmann::json members = nlohmann::json::array();
    for (const auto& w : plus.members) {
        Coeff c = values.count(w) ? values.at(w) : 0;
        members.push_back({{"w", w.window()},
                           {"w_inv", w.inverse().str()},
                           {"gco", c.str()},
                           {"in_binv", plus.binv_members.count(w) > 0}});
    }
    j["members"] = members;
    nlohmann::json edges = nlohmann::json::array();
    auto sorted = plus.edges;
    std::sort(sorted.begin(), sorted.end());
    for (auto [a, b] : sorted) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump();
}

}  // namespace groth
