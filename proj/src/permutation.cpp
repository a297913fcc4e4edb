#include "groth/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace groth {

void Permutation::canonicalize() {
    while (!win_.empty() && win_.back() == (int)win_.size()) win_.pop_back();
}

Permutation Permutation::from_window(std::vector<int> win) {
    std::vector<int> sorted = win;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != (int)i + 1)
            throw MathError("window is not a rearrangement of 1..n");
    }
    Permutation w;
    w.win_ = std::move(win);
    w.canonicalize();
    return w;
}

Permutation Permutation::simple(int i) {
    if (i < 1) throw MathError("simple transposition index must be positive");
    return transposition(i, i + 1);
}

Permutation Permutation::transposition(int a, int b) {
    if (a == b || a < 1 || b < 1) throw MathError("invalid transposition");
    if (a > b) std::swap(a, b);
    std::vector<int> win(b);
    std::iota(win.begin(), win.end(), 1);
    std::swap(win[a - 1], win[b - 1]);
    return from_window(std::move(win));
}

std::vector<int> Permutation::window_padded(int n) const {
    std::vector<int> w(std::max<int>(n, (int)win_.size()));
    std::iota(w.begin(), w.end(), 1);
    std::copy(win_.begin(), win_.end(), w.begin());
    return w;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(win_.size());
    for (std::size_t i = 0; i < win_.size(); ++i) inv[win_[i] - 1] = (int)i + 1;
    Permutation w;
    w.win_ = std::move(inv);
    w.canonicalize();
    return w;
}

Permutation Permutation::operator*(const Permutation& v) const {
    int n = std::max(size(), v.size());
    std::vector<int> win(n);
    for (int i = 1; i <= n; ++i) win[i - 1] = (*this)(v(i));
    Permutation w;
    w.win_ = std::move(win);
    w.canonicalize();
    return w;
}

Permutation Permutation::swap_positions(int a, int b) const {
    if (a == b || a < 1 || b < 1) throw MathError("invalid transposition");
    std::vector<int> win = window_padded(std::max(a, b));
    std::swap(win[a - 1], win[b - 1]);
    Permutation w;
    w.win_ = std::move(win);
    w.canonicalize();
    return w;
}

long Permutation::length() const {
    long inv = 0;
    for (std::size_t i = 0; i < win_.size(); ++i)
        for (std::size_t j = i + 1; j < win_.size(); ++j)
            if (win_[i] > win_[j]) ++inv;
    return inv;
}

std::set<int> Permutation::des_r() const {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < win_.size(); ++i)
        if (win_[i] > win_[i + 1]) d.insert((int)i + 1);
    return d;
}

std::set<int> Permutation::des_l() const { return inverse().des_r(); }

int Permutation::max_descent() const {
    auto d = des_r();
    return d.empty() ? 0 : *d.rbegin();
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
    int n = std::max(size(), o.size());
    for (int i = 1; i <= n; ++i) {
        int a = (*this)(i), b = o(i);
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

std::string Permutation::str() const {
    if (win_.empty()) return "1";
    std::ostringstream os;
    if (win_.size() <= 9) {
        for (int v : win_) os << v;
    } else {
        for (std::size_t i = 0; i < win_.size(); ++i) {
            if (i) os << ",";
            os << win_[i];
        }
    }
    return os.str();
}

RotheData rothe(const Permutation& w) {
    RotheData r;
    int n = w.size();
    Permutation winv = w.inverse();
    std::vector<int> code;
    for (int i = 1; i <= n; ++i) {
        int row = 0;
        for (int j = 1; j < w(i); ++j) {
            if (i < winv(j)) {
                r.diagram.insert({i, j});
                ++row;
            }
        }
        code.push_back(row);
    }
    while (!code.empty() && code.back() == 0) code.pop_back();
    r.code = std::move(code);
    for (const auto& cell : r.diagram) {
        auto [i, j] = cell;
        if (!r.diagram.count({i + 1, j}) && !r.diagram.count({i, j + 1}))
            r.essential.insert(cell);
    }
    return r;
}

std::vector<int> lehmer_code(const Permutation& w) { return rothe(w).code; }

Permutation lehmer_decode(const std::vector<int>& code) {
    // w(i) is the (code_i + 1)-th smallest value not yet used.
    int n = (int)code.size();
    int m = n;
    for (int i = 0; i < n; ++i) m = std::max(m, n + code[i]);
    std::vector<int> avail(m);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> win;
    for (int i = 0; i < n; ++i) {
        int c = code[i];
        if (c >= (int)avail.size())
            throw InternalError("lehmer_decode: code entry out of range");
        win.push_back(avail[c]);
        avail.erase(avail.begin() + c);
    }
    for (int v : avail) win.push_back(v);
    return Permutation::from_window(std::move(win));
}

bool is_vexillary(const Permutation& w) {
    // scan for a 2143 pattern
    int n = w.size();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (w(b) >= w(a)) continue;  // need w(b) < w(a): the "21"
            for (int c = b + 1; c <= n; ++c) {
                if (w(c) <= w(a)) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (w(a) < w(d) && w(d) < w(c)) return false;
            }
        }
    return true;
}

bool is_vexillary_by_rows(const Permutation& w) {
    int n = w.size();
    Permutation winv = w.inverse();
    std::vector<std::set<int>> rows;
    for (int i = 1; i <= n; ++i) {
        std::set<int> row;
        for (int j = 1; j < w(i); ++j)
            if (i < winv(j)) row.insert(j);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    auto subset = [](const std::set<int>& a, const std::set<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (!subset(rows[i], rows[j]) && !subset(rows[j], rows[i])) return false;
    return true;
}

bool is_dominant(const Permutation& w) {
    auto code = lehmer_code(w);
    for (std::size_t i = 0; i + 1 < code.size(); ++i)
        if (code[i] < code[i + 1]) return false;
    return true;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation v = w;
    while (!v.is_identity()) {
        int i = *v.des_r().begin();
        word.push_back(i);
        v = v.swap_positions(i, i + 1);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Permutation demazure(const Permutation& u, const Permutation& v) {
    Permutation r = u;
    for (int a : reduced_word(v)) {
        if (!r.des_r().count(a)) r = r.swap_positions(a, a + 1);
    }
    return r;
}

namespace {
// suffix words of length <= remaining whose fold carries cur to target,
// memoized on (cur, remaining)
const std::set<std::vector<int>>& hecke_suffixes(
    const Permutation& target, const Permutation& cur, int max_letter, int remaining,
    std::map<std::pair<Permutation, int>, std::set<std::vector<int>>>& memo) {
    auto key = std::make_pair(cur, remaining);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::set<std::vector<int>> out;
    if (cur == target) out.insert(std::vector<int>{});
    if (remaining > 0) {
        for (int a = 1; a <= max_letter; ++a) {
            Permutation next = cur.des_r().count(a) ? cur : cur.swap_positions(a, a + 1);
            for (const auto& suffix :
                 hecke_suffixes(target, next, max_letter, remaining - 1, memo)) {
                std::vector<int> word{a};
                word.insert(word.end(), suffix.begin(), suffix.end());
                out.insert(std::move(word));
            }
        }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}
}  // namespace

std::set<std::vector<int>> hecke_words(const Permutation& w, int max_len) {
    std::map<std::pair<Permutation, int>, std::set<std::vector<int>>> memo;
    int max_letter = std::max(1, w.size() - 1);
    return hecke_suffixes(w, Permutation::identity(), max_letter, max_len, memo);
}

std::optional<Permutation> bruhat_cover(const Permutation& v, int a, int b) {
    if (a >= b || a < 1) throw MathError("bruhat_cover requires 1 <= a < b");
    if (v(a) >= v(b)) return std::nullopt;
    for (int i = a + 1; i < b; ++i)
        if (v(a) < v(i) && v(i) < v(b)) return std::nullopt;
    return v.swap_positions(a, b);
}

Permutation one_times(const Permutation& w, int n) {
    if (n < 0) throw MathError("embed: n must be nonnegative");
    if (n == 0) return w;
    std::vector<int> win(w.size() + n);
    std::iota(win.begin(), win.begin() + n, 1);
    for (int i = 0; i < w.size(); ++i) win[n + i] = w(i + 1) + n;
    return Permutation::from_window(std::move(win));
}

Permutation shift_down_perm(const Permutation& w, int n) {
    if (n < 0) throw MathError("embed: n must be nonnegative");
    for (int i = 1; i <= n; ++i)
        if (w(i) != i) throw MathError("not shiftable: permutation moves " + std::to_string(i));
    std::vector<int> win;
    for (int i = n + 1; i <= w.size(); ++i) win.push_back(w(i) - n);
    return Permutation::from_window(std::move(win));
}

Permutation grassmannian_perm(const std::vector<int>& lambda, int n) {
    std::vector<int> lam = lambda;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) throw MathError("not a partition");
    if ((int)lam.size() > n) throw MathError("too many parts");
    if (!lam.empty() && lam[0] < 0) throw MathError("negative part");
    // w(i) = lambda_{n+1-i} + i for i <= n, remaining values ascending.
    std::vector<int> win;
    std::set<int> used;
    for (int i = 1; i <= n; ++i) {
        int part = (n - i < (int)lam.size()) ? lam[n - i] : 0;
        win.push_back(part + i);
        used.insert(part + i);
    }
    int mx = *std::max_element(win.begin(), win.end());
    for (int v = 1; v <= mx; ++v)
        if (!used.count(v)) win.push_back(v);
    return Permutation::from_window(std::move(win));
}

Permutation parse_permutation(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty permutation");
    std::vector<int> win;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("bad permutation: " + text);
            win.push_back(std::stoi(item));
        }
    } else {
        for (char c : s) {
            if (!isdigit((unsigned char)c))
                throw std::invalid_argument("bad permutation: " + text);
            win.push_back(c - '0');
        }
    }
    try {
        return Permutation::from_window(std::move(win));
    } catch (const MathError& e) {
        throw std::invalid_argument(std::string("bad permutation: ") + e.what());
    }
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> win(n);
    std::iota(win.begin(), win.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_window(win));
    } while (std::next_permutation(win.begin(), win.end()));
    return out;
}

}  // namespace groth
