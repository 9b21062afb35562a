#include "cohid/barcode.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cohid {

Bar::Bar(Rational l, ExtendedRational r) : left(std::move(l)), right(std::move(r)) {
    if (!(ExtendedRational(left) < right))
        throw std::invalid_argument("bar requires left < right: [" + left.str() + "," + right.str() + ")");
}

ExtendedRational Bar::length() const {
    if (right.is_infinite()) return ExtendedRational::infinity();
    return right.value() - left;
}

std::string Bar::str() const { return "[" + left.str() + "," + right.str() + ")"; }

bool operator<(const Bar& a, const Bar& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
}

Barcode Barcode::sorted() const {
    std::vector<Bar> b = bars_;
    std::sort(b.begin(), b.end());
    return Barcode(std::move(b));
}

bool Barcode::has_infinite() const {
    return std::any_of(bars_.begin(), bars_.end(), [](const Bar& b) { return b.is_infinite(); });
}

std::vector<Bar> Barcode::finite_bars() const {
    std::vector<Bar> out;
    for (const auto& b : bars_)
        if (!b.is_infinite()) out.push_back(b);
    return out;
}

std::vector<Bar> Barcode::infinite_bars() const {
    std::vector<Bar> out;
    for (const auto& b : bars_)
        if (b.is_infinite()) out.push_back(b);
    return out;
}

std::string Barcode::str() const {
    if (bars_.empty()) return "(empty)";
    std::string s;
    for (const auto& b : sorted().bars_) s += (s.empty() ? "" : " ") + b.str();
    return s;
}

bool operator==(const Barcode& a, const Barcode& b) { return a.sorted().bars_ == b.sorted().bars_; }

ExtendedRational interval_distance(const std::optional<Bar>& j1, const std::optional<Bar>& j2) {
    if (!j1 && !j2) return Rational(0);
    if (!j1 || !j2) {
        const Bar& b = j1 ? *j1 : *j2;
        if (b.is_infinite()) return ExtendedRational::infinity();
        return (b.right.value() - b.left) / Rational(2);
    }
    const Bar& a = *j1;
    const Bar& b = *j2;
    if (a.is_infinite() != b.is_infinite()) return ExtendedRational::infinity();
    if (a.is_infinite()) return abs(a.left - b.left);
    Rational ends = std::max(abs(a.left - b.left), abs(a.right.value() - b.right.value()));
    Rational kill = std::max((a.right.value() - a.left) / Rational(2), (b.right.value() - b.left) / Rational(2));
    return std::min(ends, kill);
}

namespace {

// Kuhn's augmenting-path matching; adj[l] lists admissible right vertices.
bool has_perfect_matching(const std::vector<std::vector<int>>& adj, int right_size) {
    int n = static_cast<int>(adj.size());
    if (n != right_size) return false;
    std::vector<int> match_right(static_cast<std::size_t>(right_size), -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int l) {
        for (int r : adj[static_cast<std::size_t>(l)]) {
            if (seen[static_cast<std::size_t>(r)]) continue;
            seen[static_cast<std::size_t>(r)] = 1;
            if (match_right[static_cast<std::size_t>(r)] < 0 || augment(match_right[static_cast<std::size_t>(r)])) {
                match_right[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < n; ++l) {
        seen.assign(static_cast<std::size_t>(right_size), 0);
        if (!augment(l)) return false;
    }
    return true;
}

// Finite part: left vertices are S then one diagonal slot per T bar,
// right vertices are T then one diagonal slot per S bar.
bool finite_feasible(const std::vector<Bar>& s, const std::vector<Bar>& t,
                     const std::vector<std::vector<ExtendedRational>>& cost,
                     const std::vector<ExtendedRational>& del_s, const std::vector<ExtendedRational>& del_t,
                     const ExtendedRational& theta) {
    int n = static_cast<int>(s.size());
    int m = static_cast<int>(t.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j)
            if (cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= theta)
                adj[static_cast<std::size_t>(i)].push_back(j);
        if (del_s[static_cast<std::size_t>(i)] <= theta) adj[static_cast<std::size_t>(i)].push_back(m + i);
    }
    for (int j = 0; j < m; ++j) {
        auto& row = adj[static_cast<std::size_t>(n + j)];
        if (del_t[static_cast<std::size_t>(j)] <= theta) row.push_back(j);
        for (int i = 0; i < n; ++i) row.push_back(m + i);
    }
    return has_perfect_matching(adj, n + m);
}

}  // namespace

ExtendedRational bottleneck_distance(const Barcode& s, const Barcode& t) {
    auto si = s.infinite_bars();
    auto ti = t.infinite_bars();
    if (si.size() != ti.size()) return ExtendedRational::infinity();
    std::vector<Rational> ls, lt;
    for (const auto& b : si) ls.push_back(b.left);
    for (const auto& b : ti) lt.push_back(b.left);
    std::sort(ls.begin(), ls.end());
    std::sort(lt.begin(), lt.end());
    Rational inf_part(0);
    for (std::size_t i = 0; i < ls.size(); ++i) inf_part = std::max(inf_part, abs(ls[i] - lt[i]));

    auto sf = s.finite_bars();
    auto tf = t.finite_bars();
    std::vector<std::vector<ExtendedRational>> cost(sf.size(), std::vector<ExtendedRational>(tf.size()));
    std::vector<ExtendedRational> del_s, del_t;
    std::vector<ExtendedRational> candidates{Rational(0)};
    for (std::size_t i = 0; i < sf.size(); ++i) {
        del_s.push_back(interval_distance(sf[i], std::nullopt));
        candidates.push_back(del_s.back());
        for (std::size_t j = 0; j < tf.size(); ++j) {
            cost[i][j] = interval_distance(sf[i], tf[j]);
            candidates.push_back(cost[i][j]);
        }
    }
    for (const auto& b : tf) {
        del_t.push_back(interval_distance(b, std::nullopt));
        candidates.push_back(del_t.back());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Deleting everything is always feasible at the largest deletion cost, so the
    // last candidate succeeds and binary search over the sorted list is valid.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (finite_feasible(sf, tf, cost, del_s, del_t, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return max(ExtendedRational(inf_part), candidates[lo]);
}

ExtendedRational bottleneck_bruteforce(const Barcode& s, const Barcode& t) {
    if (s.size() + t.size() > 8) throw std::invalid_argument("bottleneck_bruteforce: more than 8 bars");
    const auto& a = s.bars();
    const auto& b = t.bars();
    std::vector<char> used(b.size(), 0);
    ExtendedRational best = ExtendedRational::infinity();
    bool found = false;
    std::function<void(std::size_t, const ExtendedRational&)> rec = [&](std::size_t i, const ExtendedRational& cur) {
        if (found && best <= cur) return;
        if (i == a.size()) {
            ExtendedRational total = cur;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j]) total = max(total, interval_distance(std::nullopt, b[j]));
            if (!found || total < best) {
                best = total;
                found = true;
            }
            return;
        }
        rec(i + 1, max(cur, interval_distance(a[i], std::nullopt)));
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            rec(i + 1, max(cur, interval_distance(a[i], b[j])));
            used[j] = 0;
        }
    };
    rec(0, Rational(0));
    return best;
}

bool is_interleaved(const Barcode& s, const Barcode& t, const Rational& eps) {
    if (eps.sign() < 0) throw std::invalid_argument("negative epsilon");
    return bottleneck_distance(s, t) <= ExtendedRational(eps);
}

}  // namespace cohid
