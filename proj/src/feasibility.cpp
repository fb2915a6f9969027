#include "weylkit/feasibility.hpp"

#include <algorithm>
#include <set>

namespace weylkit {

namespace {

// One inequality sum(a_i y_i) >= rhs.
struct Ineq {
    std::vector<Rat> a;
    Rat rhs;
};

// Scale to integer entries divided by their content; canonical for dedup.
Ineq normalized(Ineq q) {
    Int scale = 1;
    for (const auto& x : q.a) scale = lcm(scale, x.den());
    scale = lcm(scale, q.rhs.den());
    Int content = 0;
    auto bump = [&](const Rat& x) {
        Int n = x.num() * (scale / x.den());
        content = gcd(content, n);
    };
    for (const auto& x : q.a) bump(x);
    bump(q.rhs);
    if (content == 0) content = 1;
    Rat f = Rat(scale, content);
    for (auto& x : q.a) x *= f;
    q.rhs *= f;
    return q;
}

std::vector<Rat> key_of(const Ineq& q) {
    std::vector<Rat> k = q.a;
    k.push_back(q.rhs);
    return k;
}

}  // namespace

std::optional<std::vector<Rat>> strict_feasible(
    const std::vector<std::vector<Int>>& eq_rows,
    const std::vector<std::vector<Int>>& pos_rows) {
    std::size_t n = 0;
    if (!eq_rows.empty()) n = eq_rows[0].size();
    else if (!pos_rows.empty()) n = pos_rows[0].size();
    for (const auto& v : eq_rows)
        if (v.size() != n) throw domain_error("constraint length mismatch");
    for (const auto& v : pos_rows)
        if (v.size() != n) throw domain_error("constraint length mismatch");

    // Parameterize the equality solution space: w = B y with the columns of B
    // a rational nullspace basis of the eq matrix (identity when eq is empty).
    std::vector<std::vector<Rat>> basis;
    {
        std::size_t r = eq_rows.size();
        std::vector<std::vector<Rat>> w(r, std::vector<Rat>(n));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(eq_rows[i][j]);
        std::vector<std::size_t> pivot_col;
        std::size_t piv = 0;
        for (std::size_t j = 0; j < n && piv < r; ++j) {
            std::size_t p = piv;
            while (p < r && w[p][j].is_zero()) ++p;
            if (p == r) continue;
            std::swap(w[p], w[piv]);
            for (std::size_t i = 0; i < r; ++i) {
                if (i == piv || w[i][j].is_zero()) continue;
                Rat f = w[i][j] / w[piv][j];
                for (std::size_t k = j; k < n; ++k) w[i][k] -= f * w[piv][k];
            }
            pivot_col.push_back(j);
            ++piv;
        }
        std::vector<bool> is_pivot(n, false);
        for (auto j : pivot_col) is_pivot[j] = true;
        for (std::size_t f = 0; f < n; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rat> b(n, Rat(0));
            b[f] = 1;
            for (std::size_t i = 0; i < pivot_col.size(); ++i)
                b[pivot_col[i]] = -(w[i][f] / w[i][pivot_col[i]]);
            basis.push_back(b);
        }
    }
    std::size_t k = basis.size();

    if (pos_rows.empty()) {
        // w = 0 satisfies the equalities vacuously.
        return std::vector<Rat>(n, Rat(0));
    }

    // Strict homogeneous feasibility scales to: (p^T B) y >= 1 for every p.
    std::vector<std::vector<Ineq>> level(k + 1);
    for (const auto& p : pos_rows) {
        Ineq q;
        q.a.assign(k, Rat(0));
        q.rhs = 1;
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) q.a[j] += Rat(p[i]) * basis[j][i];
        if (std::all_of(q.a.begin(), q.a.end(), [](const Rat& x) { return x.is_zero(); }))
            return std::nullopt;  // equalities force w orthogonal to p
        level[0].push_back(std::move(q));
    }

    // Eliminate y_0, y_1, ... in order; level[v] holds constraints whose
    // support lies in variables >= v.
    for (std::size_t v = 0; v < k; ++v) {
        std::vector<const Ineq*> lower, upper, zero;
        for (const auto& q : level[v]) {
            int s = q.a[v].sign();
            if (s > 0) lower.push_back(&q);
            else if (s < 0) upper.push_back(&q);
            else zero.push_back(&q);
        }
        std::set<std::vector<Rat>> seen;
        auto push = [&](Ineq q) {
            q = normalized(std::move(q));
            if (std::all_of(q.a.begin(), q.a.end(), [](const Rat& x) { return x.is_zero(); })) {
                if (q.rhs.sign() > 0) return false;  // 0 >= positive: infeasible
                return true;
            }
            if (seen.insert(key_of(q)).second) level[v + 1].push_back(std::move(q));
            return true;
        };
        for (const auto* q : zero)
            if (!push(*q)) return std::nullopt;
        for (const auto* lo : lower)
            for (const auto* up : upper) {
                // Combine to cancel y_v: up scaled by lo->a[v], lo by -up->a[v].
                Ineq q;
                q.a.assign(k, Rat(0));
                for (std::size_t j = 0; j < k; ++j)
                    q.a[j] = lo->a[v] * up->a[j] - up->a[v] * lo->a[j];
                q.rhs = lo->a[v] * up->rhs - up->a[v] * lo->rhs;
                if (!push(std::move(q))) return std::nullopt;
            }
    }

    // Final level has no variables; infeasibility was detected during pushes.
    // Back-substitute deterministically.
    std::vector<Rat> y(k, Rat(0));
    for (std::size_t v = k; v-- > 0;) {
        std::optional<Rat> lo, hi;
        for (const auto& q : level[v]) {
            if (q.a[v].is_zero()) continue;
            Rat bound = q.rhs;
            for (std::size_t j = v + 1; j < k; ++j) bound -= q.a[j] * y[j];
            bound /= q.a[v];
            if (q.a[v].sign() > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo) y[v] = *lo;
        else if (hi) y[v] = *hi;
    }

    std::vector<Rat> w(n, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) w[i] += y[j] * basis[j][i];
    return w;
}

}  // namespace weylkit
