#include "digiplane/afpp.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace digiplane {

namespace {

/// Fixed-capacity bitset over the point indices of one image.
class Domain {
public:
    Domain() = default;
    Domain(std::size_t n, bool full) : n_(n), w_((n + 63) / 64, full ? ~0ull : 0ull) {
        if (full && n % 64)
            w_.back() = (1ull << (n % 64)) - 1;
    }

    void clear(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_)
            c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (std::uint64_t x : w_)
            if (x)
                return false;
        return true;
    }
    bool intersects(const Domain& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    void keep_only(std::size_t i) {
        std::fill(w_.begin(), w_.end(), 0ull);
        set(i);
    }
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    template <typename F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct Csp {
    const Image& X;
    std::size_t n;
    std::vector<Domain> adjeq;              // adjacent-or-equal masks per point
    std::vector<std::vector<int>> neighbors;  // adjacency graph of X
    std::uint64_t budget;
    SearchStats stats;
    bool out_of_budget = false;

    explicit Csp(const Image& img, std::uint64_t b) : X(img), n(img.size()), budget(b) {
        const auto& pts = X.points();
        adjeq.assign(n, Domain(n, false));
        neighbors.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (adjacent_or_equal(pts[i], pts[j], X.kind()))
                    adjeq[i].set(j);
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && adjacent(pts[i], pts[j], X.kind()))
                    neighbors[i].push_back(static_cast<int>(j));
        }
    }

    // Remove values of dom[i] with no support in dom[j]; true if changed.
    bool revise(std::vector<Domain>& dom, int i, int j) {
        ++stats.propagations;
        bool changed = false;
        std::vector<int> drop;
        dom[i].for_each([&](std::size_t a) {
            if (!dom[j].intersects(adjeq[a]))
                drop.push_back(static_cast<int>(a));
        });
        for (int a : drop) {
            dom[i].clear(static_cast<std::size_t>(a));
            changed = true;
        }
        return changed;
    }

    // AC-3 starting from the given arcs; false on a domain wipeout.
    bool propagate(std::vector<Domain>& dom, std::vector<std::pair<int, int>> queue) {
        while (!queue.empty()) {
            auto [i, j] = queue.back();
            queue.pop_back();
            if (!revise(dom, i, j))
                continue;
            if (dom[i].empty())
                return false;
            for (int k : neighbors[i])
                if (k != j)
                    queue.emplace_back(k, i);
        }
        return true;
    }

    bool all_arcs(std::vector<Domain>& dom) {
        std::vector<std::pair<int, int>> queue;
        for (std::size_t i = 0; i < n; ++i)
            for (int j : neighbors[i])
                queue.emplace_back(static_cast<int>(i), j);
        return propagate(dom, std::move(queue));
    }

    // Returns true if a solution was found (recorded in `solution`).
    bool search(std::vector<Domain>& dom, std::vector<bool>& assigned, std::size_t depth,
                std::vector<int>& solution) {
        if (depth == n) {
            for (std::size_t i = 0; i < n; ++i)
                solution[i] = dom[i].first();
            return true;
        }
        // Minimum remaining values, ties by canonical point order.
        int var = -1, best = INT32_MAX;
        for (std::size_t i = 0; i < n; ++i)
            if (!assigned[i] && dom[i].count() < best) {
                best = dom[i].count();
                var = static_cast<int>(i);
            }
        std::vector<int> values;
        dom[var].for_each([&](std::size_t a) { values.push_back(static_cast<int>(a)); });
        for (int a : values) {
            if (++stats.nodes > budget) {
                out_of_budget = true;
                return false;
            }
            std::vector<Domain> saved = dom;
            dom[var].keep_only(static_cast<std::size_t>(a));
            assigned[var] = true;
            std::vector<std::pair<int, int>> queue;
            for (int k : neighbors[var])
                queue.emplace_back(k, var);
            if (propagate(dom, std::move(queue)) && search(dom, assigned, depth + 1, solution))
                return true;
            assigned[var] = false;
            dom = std::move(saved);
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

SearchCertificate run_search(const Image& X, std::uint64_t budget, bool afpp_mode) {
    SearchCertificate cert;
    if (X.empty()) {
        cert.verdict = SearchCertificate::Verdict::Exhausted;
        return cert;
    }
    Csp csp(X, budget);
    std::vector<Domain> dom(csp.n, Domain(csp.n, true));
    for (std::size_t i = 0; i < csp.n; ++i) {
        if (afpp_mode) {
            csp.adjeq[i].for_each([&](std::size_t j) { dom[i].clear(j); });
        } else {
            dom[i].clear(i);
        }
        if (dom[i].empty()) {
            cert.verdict = SearchCertificate::Verdict::Exhausted;
            cert.stats = csp.stats;
            return cert;
        }
    }
    std::vector<bool> assigned(csp.n, false);
    std::vector<int> solution(csp.n, -1);
    bool found = csp.all_arcs(dom) && csp.search(dom, assigned, 0, solution);
    cert.stats = csp.stats;
    if (found) {
        std::vector<Point> values(csp.n);
        for (std::size_t i = 0; i < csp.n; ++i)
            values[i] = X.points()[static_cast<std::size_t>(solution[i])];
        cert.verdict = SearchCertificate::Verdict::Witness;
        cert.witness = SelfMap(X, std::move(values));
    } else if (csp.out_of_budget) {
        cert.verdict = SearchCertificate::Verdict::BudgetExceeded;
    } else {
        cert.verdict = SearchCertificate::Verdict::Exhausted;
    }
    return cert;
}

}  // namespace

SearchCertificate search_afpp_violation(const Image& X, std::uint64_t budget) {
    return run_search(X, budget, true);
}

SearchCertificate search_fixed_point_free(const Image& X, std::uint64_t budget) {
    return run_search(X, budget, false);
}

bool verify_no_approx_fixed_point(const Image& X, const SelfMap& f) {
    auto cont = is_continuous(f, X, X);
    if (!cont.ok() || !cont.value())
        return false;
    for (const Point& p : X.points())
        if (adjacent_or_equal(f.apply(p), p, X.kind()))
            return false;
    return true;
}

Result<SelfMap> compose_through_retraction(const Retraction& r, const SelfMap& w,
                                           const Image& X) {
    std::vector<Point> values;
    values.reserve(X.size());
    for (const Point& p : X.points()) {
        Point q = r(p);
        if (!w.domain.contains(q))
            return {Err::DomainError, "retraction image " + to_string(q) +
                                          " is outside the witness domain"};
        values.push_back(w.apply(q));
    }
    return SelfMap(X, std::move(values));
}

}  // namespace digiplane
