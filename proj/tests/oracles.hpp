#pragma once

// Reference implementations used to cross-check the library. Everything here
// is deliberately written with different algorithms and data structures than
// the code under test: ordered sets instead of hash maps or bitmaps, plain
// box scans instead of closed forms, a multiplication table typed in by hand.
// Slow is fine; these only run at test sizes.

#include "abelgrowth/group.hpp"
#include "abelgrowth/numeric.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace oracle {

using abelgrowth::Count;
using abelgrowth::GroupElement;
using abelgrowth::GroupSpec;

// Balls by repeated set product: B_0 = {e}, B_{i+1} = B_i u (B_i * S).
// Returns the cumulative balls up to the radius, as sorted sets.
inline std::vector<std::set<GroupElement>> ball_layers(const GroupSpec& spec,
                                                       std::span<const GroupElement> elements,
                                                       int radius) {
    std::vector<std::set<GroupElement>> balls;
    balls.push_back({spec.identity()});
    for (int r = 1; r <= radius; ++r) {
        std::set<GroupElement> next = balls.back();
        for (const GroupElement& g : balls.back())
            for (const GroupElement& s : elements) next.insert(spec.mul(g, s));
        balls.push_back(std::move(next));
    }
    return balls;
}

inline std::vector<Count> sigma_from_layers(const std::vector<std::set<GroupElement>>& balls) {
    std::vector<Count> sigma;
    sigma.push_back(Count(balls[0].size()));
    for (std::size_t r = 1; r < balls.size(); ++r)
        sigma.push_back(Count(balls[r].size()) - Count(balls[r - 1].size()));
    return sigma;
}

inline std::vector<Count> ball_product_sigma(const GroupSpec& spec,
                                             std::span<const GroupElement> elements, int radius) {
    return sigma_from_layers(ball_layers(spec, elements, radius));
}

// First radius whose ball contains g, or -1 within the cap.
inline int distance_from_layers(const std::vector<std::set<GroupElement>>& balls,
                                const GroupElement& g) {
    for (std::size_t r = 0; r < balls.size(); ++r)
        if (balls[r].count(g)) return static_cast<int>(r);
    return -1;
}

// Lattice points of Z^d with |x|_1 <= r for every r <= rmax, counted by a
// plain odometer scan over the box [-rmax, rmax]^d.
inline std::vector<Count> l1_ball_counts(int d, int rmax) {
    std::vector<long long> hist(rmax + 1, 0);
    std::vector<int> x(d, -rmax);
    if (d == 0) {
        hist[0] = 1;
    } else {
        while (true) {
            long long norm = 0;
            for (int v : x) norm += v < 0 ? -v : v;
            if (norm <= rmax) ++hist[norm];
            int j = 0;
            while (j < d && x[j] == rmax) x[j++] = -rmax;
            if (j == d) break;
            ++x[j];
        }
    }
    std::vector<Count> beta(rmax + 1);
    Count run = 0;
    for (int r = 0; r <= rmax; ++r) {
        run += hist[r];
        beta[r] = run;
    }
    return beta;
}

// Word length of x over {e_1, ..., e_d, -(e_1+...+e_d)}: writing
// x = sum c_j e_j + v * (-(e_1+...+e_d)) with c_j, v >= 0 forces
// c_j = x_j + v, so the length sum(c_j) + v is minimized at the smallest
// legal v, which is max(0, -min_j x_j).
inline long long plus_length(std::span<const int> x) {
    long long vmin = 0;
    for (int v : x)
        if (-static_cast<long long>(v) > vmin) vmin = -v;
    long long len = vmin;
    for (int v : x) len += v + vmin;
    return len;
}

// Ball counts for the set above, by scanning the box [-rmax, rmax]^d
// (every point of length <= r has all coordinates in [-r, r]).
inline std::vector<Count> plus_ball_counts(int d, int rmax) {
    std::vector<long long> hist(rmax + 1, 0);
    std::vector<int> x(d, -rmax);
    if (d == 0) {
        hist[0] = 1;
    } else {
        while (true) {
            long long len = plus_length(x);
            if (len <= rmax) ++hist[len];
            int j = 0;
            while (j < d && x[j] == rmax) x[j++] = -rmax;
            if (j == d) break;
            ++x[j];
        }
    }
    std::vector<Count> beta(rmax + 1);
    Count run = 0;
    for (int r = 0; r <= rmax; ++r) {
        run += hist[r];
        beta[r] = run;
    }
    return beta;
}

// Multiplication table of the symmetric group on {0,1,2}, worked out by hand
// for the library's element numbering: permutations (p(0),p(1),p(2)) listed
// lexicographically, so
//   0 = (0,1,2)   1 = (0,2,1)   2 = (1,0,2)
//   3 = (1,2,0)   4 = (2,0,1)   5 = (2,1,0)
// and (a*b)(x) = a(b(x)). Row a, column b.
inline std::vector<std::vector<int>> s3_table_by_hand() {
    return {
        {0, 1, 2, 3, 4, 5},
        {1, 0, 4, 5, 2, 3},
        {2, 3, 0, 1, 5, 4},
        {3, 2, 5, 4, 0, 1},
        {4, 5, 1, 0, 3, 2},
        {5, 4, 3, 2, 1, 0},
    };
}

// Convenience builders for test element lists.

inline GroupElement el(std::vector<std::int64_t> vec, int tor = 0) {
    GroupElement g;
    g.vec = std::move(vec);
    g.tor = tor;
    return g;
}

// {+-e_1, ..., +-e_d} in Z^d (lattice part of rank d, trivial torsion).
inline std::vector<GroupElement> std_symmetric(int d) {
    std::vector<GroupElement> out;
    for (int j = 0; j < d; ++j) {
        std::vector<std::int64_t> v(d, 0);
        v[j] = 1;
        out.push_back(el(v));
        v[j] = -1;
        out.push_back(el(v));
    }
    return out;
}

// {e_1, ..., e_d, -(e_1+...+e_d)}.
inline std::vector<GroupElement> std_monoid(int d) {
    std::vector<GroupElement> out;
    for (int j = 0; j < d; ++j) {
        std::vector<std::int64_t> v(d, 0);
        v[j] = 1;
        out.push_back(el(v));
    }
    out.push_back(el(std::vector<std::int64_t>(d, -1)));
    return out;
}

} // namespace oracle
