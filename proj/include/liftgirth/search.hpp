#pragma once

#include "liftgirth/lift.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace liftgirth {

/// Lift of h23() of height n: v_i is joined to u_sigma1(i) and u_sigma2(i),
/// and u_i to u_mu(i). mu is a fixed-point-free involution.
struct PermLiftH23 {
    int n = 0;
    Permutation sigma1;
    Permutation sigma2;
    Permutation mu;

    LiftAssignment assignment() const;
    Lift lift() const;

    friend bool operator==(const PermLiftH23&, const PermLiftH23&) = default;
};

struct EnumerationStats {
    long long nodes = 0;
    long long yielded = 0;
};

/// Connected lifts of height n with girth >= g, one per isomorphism class.
/// sigma1 is the identity and sigma2 a product of consecutive cycles of
/// non-increasing length. `visit` returns false to stop early.
EnumerationStats canonical_enumerate(int n, int g, const std::function<bool(const PermLiftH23&)>& visit);
std::vector<PermLiftH23> canonical_enumerate(int n, int g);

struct MinimumSize {
    /// 2n for the smallest height n admitting girth >= g.
    std::optional<int> size;
    std::optional<PermLiftH23> witness;
    int max_height = 0;
    long long nodes = 0;
};

/// Smallest cover of h23() with girth >= g among heights 1..n_max.
MinimumSize minimum_size(int g, int n_max);

struct Certificate {
    int g = 0;
    int height = 0;
    bool refuted = false;
    long long nodes = 0;
    /// Set when some height <= n admits girth >= g.
    std::optional<PermLiftH23> counterexample;

    /// `g,<g>,refuted_up_to,<n>,nodes,<count>`
    std::string line() const;
};

/// Exhaustively checks that no cover of h23() of height <= n has girth >= g.
Certificate certify_lower_bound(int g, int n);

} // namespace liftgirth
