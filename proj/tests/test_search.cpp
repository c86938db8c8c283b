#include "oracles.hpp"

#include "liftgirth/search.hpp"
#include "liftgirth/standard_graphs.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace liftgirth;

namespace {

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    auto p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Permutation> fixed_point_free_involutions(int n)
{
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(n)) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            ok = ok && p[i] != i && p[p[i]] == i;
        if (ok)
            out.push_back(p);
    }
    return out;
}

Lift h23_lift(const Permutation& s1, const Permutation& s2, const Permutation& mu)
{
    const auto h = h23();
    auto a = LiftAssignment::identity(h, static_cast<int>(s1.size()));
    a.set(h, kH23Sigma1, s1);
    a.set(h, kH23Sigma2, s2);
    a.set(h, kH23HalfLoop, mu);
    return build_lift(h, a);
}

/// Isomorphism classes of connected lifts of height n with girth >= g, over
/// every (sigma1, sigma2, mu).
std::size_t brute_class_count(int n, int g)
{
    std::set<std::vector<std::pair<int, int>>> classes;
    const auto perms = all_permutations(n);
    for (const auto& s1 : perms)
        for (const auto& s2 : perms)
            for (const auto& mu : fixed_point_free_involutions(n)) {
                const auto lift = h23_lift(s1, s2, mu);
                if (is_connected(lift.graph) && girth(lift.graph) >= g)
                    classes.insert(oracle::canonical_form(lift.graph));
            }
    return classes.size();
}

/// Smallest height <= n_max with a connected lift of girth >= g, or 0.
int brute_minimum_height(int g, int n_max)
{
    for (int n = 1; n <= n_max; ++n) {
        const auto id = identity_permutation(n);
        for (const auto& s2 : all_permutations(n))
            for (const auto& mu : fixed_point_free_involutions(n)) {
                const auto lift = h23_lift(id, s2, mu);
                if (is_connected(lift.graph) && girth(lift.graph) >= g)
                    return n;
            }
    }
    return 0;
}

void check_witness(const PermLiftH23& w, int g)
{
    const auto lift = w.lift();
    CHECK(verify_cover(lift.graph, h23(), lift.cover).accepted);
    CHECK(is_connected(lift.graph));
    CHECK(girth(lift.graph) >= g);
    CHECK(w.sigma1 == identity_permutation(w.n));
}

} // namespace

TEST_CASE("height two at girth three has one class")
{
    const auto classes = canonical_enumerate(2, 3);
    REQUIRE(classes.size() == 1);
    const auto g = classes[0].lift().graph;
    CHECK(g.vertex_count() == 4);
    CHECK(is_simple(g));
    CHECK(g.edge_count() == 10);
}

TEST_CASE("height four at girth five is non-empty")
{
    const auto classes = canonical_enumerate(4, 5);
    CHECK_FALSE(classes.empty());
    for (const auto& w : classes)
        check_witness(w, 5);
}

TEST_CASE("height eight at girth seven is empty")
{
    CHECK(canonical_enumerate(8, 7).empty());
}

TEST_CASE("odd heights have no fixed-point-free involution")
{
    for (int n : {1, 3, 5})
        CHECK(canonical_enumerate(n, 3).empty());
}

TEST_CASE("enumeration can stop early")
{
    int seen = 0;
    const auto stats = canonical_enumerate(8, 3, [&](const PermLiftH23&) { return ++seen < 2; });
    CHECK(seen == 2);
    CHECK(stats.yielded == 2);
}

TEST_CASE("property: class counts agree with brute-force deduplication")
{
    for (int n = 1; n <= 4; ++n)
        for (int g = 3; g <= 6; ++g) {
            CAPTURE(n);
            CAPTURE(g);
            CHECK(canonical_enumerate(n, g).size() == brute_class_count(n, g));
        }
}

TEST_CASE("property: every yielded lift is a connected cover of the required girth")
{
    for (int n = 2; n <= 10; n += 2)
        for (int g = 3; g <= 7; ++g)
            for (const auto& w : canonical_enumerate(n, g))
                check_witness(w, g);
}

TEST_CASE("minimum sizes for g = 3..9")
{
    const int expected[] = {4, 8, 8, 12, 20, 20, 28};
    for (int g = 3; g <= 9; ++g) {
        const auto m = minimum_size(g, 16);
        REQUIRE(m.size.has_value());
        CHECK(*m.size == expected[g - 3]);
        REQUIRE(m.witness.has_value());
        CHECK(m.witness->n * 2 == *m.size);
        check_witness(*m.witness, g);
    }
}

TEST_CASE("minimum sizes agree with brute force for heights up to 6")
{
    for (int g = 3; g <= 7; ++g) {
        const int brute = brute_minimum_height(g, 6);
        const auto m = minimum_size(g, 6);
        CAPTURE(g);
        if (brute == 0)
            CHECK_FALSE(m.size.has_value());
        else
            CHECK(m.size == 2 * brute);
    }
}

TEST_CASE("property: raising the height limit never increases the minimum")
{
    for (int g = 5; g <= 8; ++g) {
        std::optional<int> previous;
        for (int n_max = 2; n_max <= 12; ++n_max) {
            const auto m = minimum_size(g, n_max);
            CHECK(m.max_height == n_max);
            if (previous) {
                REQUIRE(m.size.has_value());
                CHECK(*m.size <= *previous);
            }
            if (m.size)
                previous = m.size;
        }
    }
}

TEST_CASE("certificates")
{
    const auto c7 = certify_lower_bound(7, 8);
    CHECK(c7.refuted);
    CHECK_FALSE(c7.counterexample.has_value());
    CHECK(c7.line() == "g,7,refuted_up_to,8,nodes," + std::to_string(c7.nodes));

    const auto c9 = certify_lower_bound(9, 12);
    CHECK(c9.refuted);

    const auto c3 = certify_lower_bound(3, 1);
    CHECK(c3.refuted);

    const auto open = certify_lower_bound(7, 10);
    CHECK_FALSE(open.refuted);
    REQUIRE(open.counterexample.has_value());
    CHECK(open.counterexample->n == 10);
    check_witness(*open.counterexample, 7);
}
