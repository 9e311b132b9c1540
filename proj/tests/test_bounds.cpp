#include <doctest.h>

#include "oracles.hpp"
#include "subcode/bounds.hpp"

using namespace subcode;

TEST_CASE("shell volume") {
    CHECK(shell_volume(2, 2, 1, 1) == 2);  // neighbors of a line in P(F_2^2): {O, W}
    CHECK(shell_volume(2, 2, 1, 0) == 1);
    CHECK(shell_volume(3, 4, 2, 0) == 1);
    CHECK(shell_volume(2, 2, 0, 1) == 3);  // zero is covered by the three lines
    CHECK(shell_volume(2, 2, 0, 5) == 0);  // beyond the diameter
    CHECK_THROWS_AS(shell_volume(2, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("shells partition the projective space") {
    for (auto [q, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        BigInt space = projective_space_size(m, q);
        for (std::size_t k = 0; k <= m; ++k) {
            BigInt total = 0;
            for (std::size_t j = 0; j <= 2 * m; ++j) total += shell_volume(q, m, k, j);
            CHECK(total == space);
        }
    }
}

TEST_CASE("sphere volume") {
    CHECK(sphere_volume(2, 2, 3, DimProfile{{1, 1, 1}}, 1) == 7);
    CHECK(sphere_volume(2, 2, 3, DimProfile{{0, 0, 0}}, 1) == 10);
    CHECK(sphere_volume(2, 2, 3, DimProfile{{0, 1, 2}}, 0) == 1);
    CHECK(sphere_volume(3, 2, 2, DimProfile{{2, 1}}, 0) == 1);
}

TEST_CASE("sphere volume matches exhaustive ball counts") {
    FieldSpec f2(2);
    ProjectiveSpace space = ProjectiveSpace::enumerate(f2, 2);
    for (std::size_t n : {1u, 2u}) {
        auto universe = testing::all_tuples(space, n);
        for (const SubspaceTuple& center : universe) {
            DimProfile profile;
            for (const Subspace& v : center.shots)
                profile.dims.push_back(static_cast<unsigned>(v.dim()));
            for (int r = 0; r <= static_cast<int>(2 * n); ++r)
                CHECK(sphere_volume(2, 2, n, profile, static_cast<std::size_t>(r)) ==
                      BigInt(testing::exhaustive_ball_count(universe, center, r)));
        }
    }
}

TEST_CASE("sphere volume symmetry") {
    for (std::size_t r = 0; r <= 6; ++r) {
        CHECK(sphere_volume(2, 3, 3, DimProfile{{0, 1, 2}}, r) ==
              sphere_volume(2, 3, 3, DimProfile{{2, 0, 1}}, r));
        // complementing every dimension k -> m - k leaves shells unchanged
        CHECK(sphere_volume(2, 3, 3, DimProfile{{0, 1, 2}}, r) ==
              sphere_volume(2, 3, 3, DimProfile{{3, 2, 1}}, r));
    }
}

TEST_CASE("profile frequency") {
    CHECK(freq(2, 2, DimProfile{{1, 1, 1}}) == 27);
    CHECK(freq(2, 2, DimProfile{{0, 0, 0, 0}}) == 1);
    CHECK(freq(2, 2, DimProfile{{0, 1, 2}}) == 3);

    // frequencies over the full profile grid add up to |P|^n
    BigInt total = 0;
    for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; b <= 2; ++b) total += freq(2, 2, DimProfile{{a, b}});
    CHECK(total == 25);
}

TEST_CASE("average, minimum, maximum sphere volumes") {
    CHECK(volume_min(2, 2, 3, 1) == 7);
    CHECK(volume_max(2, 2, 3, 1) == 10);
    CHECK(volume_avg(2, 2, 3, 1) == BigRat(41, 5));
    CHECK(volume_avg(2, 2, 3, 0) == BigRat(1));
    for (std::size_t r = 0; r <= 6; ++r) {
        BigRat avg = volume_avg(2, 2, 3, r);
        CHECK(BigRat(volume_min(2, 2, 3, r)) <= avg);
        CHECK(avg <= BigRat(volume_max(2, 2, 3, r)));
    }
}

TEST_CASE("packing-style bounds") {
    CHECK(hamming_upper(2, 2, 3, 2) == BigRat(125));
    CHECK(hamming_upper(2, 2, 3, 3) == BigRat(125, 7));
    CHECK(hamming_upper(2, 2, 3, 1) == BigRat(125));
    CHECK(gv_lower(2, 2, 3, 2) == BigRat(625, 41));  // 125 / (41/5)
    CHECK(ceil_rat(gv_lower(2, 2, 3, 2)) == 16);
    CHECK(gv_lower(2, 2, 3, 1) == BigRat(125));
    CHECK(singleton_upper(2, 2, 3, 2) == 125);
    CHECK(singleton_upper(2, 2, 3, 3) == 25);
    CHECK(singleton_upper(2, 2, 3, 1) == 125);
    CHECK_THROWS_AS(hamming_upper(2, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(singleton_upper(2, 2, 3, 7), std::invalid_argument);
}

TEST_CASE("classical code sizes") {
    CHECK(classical_gv_lower(BigInt(5), 3, 4) == 1);  // d beyond n
    CHECK(classical_gv_lower(BigInt(2), 3, 1) == 8);
    CHECK(classical_max_code(5, 3, 2) == 25);  // mod-5 parity code attains the Singleton cap
    CHECK(classical_max_code(2, 3, 3) == 2);   // repetition code {000, 111}
    CHECK(classical_max_code(3, 2, 1) == 9);

    ClassicalSandwich s = classical_sandwich(2, 2, 3, 2);
    CHECK(s.lower == 25);
    CHECK(s.upper >= s.lower);

    ClassicalSandwich trivial = classical_sandwich(2, 2, 3, 1);
    CHECK(trivial.lower == 125);
    CHECK(trivial.upper == 125);
}

TEST_CASE("bounds report at (2,2,3,2)") {
    BoundsReport rep = bounds_report(2, 2, 3, 2);
    CHECK(rep.classical_lower == 25);
    CHECK(rep.gv_lower_ceil == 16);
    CHECK(rep.hamming_upper_floor == 125);
    CHECK(rep.singleton_upper == 125);
    CHECK(rep.best_lower == 25);
    CHECK(rep.best_upper == 125);
    // the known 63-codeword construction sits inside the sandwich
    CHECK(rep.best_lower <= 63);
    CHECK(BigInt(63) <= rep.best_upper);
}

TEST_CASE("bounds sweep consistency") {
    for (std::size_t m : {2u, 3u})
        for (std::size_t n : {1u, 2u, 3u})
            for (std::size_t d = 1; d <= m * n; ++d) {
                BoundsReport rep = bounds_report(2, m, n, d);
                CHECK(rep.best_lower <= rep.best_upper);
                CHECK(rep.gv_lower_exact <= rep.hamming_upper_exact);
                CHECK(rep.gv_lower_ceil <= rep.hamming_upper_floor);
                CHECK(rep.gv_lower_ceil <= rep.singleton_upper);
                CHECK(rep.best_lower >= 1);
                CHECK(rep.classical_lower <= rep.best_upper);
            }
}
