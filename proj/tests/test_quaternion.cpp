#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quaternion.hpp"

using namespace k3lat;

TEST_CASE("factorization") {
    auto f = factorize(Int(360));
    CHECK(f == std::map<Int, int>{{2, 3}, {3, 2}, {5, 1}});
    auto fr = factorize_rat(Rat(4) / Rat(9));
    CHECK(fr == std::map<Int, int>{{2, 2}, {3, -2}});
    CHECK_THROWS_AS(factorize(Int("1000003000099000033")), precondition_error);
    CHECK(is_prime_small(2));
    CHECK(is_prime_small(999983));
    CHECK_FALSE(is_prime_small(1));
    CHECK_FALSE(is_prime_small(561));
}

TEST_CASE("hilbert symbols") {
    for (const Rat& b : {Rat(2), Rat(-3), Rat(7) / 5})
        for (const Place& p : {Place(0), Place(2), Place(3), Place(5), Place(7)})
            CHECK(hilbert_symbol(Rat(1), b, p) == 1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), 0) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), 2) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), 3) == 1);
    CHECK(hilbert_symbol(Rat(2), Rat(3), 3) == -1);  // 2 is not a square mod 3
    CHECK(hilbert_symbol(Rat(-1), Rat(5), 5) == 1);  // -1 is a square mod 5

    // product formula over all relevant places, randomized
    SplitMix64 rng(41);
    int tested = 0;
    for (int t = 0; t < 200; ++t) {
        Rat a = Rat(rng.range(-30, 30));
        Rat b = Rat(rng.range(-30, 30));
        if (a == 0 || b == 0) continue;
        ++tested;
        std::set<Place> places{Int(0), Int(2)};
        for (const auto& [p, e] : factorize_rat(a)) places.insert(p);
        for (const auto& [p, e] : factorize_rat(b)) places.insert(p);
        int prod = 1;
        for (const auto& p : places) prod *= hilbert_symbol(a, b, p);
        CHECK(prod == 1);
    }
    CHECK(tested > 150);
}

TEST_CASE("ramification sets") {
    CHECK(ramification({Rat(1), Rat(-1)}).empty());
    CHECK(ramification({Rat(-1), Rat(-1)}) == RamSet{Int(0), Int(2)});
    RamSet r3 = ramification({Rat(-1), Rat(3)});
    CHECK_FALSE(r3.empty());
    CHECK(r3 == RamSet{Int(2), Int(3)});
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            if (a == 0 || b == 0) continue;
            CHECK(ramification({Rat(a), Rat(b)}).size() % 2 == 0);
        }
}

TEST_CASE("splitness") {
    CHECK(quat_is_split({Rat(-1), Rat(2)}));
    CHECK(quat_is_split({Rat(-1), Rat(1)}));
    CHECK_FALSE(quat_is_split({Rat(-1), Rat(3)}));
}

TEST_CASE("two squares") {
    CHECK(sum_of_two_squares(1));
    CHECK(sum_of_two_squares(2));
    CHECK(sum_of_two_squares(4));
    CHECK_FALSE(sum_of_two_squares(3));
    CHECK(sum_of_two_squares(9));
    for (Int d = 1; d <= 200; ++d) CHECK(sum_of_two_squares(d) == quat_is_split({Rat(-1), Rat(d)}));
}

TEST_CASE("brauer tensor") {
    RamSet r{Int(2), Int(0)};
    CHECK(brauer_tensor(r, r).empty());
    CHECK(brauer_tensor({Int(2), Int(0)}, {Int(2), Int(3)}) == RamSet{Int(3), Int(0)});
    // (1,-1) x (-1,D) has the class of (-1,D)
    RamSet split = ramification({Rat(1), Rat(-1)});
    for (Int d : {Int(3), Int(5), Int(7)})
        CHECK(brauer_tensor(split, ramification({Rat(-1), Rat(d)})) ==
              ramification({Rat(-1), Rat(d)}));
    // associative, commutative, identity, self-inverse
    SplitMix64 rng(5);
    auto rand_set = [&]() {
        RamSet s;
        for (Int p : {Int(0), Int(2), Int(3), Int(5)})
            if (rng.range(0, 1)) s.insert(p);
        if (s.size() % 2 != 0) s.erase(s.begin());
        return s;
    };
    for (int t = 0; t < 30; ++t) {
        RamSet a = rand_set(), b = rand_set(), c = rand_set();
        CHECK(brauer_tensor(a, b) == brauer_tensor(b, a));
        CHECK(brauer_tensor(brauer_tensor(a, b), c) == brauer_tensor(a, brauer_tensor(b, c)));
        CHECK(brauer_tensor(a, RamSet{}) == a);
        CHECK(brauer_tensor(a, a).empty());
    }
}

TEST_CASE("even clifford") {
    EvenClifford c2 = even_clifford({{Rat(3), Rat(5)}});
    CHECK(c2.center_disc == Rat(-15));

    EvenClifford c3 = even_clifford({{Rat(1), Rat(1), Rat(1)}});
    CHECK(c3.brauer == ramification({Rat(-1), Rat(-1)}));

    EvenClifford c5 = even_clifford({{Rat(2), Rat(-2), Rat(-2), Rat(-2), Rat(10)}});
    CHECK(c5.brauer == ramification({Rat(-1), Rat(5)}));
    CHECK(c5.symbols[0] == std::pair<Rat, Rat>{Rat(4), Rat(-4)});
    CHECK(c5.symbols[1] == std::pair<Rat, Rat>{Rat(-16), Rat(20)});

    EvenClifford c4 = even_clifford({{Rat(1), Rat(2), Rat(3), Rat(5)}});
    CHECK(c4.center_disc == squarefree_part(Rat(30)));

    CHECK_THROWS_AS(even_clifford({{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}}),
                    precondition_error);
}

TEST_CASE("hasse invariants") {
    DiagonalQuadraticForm ones{{Rat(1), Rat(1), Rat(1), Rat(1)}};
    for (const Place& p : {Place(0), Place(2), Place(3), Place(5)})
        CHECK(hasse_invariant(ones, p) == 1);
    // permutation and square-scaling invariance
    SplitMix64 rng(9);
    for (int t = 0; t < 25; ++t) {
        std::vector<Rat> c;
        for (int i = 0; i < 4; ++i) {
            long v = rng.range(-10, 10);
            if (v == 0) v = 1;
            c.push_back(Rat(v));
        }
        std::vector<Rat> perm{c[2], c[0], c[3], c[1]};
        std::vector<Rat> scaled = c;
        scaled[1] *= Rat(9);
        scaled[3] *= Rat(25) / 4;
        for (const Place& p : {Place(0), Place(2), Place(3), Place(5), Place(7)}) {
            CHECK(hasse_invariant({c}, p) == hasse_invariant({perm}, p));
            CHECK(hasse_invariant({c}, p) == hasse_invariant({scaled}, p));
        }
    }
}

TEST_CASE("rational equivalence") {
    CHECK(rational_equivalence({{Rat(1), Rat(-1)}}, {{Rat(2), Rat(-2)}}));
    CHECK_FALSE(rational_equivalence({{Rat(1), Rat(1)}}, {{Rat(1), Rat(-1)}}));
    SplitMix64 rng(13);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rat> c;
        for (int i = 0; i < 3; ++i) {
            long v = rng.range(-8, 8);
            if (v == 0) v = 3;
            c.push_back(Rat(v));
        }
        CHECK(rational_equivalence({c}, {c}));
        std::vector<Rat> scaled{c[1] * 4, c[0], c[2] * Rat(49)};
        CHECK(rational_equivalence({c}, {{c[0], c[1], c[2]}}));
        CHECK(rational_equivalence({c}, {scaled}));
    }
}

TEST_CASE("kuga-satake reports") {
    KSReport k1 = kuga_satake_report(1);
    CHECK(k1.is_split);
    CHECK(k1.ks_dimension == 16);
    CHECK(k1.decomposition == "A(T_1) ~ A_1^2");
    CHECK(kuga_satake_report(2).is_split);
    CHECK(kuga_satake_report(4).is_split);
    CHECK_FALSE(kuga_satake_report(3).is_split);
    CHECK_THROWS_AS(kuga_satake_report(0), precondition_error);
    // the internal cross-check must never fire
    for (Int d = 1; d <= 50; ++d) CHECK_NOTHROW(kuga_satake_report(d));
}
