#include <doctest.h>

#include "bispec/errors.hpp"
#include "bispec/parse.hpp"
#include "bispec/recurrence.hpp"
#include "support.hpp"

using namespace bispec;

namespace {

FamilySpec quintic_family(const Rat& alpha) {
    return FamilySpec::make(alpha, {1, 2, 5},
                            {parse_poly("x-1"), parse_poly("x^2+1"), parse_poly("x^5+x^4+x^3+1")});
}

FamilySpec quartic_family() {
    return FamilySpec::make(Rat(1), {1, 2, 4}, {parse_poly("x+2"), parse_poly("x^2"), parse_poly("x^4+1")});
}

FamilySpec segment_family() {
    return FamilySpec::make(Rat(22, 7), {2, 3}, {parse_poly("x^2+1"), parse_poly("x^3+x+1")});
}

}  // namespace

TEST_CASE("expansion in the q basis") {
    const auto s = quintic_family(Rat(7));
    QSequence q(s);
    auto c = expand_in_q(q, q[5]);
    CHECK(c == SparseVector{{5, Rat(1)}});
    c = expand_in_q(q, Poly::constant(Rat(1)));
    CHECK(c == SparseVector{{0, Rat(1) / q[0].leading()}});
    CHECK(expand_in_q(q, Poly()).empty());

    std::mt19937_64 rng(3001);
    for (int t = 0; t < 10; ++t) {
        const Poly p = gen::poly(rng, 9);
        Poly back;
        for (const auto& [k, v] : expand_in_q(q, p)) back.add_scaled(q[k], v);
        CHECK(back == p);
    }
    const auto bad = FamilySpec::make(Rat(1), {1}, {parse_poly("x-3")});
    CHECK_THROWS_AS(expand_in_q(bad, Poly::monomial(Rat(1), 5)), DegenerateFamily);
}

TEST_CASE("tables reproduce Q q_n exactly") {
    const auto s = quintic_family(Rat(7));
    QSequence q(s);
    const auto id = recurrence_table(q, Poly::constant(Rat(1)), 0, 10);
    for (const auto& r : id.rows) CHECK(r.gamma == SparseVector{{0, Rat(1)}});
    CHECK(verify_band(id, 0));

    const auto t = recurrence_table(q, parse_poly("x^3-2*x+1/2"), 0, 15);
    CHECK(verify_table_exact(q, t));
    for (const auto& r : t.rows)
        for (const auto& [j, v] : r.gamma) {
            CHECK(j >= -r.n);
            CHECK(j <= 3);
        }
    CHECK_THROWS_AS(recurrence_table(q, Poly::x(), 3, 2), std::invalid_argument);
}

TEST_CASE("reference recurrences at alpha = 7") {
    const auto s = quintic_family(Rat(7));
    QSequence q(s);
    // Q_0 = x^4 - (a-2)(a-4)(a+9)/(a^2-9a-1) x^3 and Q_1 at a = 7
    const Rat a(7);
    const Rat c0 = -(a - Rat(2)) * (a - Rat(4)) * (a + Rat(9)) / (a * a - Rat(9) * a - Rat(1));
    CHECK(c0 == Rat(16));
    CHECK(verify_band(recurrence_table(q, parse_poly("x^4+16*x^3"), 0, 25), 4));
    CHECK(verify_band(recurrence_table(q, parse_poly("x^5-15*x^3"), 0, 25), 5));
    CHECK_FALSE(verify_band(recurrence_table(q, Poly::x(), 0, 25), 1));
    // x^{max G + 1} p has band deg p + max G + 1
    for (const Poly& p : {parse_poly("1"), parse_poly("x"), parse_poly("x^2+1")}) {
        const auto t = recurrence_table(q, Poly::monomial(Rat(1), 6) * p, 0, 20);
        CHECK(verify_band(t, p.degree() + 6));
    }
}

TEST_CASE("band of x^{max G + 1} p on random specs with generic alpha") {
    std::mt19937_64 rng(3002);
    for (const Rat& a : {Rat(3, 2), Rat(22, 7), Rat(9)}) {
        const auto s = gen::admissible_spec(rng, a, 3, 5);
        QSequence q(s);
        for (const Poly& p : {parse_poly("1"), parse_poly("x"), parse_poly("x^2+1")}) {
            const int band = p.degree() + s.max_g() + 1;
            const auto t = recurrence_table(q, Poly::monomial(Rat(1), s.max_g() + 1) * p, 0, 20);
            CHECK(verify_band(t, band));
        }
        CHECK_FALSE(three_term_test(s, 20).pass());
    }
}

TEST_CASE("three-term test") {
    auto r = three_term_test(krall_preset(1, 1, {Rat(1)}), 20);
    CHECK(r.pass());
    CHECK(r.a.size() == 21);
    r = three_term_test(krall_preset(2, 2, {Rat(1), Rat(1)}), 20);
    CHECK(r.pass());
    CHECK_FALSE(three_term_test(quintic_family(Rat(7)), 20).pass());

    const auto k = krall_preset(2, 2, {Rat(1), Rat(1)});
    const auto bumped = k.with_r(0, k.r_polys()[0] + Poly::x());
    REQUIRE(certify_admissible(bumped).pass());
    r = three_term_test(bumped, 20);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.band_ok);

    // degree drop: not an admissible family
    r = three_term_test(degenerate_preset(1, 2, {Rat(1)}), 20);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.admissible);

    // the degenerate shape has the right band but c_{m-alpha} = 0
    r = three_term_test(degenerate_preset(1, 2, {Rat(1, 2)}), 20);
    CHECK(r.band_ok);
    CHECK_FALSE(r.favard_ok);
    CHECK(r.c[1].is_zero());
}

TEST_CASE("obstruction test") {
    const auto s = quintic_family(Rat(3, 2));
    auto r = obstruction_test(s, Poly::x(), 16);
    CHECK(r.status == ObstructionResult::Status::obstructed);
    CHECK(r.witness == 1);
    CHECK(r.cross_check_ok);
    CHECK_FALSE(r.nonzero_n.empty());

    r = obstruction_test(s, Poly::monomial(Rat(1), 4), 10);
    CHECK(r.status == ObstructionResult::Status::inconclusive);

    r = obstruction_test(segment_family(), Poly::monomial(Rat(1), 4), 10);
    CHECK(r.status == ObstructionResult::Status::inconclusive);
    r = obstruction_test(segment_family(), Poly::monomial(Rat(1), 2), 14);
    CHECK(r.status == ObstructionResult::Status::obstructed);
    CHECK(r.cross_check_ok);

    CHECK(obstruction_test(quartic_family(), Poly::x(), 10).status == ObstructionResult::Status::not_applicable);
    CHECK_THROWS_AS(obstruction_test(s, Poly(), 10), std::invalid_argument);

    std::mt19937_64 rng(3003);
    for (int t = 0; t < 5; ++t) {
        const auto g = gen::admissible_spec(rng, Rat(22, 7), 3, 5);
        const auto o = obstruction_test(g, Poly::x(), 14);
        REQUIRE(o.status == ObstructionResult::Status::obstructed);
        CHECK(o.cross_check_ok);
    }
}

TEST_CASE("algebra probe") {
    const auto s7 = quintic_family(Rat(7));
    auto p = algebra_probe(s7, 4);
    CHECK(p.basis == std::vector<Poly>{parse_poly("1"), parse_poly("x^4+16*x^3")});
    CHECK(p.n_max == 2 * 4 + 5 + 10);
    p = algebra_probe(s7, 5);
    CHECK(p.basis == std::vector<Poly>{parse_poly("1"), parse_poly("x^4+16*x^3"), parse_poly("x^5-15*x^3")});
    CHECK(probe_holds_up_to(s7, p, p.n_max + 10));

    p = algebra_probe(quartic_family(), 3);
    CHECK(p.basis == std::vector<Poly>{parse_poly("1"), parse_poly("x^3+6/7*x^2")});

    const auto seg = segment_family();
    CHECK(algebra_probe(seg, 3).basis == std::vector<Poly>{parse_poly("1")});
    CHECK(algebra_probe(seg, 4).basis == std::vector<Poly>{parse_poly("1"), parse_poly("x^4")});

    // explicit band and n cap
    p = algebra_probe(s7, 2, 2, 12);
    CHECK(p.band == 2);
    CHECK(p.n_max == 12);
    CHECK(p.basis == std::vector<Poly>{parse_poly("1")});
    CHECK_THROWS_AS(algebra_probe(s7, -1), std::invalid_argument);
}

TEST_CASE("rho recurrences") {
    CHECK(rho(quartic_family()) == 4);
    CHECK(rho(krall_preset(2, 2, {Rat(1), Rat(1)})) == 2);
    CHECK_THROWS_AS(rho(quintic_family(Rat(7))), std::domain_error);

    auto r = rho_recurrence(quartic_family(), parse_poly("1"), 20);
    CHECK(r.band == 4);
    CHECK(r.band_ok);
    CHECK(rho_recurrence(quartic_family(), parse_poly("x"), 20).band_ok);
    r = rho_recurrence(krall_preset(2, 2, {Rat(1), Rat(1)}), parse_poly("1"), 20);
    CHECK(r.band == 2);
    CHECK(r.band_ok);
    CHECK(rho_recurrence(krall_preset(2, 2, {Rat(1), Rat(1)}), parse_poly("x"), 20).band_ok);

    const auto t = recurrence_table(quartic_family(), parse_poly("x^3+6/7*x^2"), 0, 20);
    CHECK(lower_extreme_start(quartic_family(), 3) == 5);
    CHECK(verify_band(t, 3, lower_extreme_start(quartic_family(), 3)));
    // q_0 and q_1 are killed by the second derivative, so the lowest coefficient vanishes there
    CHECK(t.row(3).at(-3).is_zero());
    CHECK(t.row(4).at(-3).is_zero());
    CHECK_FALSE(verify_band(t, 3));
}
