#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eklr/klr.hpp"
#include "eklr/verify.hpp"

using namespace eklr;

namespace {

const Residue kZero = Residue::concrete(Rational(0));

ChargeVector cv1() {
    ChargeVector cv;
    cv.charges.push_back(kZero);
    return cv;
}

UpDownTableau walk1(std::vector<std::pair<int, Box>> raw) {
    std::vector<UpDownTableau::Step> steps;
    for (auto& [s, b] : raw) steps.push_back({s, b});
    return UpDownTableau(1, steps);
}

std::vector<Residue> seq(std::initializer_list<long long> offs) {
    std::vector<Residue> out;
    for (long long o : offs) out.push_back(kZero.plus(o));
    return out;
}

}  // namespace

TEST_CASE("crossing degrees") {
    ChargeVector cv = ChargeVector::standard(2);
    Residue a = cv.charge(1);
    CHECK(crossing_degree(a, a) == -2);
    CHECK(crossing_degree(a, a.plus(1)) == -2);
    CHECK(crossing_degree(a, a.plus(2)) == 4);
    CHECK(crossing_degree(a, cv.charge(2)) == 0);
    // distant antisymmetry
    for (long long d = 2; d <= 6; ++d) {
        CHECK(crossing_degree(a, a.plus(d)) == -crossing_degree(a.plus(d), a));
        CHECK(crossing_degree(a, a.plus(-d)) == -crossing_degree(a.plus(-d), a));
    }
    DegreeTable dt{1};
    CHECK(dt.dot() == 2);
    CHECK(dt.cap() == 1);
    CHECK(dt.cup() == -1);
}

TEST_CASE("degrees of half diagrams") {
    for (int eps : {1, -1}) {
        // the canonical tableau is the identity diagram
        for (long long n = 0; n <= 4; ++n)
            for (const Partition& p : enumerate_partitions(n)) {
                UpDownTableau canon = canonical_tableau(Multipartition({p}));
                CHECK(degree_half(canon, cv1(), eps, HalfDirection::ToCanonical) == 0);
                CHECK(degree_half(canon, cv1(), eps, HalfDirection::FromCanonical) == 0);
            }
        // one cap / one cup
        UpDownTableau t = walk1({{+1, Box{1, 1, 1}}, {-1, Box{1, 1, 1}}});
        CHECK(degree_half(t, cv1(), eps, HalfDirection::ToCanonical) == eps);
        CHECK(degree_half(t, cv1(), eps, HalfDirection::FromCanonical) == -eps);
        CHECK(degree_psi(t, t, cv1(), eps) == 0);
        // adjacent cap, no strands in between
        UpDownTableau t2 =
            walk1({{+1, Box{1, 1, 1}}, {+1, Box{1, 2, 1}}, {-1, Box{1, 2, 1}}});
        CHECK(degree_half(t2, cv1(), eps, HalfDirection::ToCanonical) == eps);
        // cap over one surviving strand of distant label
        UpDownTableau t3 = walk1(
            {{+1, Box{1, 1, 1}}, {+1, Box{1, 2, 1}}, {+1, Box{1, 3, 1}}, {-1, Box{1, 3, 1}}});
        // pair (3,4) is adjacent; the inner strands are untouched
        CHECK(degree_half(t3, cv1(), eps, HalfDirection::ToCanonical) == eps);
        // nested caps
        UpDownTableau t4 = walk1({{+1, Box{1, 1, 1}},
                                  {+1, Box{1, 2, 1}},
                                  {-1, Box{1, 2, 1}},
                                  {-1, Box{1, 1, 1}}});
        CHECK(degree_half(t4, cv1(), eps, HalfDirection::ToCanonical) == 2 * eps);
    }
}

TEST_CASE("permutation part of half degrees") {
    // adding (1,1), (2,1), (1,2) gives residues (0,-1,1); canonical order is
    // (0,1,-1), one distant inversion
    UpDownTableau t = walk1({{+1, Box{1, 1, 1}}, {+1, Box{2, 1, 1}}, {+1, Box{1, 2, 1}}});
    for (int eps : {1, -1}) {
        long long d = degree_half(t, cv1(), eps, HalfDirection::ToCanonical);
        CHECK(d == crossing_degree(kZero.plus(-1), kZero.plus(1)));
        CHECK(d == 4);
        long long d2 = degree_half(t, cv1(), eps, HalfDirection::FromCanonical);
        CHECK(d2 == crossing_degree(kZero.plus(1), kZero.plus(-1)));
        CHECK(d2 == -4);
    }
}

TEST_CASE("degree well-definedness under randomized choices") {
    uint64_t rng = 12345;
    CHECK(verify_degree_welldef(5, 200, rng, 1).passed);
    CHECK(verify_degree_welldef(5, 200, rng, -1).passed);
}

TEST_CASE("graded hom dimensions") {
    for (int eps : {1, -1}) {
        CHECK(graded_hom_dim(seq({0}), seq({0}), cv1(), eps) == LaurentPoly(Rational(1)));
        // repeated adjacent entries are killed in the quotient, on either side
        CHECK(graded_hom_dim(seq({0, 0}), seq({0, 0}), cv1(), eps).is_zero());
        CHECK(graded_hom_dim(seq({0, 0}), seq({0, 2}), cv1(), eps).is_zero());
        CHECK(graded_hom_dim(seq({0, 1, 0}), seq({0, 0, 1}), cv1(), eps).is_zero());
        // adjacent-equal after an admissible swap is just as dead
        CHECK(graded_hom_dim(seq({0, 2, 0}), seq({0, 2, 0}), cv1(), eps).is_zero());
        // value at q = 1 counts the basis pairs
        LaurentPoly g = graded_hom_dim(seq({0, 1, 0}), seq({0, 1, 0}), cv1(), eps);
        long long pairs = 0;
        std::map<Multipartition, std::pair<long long, long long>> byshape;
        for (const auto& t : enumerate_tableaux_all(3, 1)) {
            if (t.residue_seq(cv1()) == seq({0, 1, 0})) byshape[t.shape()].first++;
            if (t.dual_residue_seq(cv1()) == seq({0, 1, 0})) byshape[t.shape()].second++;
        }
        for (auto& [s, c] : byshape) pairs += c.first * c.second;
        CHECK(g.eval_at_one() == Rational(static_cast<long>(pairs)));
        CHECK(pairs > 0);
    }
}

TEST_CASE("action degrees on standards") {
    for (int eps : {1, -1}) {
        auto r0 = eklr_act(Partition(), kZero, kZero, eps);
        REQUIRE(r0.size() == 1);
        CHECK(r0[0] == std::make_pair(Partition({1}), 0LL));

        auto r1 = eklr_act(Partition({1}), kZero.plus(1), kZero, eps);
        REQUIRE(r1.size() == 2);
        CHECK(r1[0] == std::make_pair(Partition(), static_cast<long long>(eps)));
        CHECK(r1[1] == std::make_pair(Partition({2}), 0LL));

        // no content-0 addable and no content-(-1) removable box on (2)
        CHECK(eklr_act(Partition({2}), kZero, kZero, eps).empty());
        auto r2 = eklr_act(Partition({2}), kZero.plus(-1), kZero, eps);
        REQUIRE(r2.size() == 1);
        CHECK(r2[0] == std::make_pair(Partition({2, 1}), 0LL));
    }
}

TEST_CASE("graded dimension identities") {
    for (int eps : {1, -1}) {
        auto rep = relations_gdim_check(kZero, kZero.plus(1), 3, cv1(), eps);
        CHECK(rep.passed);
        auto rep2 = relations_gdim_check(kZero, kZero.plus(2), 4, cv1(), eps);
        CHECK(rep2.passed);
    }
    // residues in distinct cosets swap with ratio q^0
    ChargeVector cv2 = ChargeVector::standard(2);
    auto rep3 = relations_gdim_check(cv2.charge(1), cv2.charge(2), 4, cv2, 1);
    CHECK(rep3.passed);
    LaurentPoly a = graded_hom_dim({cv2.charge(1), cv2.charge(2)},
                                   {cv2.charge(1), cv2.charge(2)}, cv2, 1);
    LaurentPoly b = graded_hom_dim({cv2.charge(2), cv2.charge(1)},
                                   {cv2.charge(1), cv2.charge(2)}, cv2, 1);
    CHECK(a == b);
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("standard multiplicities of projectives") {
    ChargeVector cv = cv1();
    for (int eps : {1, -1}) {
        for (long long n = 0; n <= 4; ++n) {
            for (const Partition& p : enumerate_partitions(n)) {
                Multipartition mp({p});
                auto mult = projective_in_standards(mp, cv, eps, static_cast<int>(n));
                auto it = mult.find(mp);
                REQUIRE(it != mult.end());
                CHECK(it->second == LaurentPoly(Rational(1)));
                for (const auto& [mu, poly] : mult) {
                    CHECK(mu.size() <= n);
                    CHECK((n - mu.size()) % 2 == 0);
                    if (mu.size() == n) CHECK(mu == mp);
                }
            }
        }
        // a longer word brings in strictly smaller shapes
        auto m2 = projective_in_standards(Multipartition({Partition({1})}), cv, eps, 3);
        for (const auto& [mu, poly] : m2) CHECK(mu.size() <= 3);
    }
}
