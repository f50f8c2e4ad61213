#include <doctest.h>

#include "../src/errors.hpp"
#include "../src/hesse.hpp"

using namespace geolab;
using namespace geolab::hesse;

namespace {

BranchSpec spin_spec(int alpha, int beta, int d, int p) {
    BranchSpec s;
    s.spin = true;
    s.alpha = alpha;
    s.beta = beta;
    s.d = d;
    s.p = p;
    return s;
}

BranchSpec nonspin_spec(int alpha, int beta, int d, int p) {
    BranchSpec s = spin_spec(alpha, beta, d, p);
    s.spin = false;
    return s;
}

}  // namespace

TEST_SUITE("hesse") {
    TEST_CASE("configuration incidence structure") {
        auto inc = dual_hesse();
        for (int l = 0; l < kLines; ++l) {
            auto pts = inc.points_on(l);
            bool seen[4] = {};
            for (int p : pts) {
                CHECK(!seen[DualHesseIncidence::direction_of(p)]);
                seen[DualHesseIncidence::direction_of(p)] = true;
            }
        }
        for (int p = 0; p < kPoints; ++p) (void)inc.lines_through(p);  // throws unless exactly 3
        int pairs_sharing = 0;
        for (int l = 0; l < kLines; ++l)
            for (int l2 = l + 1; l2 < kLines; ++l2) {
                int common = 0;
                for (int p = 0; p < kPoints; ++p)
                    if (inc.incident[l][p] && inc.incident[l2][p]) ++common;
                CHECK(common == 1);
                ++pairs_sharing;
            }
        CHECK(pairs_sharing == 36);

        // Each direction's three points split the nine lines into the three
        // singular-fiber triples of that pencil.
        for (int dir = 0; dir < kDirections; ++dir) {
            auto part = inc.fiber_partition(dir);
            bool seen_line[kLines] = {};
            for (const auto& triple : part)
                for (int l : triple) {
                    CHECK(!seen_line[l]);
                    seen_line[l] = true;
                    CHECK(inc.incident[l][3 * dir + (&triple - &part[0])]);
                }
        }
        CHECK_THROWS_AS((void)inc.fiber_partition(4), std::domain_error);
    }

    TEST_CASE("pairing of the basic classes") {
        CHECK(pair(cls_L(), cls_L()) == 1);
        CHECK(pair(cls_e(0), cls_e(0)) == -1);
        CHECK(pair(cls_e(0), cls_e(1)) == 0);
        CHECK(pair(cls_L(), cls_e(5)) == 0);
        CHECK(pair(cls_KH(), cls_KH()) == -3);
        for (int i = 0; i < kDirections; ++i) {
            CHECK(pair(cls_F(i), cls_F(i)) == 0);
            CHECK(pair(cls_L(), cls_F(i)) == 3);
            CHECK(pair(cls_KH(), cls_F(i)) == 0);
            CHECK(pair(cls_M(), cls_F(i)) == 0);  // the nine lines miss the elliptic fibers
            for (int j = i + 1; j < kDirections; ++j) CHECK(pair(cls_F(i), cls_F(j)) == 3);
        }
        // each exceptional curve meets the fibers of the three other pencils
        CHECK(pair(cls_e(0), cls_F(0)) == 0);
        CHECK(pair(cls_e(0), cls_F(1)) == 1);
        CHECK(pair(cls_e(0), cls_F(3)) == 1);
    }

    TEST_CASE("aggregate exceptional classes need the torsion level") {
        CHECK_THROWS_AS(pair(cls_E_agg(), cls_E_agg()), std::domain_error);
        CHECK(pair(cls_E_agg(), cls_L()) == 0);  // mixed terms vanish without n
        Int n = 6;
        CHECK(t3_count(n) == 132);
        CHECK(t4_count(n) == 297);
        CHECK(pair(cls_E_agg(), cls_E_agg(), n) == -297);
        CHECK(pair(cls_G_agg(), cls_G_agg(), n) == -132);
        CHECK(pair(cls_E_agg(), cls_G_agg(), n) == 0);
        CHECK(pair(cls_KY(), cls_KY(), n) == -3 - 132 - 297);
    }

    TEST_CASE("fiber decomposition from the incidence") {
        auto inc = dual_hesse();
        for (int p = 0; p < kPoints; ++p) {
            DivClass fiber = 3 * cls_e(p);  // central curve with multiplicity three
            for (int l : inc.lines_through(p)) {
                DivClass line = cls_L();
                for (int q : inc.points_on(l)) line = line - cls_e(q);
                fiber = fiber + line;
            }
            CHECK(fiber == cls_F(DualHesseIncidence::direction_of(p)));
        }
        for (int i = 0; i < kDirections; ++i) CHECK(cls_M() + 3 * cls_Ni(i) == 3 * cls_F(i));
    }

    TEST_CASE("strict-transform bookkeeping") {
        CHECK(cls_M() + 3 * cls_N_strict() + 3 * cls_G_agg() == 9 * cls_L());
        DivClass fsum;
        for (int i = 0; i < kDirections; ++i) fsum = fsum + cls_F(i);
        CHECK(fsum == 12 * cls_L() - 3 * cls_N_strict() - 3 * cls_G_agg());
        CHECK(cls_KY() == -3 * cls_L() + cls_N_strict() + cls_E_agg() + 2 * cls_G_agg());
    }

    TEST_CASE("branch specification sanity") {
        auto s = spin_spec(1, 0, 1, 5);
        CHECK(s.n() == 60);
        CHECK(s.degree() == 20);
        CHECK(s.high_mult() == 9);
        CHECK(s.elliptic_count() == 1199);
        CHECK(s.fiber_translates() == 0);
        CHECK(s.line_count() == 4);
        auto t = nonspin_spec(1, 1, 2, 7);
        CHECK(t.n() == 21);
        CHECK(t.degree() == 7);
        CHECK(t.high_mult() == 6);
        CHECK(t.elliptic_count() == 146);
        CHECK(t.fiber_translates() == 49);
        CHECK(t.line_count() == 2);

        CHECK_THROWS_AS(validate(spin_spec(0, 0, 1, 5)), std::domain_error);
        CHECK_THROWS_AS(validate(spin_spec(1, -1, 1, 5)), std::domain_error);
        CHECK_THROWS_AS(validate(spin_spec(1, 0, 0, 5)), std::domain_error);
        CHECK_THROWS_AS(validate(spin_spec(1, 0, 1, 9)), std::domain_error);   // not prime
        CHECK_THROWS_AS(validate(spin_spec(1, 0, 1, 3)), std::domain_error);   // too small
        CHECK_THROWS_AS(validate(nonspin_spec(1, 1, 1, 7)), std::domain_error);  // 2d < 3
        CHECK_THROWS_AS(validate(nonspin_spec(1, 1, 4, 7)), std::domain_error);  // 2d > p
        CHECK_NOTHROW(validate(nonspin_spec(1, 1, 2, 7)));
    }

    TEST_CASE("root divisibility on the plane model") {
        for (auto spec : {spin_spec(1, 0, 1, 5), spin_spec(1, 1, 1, 5), spin_spec(2, 3, 4, 11),
                          nonspin_spec(1, 1, 2, 7), nonspin_spec(1, 0, 2, 5), nonspin_spec(3, 2, 5, 13)}) {
            CAPTURE(spec.spin);
            CHECK(check_root_divisibility(spec));
        }
    }

    TEST_CASE("perturbed multiplicities break the divisibility") {
        auto spec = spin_spec(1, 0, 1, 5);
        // same assembly as the branch class, but with the high multiplicity
        // bumped from 2p-1 to 2p on the last two directions
        DivClass b;
        for (int i = 0; i < kDirections; ++i) {
            Int ai = i < 2 ? Int(1) : Int(2 * spec.p);
            b = b + 3 * ai * (cls_Efam(spec, i) + cls_Eprime(spec, i));
            b = b + ai * (cls_M() + 3 * cls_Ni(i));
        }
        b = b + 3 * spec.line_count() * (1 + 2 * spec.p) * cls_L();
        CHECK(b != spec.degree() * cls_L0(spec));
    }

    TEST_CASE("root divisibility after the blow-ups") {
        for (auto spec : {spin_spec(1, 0, 1, 5), spin_spec(2, 1, 3, 7), nonspin_spec(1, 1, 2, 7),
                          nonspin_spec(2, 0, 3, 11)}) {
            CAPTURE(spec.spin);
            CHECK(branch_class_blowup(spec) == spec.degree() * cls_LY(spec));
        }
    }

    TEST_CASE("spin parity certificate") {
        for (auto spec : {spin_spec(1, 0, 1, 5), spin_spec(1, 1, 1, 5), spin_spec(2, 3, 4, 11),
                          spin_spec(1, 2, 2, 13)}) {
            CAPTURE(to_string(spec.p));
            CHECK(check_spin_parity(spec));
        }
        CHECK_THROWS_AS(check_spin_parity(nonspin_spec(1, 1, 2, 7)), std::domain_error);
    }

    TEST_CASE("parity needs the strict transforms of the central curves") {
        auto spec = spin_spec(1, 0, 1, 5);
        // forgetting that each 3-point lies on a central curve leaves the
        // total transform N in the canonical class; the certificate must not
        // accept that version
        DivClass ky_raw = -3 * cls_L() + cls_N() + cls_E_agg() + 2 * cls_G_agg();
        DivClass raw = ky_raw + (spec.degree() - 1) * cls_LY(spec);
        CHECK_FALSE(is_even_class(raw));
        DivClass good = cls_KY() + (spec.degree() - 1) * cls_LY(spec);
        CHECK(is_even_class(good));
    }

    TEST_CASE("identity suite passes for both variants") {
        for (auto spec : {spin_spec(1, 1, 1, 5), nonspin_spec(1, 1, 2, 7)}) {
            auto checks = identity_suite(spec);
            CHECK(checks.size() >= (spec.spin ? 10u : 9u));
            for (const auto& c : checks) {
                CAPTURE(c.name);
                CHECK(c.pass);
            }
        }
    }

    TEST_CASE("named class lookup") {
        CHECK(named_class("L") == cls_L());
        CHECK(named_class("e7") == cls_e(7));
        CHECK(named_class("N2") == cls_Ni(2));
        CHECK(named_class("F3") == cls_F(3));
        CHECK(named_class("Nstrict") == cls_N_strict());
        CHECK(named_class("KY") == cls_KY());
        auto spec = spin_spec(1, 0, 1, 5);
        CHECK(named_class("L0", spec) == cls_L0(spec));
        CHECK(named_class("branch_plane", spec) == branch_class_plane(spec));
        CHECK(named_class("Efam2", spec) == cls_Efam(spec, 2));
        CHECK_THROWS_AS(named_class("e12"), std::domain_error);
        CHECK_THROWS_AS(named_class("F4"), std::domain_error);
        CHECK_THROWS_AS(named_class("L0"), std::domain_error);  // needs a spec
        CHECK_THROWS_AS(named_class("bogus"), std::domain_error);
    }
}
