#include "doctest.h"

#include "cubic/counters.hpp"
#include "cubic/datasets.hpp"

using namespace cubic;

TEST_CASE("dataset loading and validation") {
    CHECK(dataset_names() == std::vector<std::string>{"thm1", "thm2", "thm3"});
    CHECK_THROWS_AS(load_dataset("thm4", CUBIC_DATA_DIR), dataset_error);
    CHECK_THROWS_AS(load_dataset("thm1", "/nonexistent"), dataset_error);

    for (const auto& name : dataset_names()) {
        Dataset ds = load_dataset(name, CUBIC_DATA_DIR);
        CHECK(ds.name == name);
        CHECK(ds.f.arity() == 6);
        CHECK(ds.f.homogeneous());
        CHECK(ds.f.degree() == 3);
        CHECK(ds.f_good.homogeneous());
        CHECK(ds.f_good.degree() == 3);
        CHECK(ds.f_mod2.degree() == 3);
        CHECK(ds.expected_counts.size() == 11);
        CHECK(ds.expected_charpoly.size() == 23);
        // functional equation with positive sign: c_j = c_{22-j}
        for (int j = 0; j <= 22; ++j)
            CHECK(ds.expected_charpoly[j] == ds.expected_charpoly[22 - j]);
        CHECK(ds.expected_charpoly[22] == 1);
        for (const auto& g : ds.ideal) {
            CHECK(g.homogeneous());
            CHECK(g.degree() == 2);
        }
    }
    CHECK(load_dataset("thm1", CUBIC_DATA_DIR).g.has_value());
    CHECK(!load_dataset("thm2", CUBIC_DATA_DIR).g.has_value());
}

TEST_CASE("thm1: f is the apolar cubic of the plane sextic g") {
    Dataset ds = load_dataset("thm1", CUBIC_DATA_DIR);
    REQUIRE(ds.g.has_value());
    CHECK(ds.g->arity() == 3);
    CHECK(ds.g->homogeneous());
    CHECK(ds.g->degree() == 6);
    CHECK(mvee(*ds.g) == ds.f);
}

TEST_CASE("apolarity certificates") {
    for (const auto& name : dataset_names()) {
        Dataset ds = load_dataset(name, CUBIC_DATA_DIR);
        ApolarityReport rep = is_apolar(ds.f, ds.ideal);
        CHECK(rep.apolar);
        CHECK(rep.witness_index == -1);
    }
    // perturbing by y0^2 y3 breaks apolarity: <y0 y3 - y1^2, y0^2 y3> = 2 y0
    Dataset d1 = load_dataset("thm1", CUBIC_DATA_DIR);
    MPolyQ generic = d1.f + MPolyQ::monomial(6, Exp{2, 0, 0, 1}, 1, 'y');
    ApolarityReport bad = is_apolar(generic, d1.ideal);
    CHECK(!bad.apolar);
    CHECK(bad.witness_index >= 0);
    CHECK(!bad.residual.is_zero());
}

TEST_CASE("shipped ideals match the minor constructions") {
    auto lin = [](int i) { return MPolyQ::variable(6, i, 'y'); };

    Dataset d1 = load_dataset("thm1", CUBIC_DATA_DIR);
    // symmetric 3x3 catalecticant: minors of [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]]
    std::vector<std::vector<MPolyQ>> sym = {
        {lin(0), lin(1), lin(2)}, {lin(1), lin(3), lin(4)}, {lin(2), lin(4), lin(5)}};
    CHECK(minors_2x2(sym) == d1.ideal);

    Dataset d2 = load_dataset("thm2", CUBIC_DATA_DIR);
    // quartic scroll: minors of [[y0,y1,y3,y4],[y1,y2,y4,y5]]
    std::vector<std::vector<MPolyQ>> scroll = {
        {lin(0), lin(1), lin(3), lin(4)}, {lin(1), lin(2), lin(4), lin(5)}};
    CHECK(minors_2x2(scroll) == d2.ideal);

    Dataset d3 = load_dataset("thm3", CUBIC_DATA_DIR);
    CHECK(d3.ideal == std::vector<MPolyQ>{lin(0) * lin(5), lin(1) * lin(5),
                                          lin(2) * lin(5)});
}

TEST_CASE("good-reduction substitution only rescales the stated variables") {
    Dataset d1 = load_dataset("thm1", CUBIC_DATA_DIR);
    for (int i : {0, 3, 4})
        CHECK(d1.subst_images[i] == MPolyQ::variable(6, i, 'y'));
    for (int i : {1, 2, 5})
        CHECK(d1.subst_images[i] == MPolyQ::variable(6, i, 'y') * Rat(1, 2));

    Dataset d3 = load_dataset("thm3", CUBIC_DATA_DIR);
    for (int i = 0; i < 6; ++i)
        CHECK(d3.subst_images[i] == MPolyQ::variable(6, i, 'y'));
}

TEST_CASE("reduced cubics tie to the published m = 1 counts") {
    FieldCtx f2(1);
    for (const auto& name : dataset_names()) {
        Dataset ds = load_dataset(name, CUBIC_DATA_DIR);
        CHECK(count_naive(ds.f_mod2, f2).count == ds.expected_counts[0]);
    }
}
