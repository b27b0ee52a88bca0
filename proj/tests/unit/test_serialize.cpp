#include "doctest.h"

#include "jetalg/serialize.hpp"
#include "jetalg/suites.hpp"

using namespace jetalg;

namespace {

template <class T> void check_element_roundtrip(const T &x) {
    const json j = element_to_json(AnyElement{x});
    const AnyElement back = element_from_json(j);
    REQUIRE(std::holds_alternative<T>(back));
    CHECK(std::get<T>(back) == x);
    CHECK(element_to_json(back) == j);
    CHECK(json::parse(j.dump()) == j);
}

} // namespace

TEST_CASE("rationals") {
    CHECK(rational_to_json(make_rational(-3, 6)) == "-1/2");
    CHECK(rational_to_json(Rational(4)) == "4");
    CHECK(rational_from_json("6/4") == make_rational(3, 2));
    CHECK(rational_from_json(json(-7)) == -7);
    CHECK_THROWS_AS(rational_from_json("1/0"), Error);
    CHECK_THROWS_AS(rational_from_json("x"), Error);
    CHECK_THROWS_AS(rational_from_json(json(1.5)), Error);
    CHECK_THROWS_AS(rational_from_json(json::array()), Error);
}

TEST_CASE("element round trips") {
    Rng rng(91);
    for (int t = 0; t < 30; ++t) {
        const GAElement ga = random_ga(rng, 4);
        check_element_roundtrip(ga.g);
        check_element_roundtrip(ga.a);
        check_element_roundtrip(ga);
        check_element_roundtrip(random_l(rng, 4));
        check_element_roundtrip(random_bplus(rng, 4));
    }
    check_element_roundtrip(LElement{});
    CHECK(algebra_name(AnyElement{BPlusElement{}}) == "Bplus");
    CHECK(algebra_name(AnyElement{GAElement{}}) == "GA");
}

TEST_CASE("element parsing canonicalizes") {
    const json j = json::parse(R"({"algebra":"L","terms":[{"index":[1,0],"coeff":"1/2"},{"index":[1,0],"coeff":"-1/2"},
                                  {"index":[2,1],"coeff":"2/4"}]})");
    const AnyElement x = element_from_json(j);
    CHECK(std::get<LElement>(x) == LElement::basis({2, 1}, make_rational(1, 2)));
    const json canon = element_to_json(x);
    CHECK(element_to_json(element_from_json(canon)) == canon);
    CHECK(canon["terms"].size() == 1);
}

TEST_CASE("malformed elements are rejected") {
    for (const char *text : {R"({})", R"({"algebra":"Q","terms":[]})", R"({"algebra":"L"})",
                             R"({"algebra":"L","terms":[{"index":[1],"coeff":"1"}]})",
                             R"({"algebra":"L","terms":[{"index":[1,0]}]})",
                             R"({"algebra":"L","terms":[{"index":["a",0],"coeff":"1"}]})",
                             R"({"algebra":"G","terms":[{"index":[0,0],"coeff":"1"}]})",
                             R"({"algebra":"Bplus","terms":[{"index":[-1,0],"coeff":"1"}]})", R"([1,2])", R"("L")"})
        CHECK_THROWS_AS(element_from_json(json::parse(text)), Error);
}

TEST_CASE("matrices and sl2 reps") {
    const QMatrix a{{1, 2}, {3, 4}};
    CHECK(matrix_from_json(matrix_to_json(a)) == a);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1","2"],["3"]])")), Error);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"("x")")), Error);
    for (std::int64_t n = 0; n <= 4; ++n) {
        const SL2Rep r = sl2_irrep(n);
        CHECK(sl2_from_json(sl2_to_json(r)) == r);
    }
    json bad = sl2_to_json(sl2_irrep(1));
    bad["h"] = matrix_to_json(QMatrix::identity(2));
    CHECK_THROWS_AS(sl2_from_json(bad), Error);
    json wrong_dim = sl2_to_json(sl2_irrep(1));
    wrong_dim["dim"] = 3;
    CHECK_THROWS_AS(sl2_from_json(wrong_dim), Error);
}

TEST_CASE("index keys") {
    CHECK(index_key({2, 1}) == "2,1");
    CHECK(index_from_key("0,3") == MultiIndex{0, 3});
    CHECK_THROWS_AS(index_from_key("1"), Error);
    CHECK_THROWS_AS(index_from_key("-1,2"), Error);
    CHECK_THROWS_AS(index_from_key("a,b"), Error);
}

TEST_CASE("B_+ reps and validation on parse") {
    const BPlusRep r = truncated_adjoint_rep(3, 1, make_rational(1, 3));
    CHECK(bplus_rep_from_json(bplus_rep_to_json(r)) == r);
    const json bad = json::parse(R"({"dim":1,"gens":{"1,1":[["1"]],"2,0":[["1"]]}})");
    CHECK_THROWS_AS(bplus_rep_from_json(bad), Error);
    CHECK_NOTHROW(bplus_rep_from_json(bad, false));
}

TEST_CASE("spec round trips") {
    for (const auto &s : reference_f_specs()) {
        const json j = spec_to_json(s);
        CHECK(spec_from_json(j) == s);
        CHECK(spec_to_json(spec_from_json(j)) == j);
    }
    Rng rng(92);
    for (int t = 0; t < 5; ++t) {
        const JetModuleSpec b = make_b_spec(rng.nonzero_rational(), random_bplus_rep(rng, t % 2 == 0));
        CHECK(spec_from_json(spec_to_json(b)) == b);
    }
    const json f = json::parse(R"({"kind":"F","alpha":["1/2","0"],"lambda":"1",
                                  "rep":{"dim":1,"e":[["0"]],"f":[["0"]],"h":[["0"]]}})");
    const JetModuleSpec s = spec_from_json(f);
    CHECK(s.is_f());
    CHECK(s.f().alpha.first == make_rational(1, 2));

    json zero_lambda = f;
    zero_lambda["lambda"] = "0";
    CHECK_THROWS_AS(spec_from_json(zero_lambda), Error);
    json bad_kind = f;
    bad_kind["kind"] = "X";
    CHECK_THROWS_AS(spec_from_json(bad_kind), Error);
    json bad_alpha = f;
    bad_alpha["alpha"] = json::array({"1"});
    CHECK_THROWS_AS(spec_from_json(bad_alpha), Error);
}

TEST_CASE("module vectors and families") {
    Rng rng(93);
    for (int t = 0; t < 10; ++t) {
        const ModuleVector v = random_module_vector(rng, 3, 3);
        CHECK(vector_from_json(vector_to_json(v)) == v);
    }
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"dim":2,"support":[{"grade":[0,0],"vec":["1"]}]})")), Error);
    CHECK_THROWS_AS(vector_from_json(json::parse(R"({"dim":2})")), Error);

    PolyOperatorFamily f;
    f.dim = 2;
    f.coeffs[{1, 1}] = sl2_irrep(1).h();
    f.coeffs[{0, 1}] = QMatrix::identity(2);
    CHECK(family_from_json(family_to_json(f)) == f);
}

TEST_CASE("axiom reports") {
    const std::vector<AxiomResult> r{{"brackets-dd", true, std::nullopt}, {"brackets-dt", false, "m=(1,0)"}};
    const json j = axiom_report_to_json(r);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["counterexample"].is_null());
    CHECK(j[1]["pass"] == false);
    CHECK(j[1]["counterexample"].is_object());
    CHECK(j[1]["counterexample"]["detail"] == "m=(1,0)");
}

TEST_CASE("reductive elements") {
    const json j = reductive_to_json(project_reductive(LElement::basis({2, 1})));
    CHECK(j["z1"] == "2");
    CHECK(j["z2"] == "1");
}
