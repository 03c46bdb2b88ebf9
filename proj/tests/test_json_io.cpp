#include "brauer/json_io.hpp"
#include "brauer/sigma.hpp"
#include "oracle_util.hpp"

#include <gtest/gtest.h>

using namespace bk;

TEST(Json, DiagramRoundTrip) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 * static_cast<int>(rng() % 5);
        const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
        const Diagram d = oracle::random_diagram(k, n - k, rng);
        EXPECT_EQ(diagram_from_json(json::parse(to_json(d).dump())), d);
    }
    EXPECT_EQ(to_json(cap()).dump(), R"({"k":2,"ell":0,"pairs":[[1,2]]})");
}

TEST(Json, SumRoundTrip) {
    DiagramSum x = symmetrizer(3, -1) * (Poly::delta(2) - Poly(Rational(3, 2)));
    x.add_term(identity(3), Poly::delta());
    EXPECT_EQ(sum_from_json(json::parse(to_json(x).dump())), x);
    const DiagramSum c(cup(), Poly::delta() * Rational(-1, 2));
    EXPECT_EQ(to_json(c).dump(), R"({"valency":[0,2],"terms":[{"pairs":[[1,2]],"coeff":[["-1/2",1]]}]})");
    // integers and bare rationals are accepted as constant coefficients
    const json j = json::parse(R"({"valency":[0,2],"terms":[{"pairs":[[1,2]],"coeff":"3/4"}]})");
    EXPECT_EQ(sum_from_json(j), DiagramSum(cup(), Poly(Rational(3, 4))));
}

TEST(Json, OrientedRoundTrip) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const OrientedDiagram d = random_oriented(3, 3, seed);
        const json j = to_json(d);
        EXPECT_EQ(j["source"], d.source());
        EXPECT_EQ(oriented_from_json(json::parse(j.dump())), d);
    }
    // signs alone determine the orientation
    const json j = json::parse(R"({"k":2,"ell":0,"pairs":[[1,2]],"source":"-+","target":""})");
    EXPECT_EQ(oriented_from_json(j), oriented_generator("A+"));
    const json bad = json::parse(R"({"k":2,"ell":0,"pairs":[[1,2]],"tails":[1],"source":"+-"})");
    EXPECT_THROW(oriented_from_json(bad), std::invalid_argument);
}

TEST(Json, MatrixRoundTrip) {
    Matrix m(2, 3);
    m(0, 1) = Rational(-2, 3);
    m(1, 2) = 5;
    const json j = to_json(m);
    EXPECT_EQ(j.dump(), R"({"rows":2,"cols":3,"entries":[["0","-2/3","0"],["0","0","5"]]})");
    EXPECT_EQ(matrix_from_json(j), m);
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW(diagram_from_json(json::parse(R"({"k":2,"ell":0})")), std::invalid_argument);
    EXPECT_THROW(diagram_from_json(json::parse(R"({"k":2,"ell":0,"pairs":[[1,1]]})")), std::invalid_argument);
    EXPECT_THROW(diagram_from_json(json::parse(R"({"k":3,"ell":0,"pairs":[[1,2]]})")), ValencyError);
    EXPECT_THROW(sum_from_json(json::parse(R"({"valency":[1,2],"terms":[]})")), ValencyError);
    EXPECT_THROW(poly_from_json(json::parse(R"([["1/0",0]])")), std::invalid_argument);
    EXPECT_THROW(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")), std::invalid_argument);
}

TEST(Json, ReportShape) {
    Report r{"demo", {}};
    r.add("x = y", "1", "1", true);
    EXPECT_EQ(to_json(r).dump(),
              R"({"name":"demo","pass":true,"checks":[{"claim":"x = y","lhs":"1","rhs":"1","pass":true}]})");
}
