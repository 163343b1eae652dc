#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/io.hpp"

using namespace qhopf;

TEST(Parse, CycloExpressions)
{
    EXPECT_EQ(parse_cyclo_expr("1", 1), CycloNumber(1));
    EXPECT_EQ(parse_cyclo_expr("-1/2", 3), CycloNumber(Rational(-1, 2), 3));
    EXPECT_EQ(parse_cyclo_expr("z^2", 4), CycloNumber(-1, 4));
    EXPECT_EQ(parse_cyclo_expr("1/2*z + 3", 5), CycloNumber::from_poly(5, {3, Rational(1, 2)}));
    EXPECT_EQ(parse_cyclo_expr("z+z^4-1", 5), remark5_parameter());
    for (const char* bad : {"", "z^", "2**z", "1/0", "abc", "3 4", "*z"})
        EXPECT_THROW(parse_cyclo_expr(bad, 5), Error) << bad;
}

TEST(Parse, MatrixDocuments)
{
    EXPECT_EQ(parse_matrix(json::parse(R"({"conductor": 3, "antidiag": ["1","1","z","z"]})")), remark4(3).e());
    EXPECT_EQ(parse_matrix(json::parse(R"({"conductor": 1, "matrix": [["1","0"],["0","1"]]})")),
              ExactMatrix::identity(2));
    EXPECT_EQ(parse_matrix(json::parse(R"({"conductor": 5, "antidiag": ["1","1","z+z^4-1"]})")), remark5().e());
    EXPECT_EQ(parse_matrix(json::parse(R"({"conductor": 1, "diag": ["2", 3]})")),
              ExactMatrix::diag({CycloNumber(2), CycloNumber(3)}));
}

TEST(Parse, MatrixErrorsNameTheField)
{
    auto message = [](const char* text) {
        try {
            parse_matrix(json::parse(text));
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message(R"({"conductor": 1, "matrix": [["1"]], "extra": 1})").find("extra"), std::string::npos);
    EXPECT_NE(message(R"({"conductor": 1, "matrix": [["1","0"],["0"]]})").find("square"), std::string::npos);
    EXPECT_NE(message(R"({"matrix": [["1"]]})").find("conductor"), std::string::npos);
    EXPECT_NE(message(R"({"conductor": 1, "antidiag": ["1","0"]})").find("zero"), std::string::npos);
    EXPECT_NE(message(R"({"conductor": 1, "matrix": [["1/x"]]})").find("1/x"), std::string::npos);
    EXPECT_NE(message(R"({"conductor": 0, "matrix": [["1"]]})").find("conductor"), std::string::npos);
}

TEST(Serialize, RoundTripCorpus)
{
    std::vector<ExactMatrix> corpus = {remark5().e(), remark4(3).e(), remark4(4).e(), example7(5).e(),
                                       ExactMatrix::identity(3)};
    for (std::uint64_t m = 1; m <= 10; ++m)
        corpus.push_back(prop2(m).e());
    std::mt19937 rng(61);
    for (int k = 0; k < 10; ++k)
        corpus.push_back(oracle::random_invertible(rng, 3, 1 + k % 12, 3));
    for (const auto& e : corpus) {
        EXPECT_EQ(parse_matrix(to_json(e)), e);
        EXPECT_EQ(parse_matrix(json::parse(to_json(e).dump())), e);
    }
}

TEST(Serialize, CycloJsonRoundTrip)
{
    std::mt19937 rng(62);
    for (int k = 0; k < 50; ++k) {
        const auto x = oracle::random_cyclo(rng, 1 + k % 12);
        EXPECT_EQ(cyclo_from_json(to_json(x)), x);
    }
    EXPECT_EQ(to_json(CycloNumber(Rational(-1, 2))).dump(), R"({"conductor":1,"coeffs":{"0":"-1/2"}})");
}

TEST(Serialize, HaarTable)
{
    const BEPresentation p(antidiag({CycloNumber(1), CycloNumber(-1)}));
    const json doc = to_json(HaarMomentTable(p));
    ASSERT_EQ(doc["moments"].size(), 16u);
    EXPECT_EQ(cyclo_from_json(doc["denominator"]), CycloNumber(-2));
    // (k,l,i,j) = (2,1,1,2) in 1-based indices
    bool found = false;
    for (const auto& rec : doc["moments"])
        if (rec["k"] == 2 && rec["l"] == 1 && rec["i"] == 1 && rec["j"] == 2) {
            EXPECT_EQ(cyclo_from_json(rec["value"]), CycloNumber(Rational(-1, 2)));
            found = true;
        }
    EXPECT_TRUE(found);
}
