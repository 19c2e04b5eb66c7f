#include <gtest/gtest.h>

#include <sstream>

#include "lrc/lrc.hpp"

using namespace lrc;

TEST(MatrixIo, RoundTrip) {
    const auto H = generate_random(9, 5, 7, 3);
    std::stringstream ss;
    write_matrix(ss, H);
    EXPECT_EQ(read_matrix(ss), H);
}

TEST(MatrixIo, CommentsBlanksAndSpaces) {
    std::istringstream in("# header\n0, 1,2\n\n3,4 ,4294967295\n");
    const auto H = read_matrix(in);
    EXPECT_EQ(H.rows(), 2u);
    EXPECT_EQ(H(1, 2), 4294967295u);
}

TEST(MatrixIo, Errors) {
    std::istringstream neg("0,1\n1,-1\n");
    try {
        read_matrix(neg);
        FAIL();
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("negative value at row 1, column 1"), std::string::npos);
    }
    std::istringstream ragged("0,1\n1\n");
    EXPECT_THROW(read_matrix(ragged), FormatError);
    std::istringstream junk("0,a\n");
    EXPECT_THROW(read_matrix(junk), FormatError);
    std::istringstream big("4294967296\n");
    EXPECT_THROW(read_matrix(big), FormatError);
    std::istringstream empty("# nothing\n");
    EXPECT_THROW(read_matrix(empty), FormatError);
    EXPECT_THROW(read_matrix(std::string("/nonexistent/matrix.csv")), std::ios_base::failure);
}

TEST(RealsIo, RoundTripExact) {
    const std::vector<double> v{0.1, 1.0 / 3.0, 2.5e-17, 0.7};
    std::stringstream ss;
    write_reals(ss, v);
    EXPECT_EQ(read_reals(ss), v);
}

TEST(FormatReal, ShortestRoundTrip) {
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(format_real(2.0), "2");
    EXPECT_EQ(std::stod(format_real(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(KeyValuesIo, ParseAndWrite) {
    std::istringstream in("# comment\nalgorithm = majority\n  rows=10 \n\nname = a = b\n");
    const auto kv = read_key_values(in);
    EXPECT_EQ(kv.at("algorithm"), "majority");
    EXPECT_EQ(kv.at("rows"), "10");
    EXPECT_EQ(kv.at("name"), "a = b");
    std::stringstream out;
    write_key_values(out, kv);
    EXPECT_EQ(read_key_values(out), kv);
    std::istringstream bad("novalue\n");
    EXPECT_THROW(read_key_values(bad), FormatError);
}
