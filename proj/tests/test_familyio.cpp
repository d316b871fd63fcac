#include "generators.hpp"

#include <ekr/familyio.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace ekr;

namespace {

FamilyFile read_text(const std::string& text)
{
    std::istringstream is(text);
    return read_family(is);
}

} // namespace

TEST(FamilyIo, ParseGround)
{
    EXPECT_EQ(parse_ground("grassmann 4 2 3"), GroundDescriptor::grassmann(4, 2, 3));
    EXPECT_EQ(parse_ground("symmetric 5"), GroundDescriptor::symmetric(5));
    EXPECT_THROW(parse_ground("grassmann 4 5 2"), std::invalid_argument);
    EXPECT_THROW(parse_ground("grassmann 4 2"), std::invalid_argument);
    EXPECT_THROW(parse_ground("symmetric 0"), std::invalid_argument);
    EXPECT_THROW(parse_ground("affine 3"), std::invalid_argument);
}

TEST(FamilyIo, GrassmannRoundTrip)
{
    gen::Rng rng(81);
    for (auto [n, k, q] : {std::tuple{4, 2, 2}, std::tuple{5, 2, 2}, std::tuple{4, 2, 3}, std::tuple{3, 0, 2}}) {
        const auto g = enumerate_subspaces(n, k, q);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = gen::family(rng, g, 0, 12);
            std::ostringstream os;
            write_family(os, g, f);
            const auto file = read_text(os.str());
            EXPECT_EQ(file.indices.has_value(), k == 0);
            ASSERT_EQ(resolve_family(file, g), f) << os.str();
        }
    }
}

TEST(FamilyIo, SymmetricRoundTrip)
{
    gen::Rng rng(82);
    for (int n = 1; n <= 5; ++n) {
        const SymmetricGround g(n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = gen::family(rng, g, 0, 30);
            std::ostringstream os;
            write_family(os, g, f);
            ASSERT_EQ(resolve_family(read_text(os.str()), g), f) << os.str();
            std::ostringstream ix;
            write_indices(ix, f);
            ASSERT_EQ(resolve_family(read_text(ix.str()), g), f) << ix.str();
        }
    }
}

TEST(FamilyIo, CommentsAndUnsortedInput)
{
    const SymmetricGround g(3);
    const auto file = read_text("# a family\nsymmetric 3\n\n3 2 1\n# middle\n1 2 3\n");
    const auto f = resolve_family(file, g);
    EXPECT_EQ(f.members(), (std::vector<std::size_t>{0, 5}));

    const auto gr = enumerate_subspaces(3, 1, 2);
    const auto pts = resolve_family(read_text("grassmann 3 1 2\n0 0 1\n\n\n1 1 0\n"), gr);
    EXPECT_EQ(pts.size(), 2u);
}

TEST(FamilyIo, Errors)
{
    const SymmetricGround s3(3);
    const auto g = enumerate_subspaces(4, 2, 2);
    EXPECT_THROW(read_text(""), std::invalid_argument);
    EXPECT_THROW(read_text("# only a comment\n"), std::invalid_argument);
    EXPECT_THROW(read_text("symmetric 3\n1 2 3 4\n"), std::invalid_argument);
    EXPECT_THROW(read_text("symmetric 3\n1 1 2\n"), std::invalid_argument);
    EXPECT_THROW(read_text("symmetric 3\nindices: 0 1\n1 2 3\n"), std::invalid_argument);
    EXPECT_THROW(read_text("symmetric 3\nindices: 0 -1\n"), std::invalid_argument);
    EXPECT_THROW(read_text("symmetric 3\nindices: 0 x\n"), std::invalid_argument);
    EXPECT_THROW(read_text("grassmann 4 2 2\n1 0 0 0\n\n0 1 0 0\n"), std::invalid_argument);
    EXPECT_THROW(resolve_family(read_text("symmetric 3\n1 2 3\n1 2 3\n"), s3), std::invalid_argument);
    EXPECT_THROW(resolve_family(read_text("symmetric 3\nindices: 6\n"), s3), std::out_of_range);
    EXPECT_THROW(resolve_family(read_text("symmetric 4\n1 2 3 4\n"), s3), std::invalid_argument);
    EXPECT_THROW(resolve_family(read_text("grassmann 4 2 3\n1 0 0 0\n0 1 0 0\n"), g), std::invalid_argument);
}
