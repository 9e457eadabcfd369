#include "homcheck/term.hpp"

#include <gtest/gtest.h>

using namespace homcheck;

namespace {

RawTerms var(int i) { return raw_single(RawTerm::leaf(i)); }

} // namespace

TEST(ExpandMacros, JacobianHasThreeWords)
{
	std::vector<RawTerms> args{var(0), var(1), var(2)};
	RawTerms j = expand_macros("J", args);
	ASSERT_EQ(j.size(), 3u);
	// xy·α(z) + yz·α(x) + zx·α(y)
	auto x = RawTerm::leaf(0), y = RawTerm::leaf(1), z = RawTerm::leaf(2);
	EXPECT_EQ(j[0].term, RawTerm::prod(RawTerm::prod(x, y), RawTerm::twist(z)));
	EXPECT_EQ(j[1].term, RawTerm::prod(RawTerm::prod(y, z), RawTerm::twist(x)));
	EXPECT_EQ(j[2].term, RawTerm::prod(RawTerm::prod(z, x), RawTerm::twist(y)));
	for (const auto &e : j)
		EXPECT_EQ(e.coeff, 1);
}

TEST(ExpandMacros, GHasNineSignedWords)
{
	std::vector<RawTerms> args{var(0), var(1), var(2), var(3)};
	RawTerms g = expand_macros("G", args);
	ASSERT_EQ(g.size(), 9u);
	int negative = 0;
	for (const auto &e : g)
		negative += e.coeff < 0;
	EXPECT_EQ(negative, 6);
	// first word: (w·x)·α(y) · α(α(z))
	auto w = RawTerm::leaf(0), x = RawTerm::leaf(1), y = RawTerm::leaf(2), z = RawTerm::leaf(3);
	EXPECT_EQ(g[0].term,
	          RawTerm::prod(RawTerm::prod(RawTerm::prod(w, x), RawTerm::twist(y)), RawTerm::twist(RawTerm::twist(z))));
}

TEST(ExpandMacros, RepeatedArgumentIsNotSimplified)
{
	std::vector<RawTerms> args{var(0), var(0), var(1)};
	RawTerms j = expand_macros("J", args);
	ASSERT_EQ(j.size(), 3u);
	auto x = RawTerm::leaf(0), y = RawTerm::leaf(1);
	EXPECT_EQ(j[0].term, RawTerm::prod(RawTerm::prod(x, x), RawTerm::twist(y)));
}

TEST(ExpandMacros, ArityErrors)
{
	std::vector<RawTerms> two{var(0), var(1)};
	std::vector<RawTerms> three{var(0), var(1), var(2)};
	EXPECT_THROW(expand_macros("J", two), ArityError);
	EXPECT_THROW(expand_macros("G", three), ArityError);
	EXPECT_THROW(expand_macros("K", three), std::invalid_argument);
}

TEST(RawArithmetic, ProductDistributesOverSums)
{
	RawTerms s = raw_add(var(0), var(1), -1); // x - y
	RawTerms p = raw_mul(s, raw_scale(var(2), 2));
	ASSERT_EQ(p.size(), 2u);
	EXPECT_EQ(p[0].coeff, 2);
	EXPECT_EQ(p[1].coeff, -2);
	EXPECT_TRUE(raw_scale(s, 0).empty());
	EXPECT_TRUE(raw_single(RawTerm::leaf(0), 0).empty());
}

TEST(VarTable, InternKeepsFirstAppearanceOrder)
{
	VarTable t;
	EXPECT_EQ(t.intern("y"), 0);
	EXPECT_EQ(t.intern("x"), 1);
	EXPECT_EQ(t.intern("y"), 0);
	EXPECT_EQ(t.find("z"), -1);
	EXPECT_EQ(t.size(), 2);
}
