#include "homcheck/catalog.hpp"
#include "homcheck/normalform.hpp"

#include <gtest/gtest.h>

using namespace homcheck;

namespace {

MPoly nf(const std::string &text, const VarTable &vars = {}) { return normalize(parse_expr(text, vars)); }

const VarTable xyz{"x", "y", "z"};

} // namespace

TEST(Normalize, TwistDistributesOverProducts)
{
	MPoly p = nf("a(x*y)");
	ASSERT_EQ(p.size(), 1u);
	auto expected = Monomial::prod_unchecked(Monomial::leaf(0, 1), Monomial::leaf(1, 1));
	EXPECT_EQ(p.coeff(expected), 1);
	EXPECT_TRUE(nf("a(x*y) - a(x)*a(y)").is_zero());
	EXPECT_TRUE(nf("a2(x*(y*z)) - a2(x)*(a2(y)*a2(z))").is_zero());
}

TEST(Normalize, Anticommutativity)
{
	MPoly p = nf("y*x", xyz);
	ASSERT_EQ(p.size(), 1u);
	EXPECT_EQ(p.coeff(Monomial::prod_unchecked(Monomial::leaf(0), Monomial::leaf(1))), -1);
	EXPECT_TRUE(nf("x*x").is_zero());
	EXPECT_TRUE(nf("(x*y)*(x*y)").is_zero());
	EXPECT_TRUE(nf("a(x)*a(x)").is_zero());
	EXPECT_FALSE(nf("x*a(x)").is_zero());
}

TEST(Normalize, JacobianWithRepeatedArgumentVanishes)
{
	EXPECT_TRUE(nf("J(x,x,y)").is_zero());
	EXPECT_TRUE(nf("J(x,y,x)").is_zero());
	EXPECT_TRUE(nf("J(y*z,a(x),y*z)").is_zero());
}

TEST(CompareMonomials, StatedOrder)
{
	auto x = Monomial::leaf(0), y = Monomial::leaf(1), z = Monomial::leaf(2);
	EXPECT_TRUE(compare(x, Monomial::leaf(0, 1)) < 0);
	EXPECT_TRUE(compare(Monomial::leaf(1, 2), Monomial::prod_unchecked(x, y)) < 0);
	// The recursion applied to the words as written: left factors x·y < x·z.
	auto xy_z_raw = Monomial::prod_unchecked(Monomial::prod_unchecked(x, y), z);
	auto xz_y_raw = Monomial::prod_unchecked(Monomial::prod_unchecked(x, z), y);
	EXPECT_TRUE(compare(xy_z_raw, xz_y_raw) < 0);
	// Canonically they are z·(x·y) and y·(x·z), and then z > y decides.
	auto xy_z = canonical_product(Monomial::prod_unchecked(x, y), z)->mono;
	auto xz_y = canonical_product(Monomial::prod_unchecked(x, z), y)->mono;
	EXPECT_TRUE(compare(xy_z, xz_y) > 0);
	EXPECT_TRUE(compare(xy_z, xy_z) == 0);
	EXPECT_TRUE(compare(Monomial::prod_unchecked(x, y), Monomial::prod_unchecked(x, z)) < 0);
}

TEST(PolyCombine, Examples)
{
	MPoly p = nf("x*y + a(z)*x", xyz);
	EXPECT_TRUE(poly_combine({{1, p}, {-1, p}}).is_zero());
	MPoly two = poly_combine({{2, nf("x*y", xyz)}});
	ASSERT_EQ(two.size(), 1u);
	EXPECT_EQ(two.begin()->second, 2);
	EXPECT_TRUE(poly_combine({{1, nf("J(x,y,z)", xyz)}, {1, nf("J(y,x,z)", xyz)}}).is_zero());
}

TEST(Multidegree, Examples)
{
	EXPECT_EQ(multidegree(nf("J(x,y,z)", xyz), 3), (std::vector<int>{1, 1, 1}));
	Identity hm = catalog("hom_malcev");
	EXPECT_EQ(multidegree(hm.poly, 3), (std::vector<int>{2, 1, 1}));
	EXPECT_FALSE(multidegree(nf("x*y + a(x)*z", xyz), 3).has_value());
	EXPECT_EQ(multidegree(nf("a2(x)*y + x*a(y)", xyz), 3), (std::vector<int>{1, 1, 0}));
}

TEST(Format, Examples)
{
	VarTable vars{"x", "y", "z"};
	EXPECT_EQ(format_expr(nf("x*y", vars), vars), "x*y");
	// −(x·y)·α(z) is stored as −α(z)·(x·y): fewer leaves first.
	EXPECT_EQ(format_expr(nf("-(x*y)*a(z)", vars), vars), "a(z)*(x*y)");
	EXPECT_EQ(format_expr(nf("y*x", vars), vars), "-x*y");
	EXPECT_EQ(format_expr(MPoly{}, vars), "0");
	EXPECT_EQ(format_expr(nf("-3/2*a(a2(x))*y", vars), vars), "-3/2*a2(a(x))*y");
}

TEST(Format, JacobianRoundTrip)
{
	MPoly j = nf("J(x,y,z)", xyz);
	std::string text = format_expr(j, xyz);
	EXPECT_EQ(j.size(), 3u);
	EXPECT_EQ(nf(text, xyz), j);
	EXPECT_EQ(nf(with_vars_header(text, xyz)), j);
}

TEST(StripTwist, HomMalcevBecomesMalcev)
{
	EXPECT_EQ(strip_twist(catalog("hom_malcev").poly), catalog("malcev").poly);
	// The Hom-Jacobian becomes the classical Jacobian.
	EXPECT_EQ(strip_twist(nf("J(x,y,z)", xyz)), nf("(x*y)*z + (y*z)*x + (z*x)*y", xyz));
}
