#include "homcheck/catalog.hpp"
#include "homcheck/identity.hpp"

#include <gtest/gtest.h>

using namespace homcheck;

namespace {

// Multilinear component of `p` in the given variables: every listed variable
// occurs exactly once.
MPoly multilinear_part(const MPoly &p, int nvars)
{
	MPoly out;
	for (const auto &[m, c] : p)
	{
		auto d = multidegree(MPoly::monomial(m), nvars);
		if (std::all_of(d->begin(), d->end(), [](int k) { return k == 1; }))
			out.add(m, c);
	}
	return out;
}

} // namespace

TEST(Identity, CatalogSizes)
{
	EXPECT_EQ(catalog("hom_malcev").poly.size(), 4u);
	EXPECT_EQ(catalog("identity_1_2").poly.size(), 9u);
	EXPECT_TRUE(catalog("lemma_2_4_ii").poly.is_zero());
	EXPECT_TRUE(catalog("g_def").poly.is_zero());
	EXPECT_THROW(catalog("no_such_identity"), std::invalid_argument);
	for (const auto &name : catalog_names())
		EXPECT_TRUE(catalog(name).degrees().has_value()) << name;
}

TEST(Identity, JacobianSkewSymmetry)
{
	const VarTable v{"x", "y", "z"};
	MPoly j = make_identity("J(x,y,z)", v).poly;
	EXPECT_EQ(make_identity("J(y,z,x)", v).poly, j);
	EXPECT_EQ(make_identity("J(z,x,y)", v).poly, j);
	EXPECT_EQ(make_identity("J(y,x,z)", v).poly, j.scaled(-1));
	EXPECT_EQ(make_identity("J(x,z,y)", v).poly, j.scaled(-1));
	EXPECT_EQ(make_identity("J(z,y,x)", v).poly, j.scaled(-1));
}

TEST(Multidegree, NonHomogeneous)
{
	Identity id = make_identity("x*y + x");
	EXPECT_FALSE(id.degrees().has_value());
	EXPECT_THROW(polarize(id), NonHomogeneousError);
	EXPECT_THROW(compact(id), NonHomogeneousError);
}

TEST(Substitute, WEqualsYGivesSevenFromOneTwo)
{
	Identity one_two = catalog("identity_1_2");
	Identity seven = catalog("eq_2_7");
	Identity s = substitute(one_two, Substitution::rename(one_two.vars, {{"w", "y"}}, seven.vars));
	EXPECT_EQ(s.poly, seven.poly);
}

TEST(Substitute, IdentitySubstitutionIsNeutral)
{
	Identity hm = catalog("hom_malcev");
	EXPECT_EQ(substitute(hm, Substitution::identity_on(hm.vars)).poly, hm.poly);
}

TEST(Substitute, UnmappedVariable)
{
	Identity hm = catalog("hom_malcev");
	Substitution s = Substitution::identity_on(hm.vars);
	s.images[1].reset();
	EXPECT_THROW(substitute(hm, s), std::invalid_argument);
	EXPECT_THROW(Substitution::rename(hm.vars, {{"x", "q"}}, hm.vars), std::invalid_argument);
}

TEST(Substitute, MonomialImageAndTwistShift)
{
	// x -> a(y*z) in a(x)*w
	const VarTable src{"x", "w"}, dst{"y", "z", "w"};
	Identity id = make_identity("a(x)*w", src);
	Substitution s{{Monomial::prod_unchecked(Monomial::leaf(0, 1), Monomial::leaf(1, 1)), Monomial::leaf(2)}, dst};
	EXPECT_EQ(substitute(id, s).poly, make_identity("a2(y*z)*w", dst).poly);
}

TEST(Compact, DropsUnusedVariables)
{
	Identity id = make_identity("vars w,x,y,z; x*z");
	Identity c = compact(id);
	EXPECT_EQ(c.vars.names(), (std::vector<std::string>{"x", "z"}));
	EXPECT_EQ(c.poly, make_identity("x*z", c.vars).poly);
}

TEST(Polarize, HomMalcevAgainstExpansionOracle)
{
	// Oracle: substitute x = x1 + x2 in the raw text and keep the part
	// multilinear in x1, x2.
	Identity p = polarize(catalog("hom_malcev"));
	ASSERT_EQ(p.vars.names(), (std::vector<std::string>{"y", "z", "x#1", "x#2"}));
	const VarTable v{"y", "z", "x1", "x2"};
	MPoly expanded = make_identity("J(a(x1+x2),a(y),(x1+x2)*z) - J(x1+x2,y,z)*a2(x1+x2)", v).poly;
	EXPECT_EQ(p.poly, multilinear_part(expanded, 4));
	MPoly written = make_identity("J(a(x1),a(y),x2*z) + J(a(x2),a(y),x1*z) - J(x1,y,z)*a2(x2) - J(x2,y,z)*a2(x1)", v)
	                    .poly;
	EXPECT_EQ(p.poly, written);
}

TEST(Polarize, MalcevAgainstExpansionOracle)
{
	Identity p = polarize(catalog("malcev"));
	const VarTable v{"y", "z", "x1", "x2"};
	std::string text = "(X*y)*(X*z) + (y*(X*z))*X + ((X*z)*X)*y - ((X*y)*z + (y*z)*X + (z*X)*y)*X";
	for (std::size_t at; (at = text.find('X')) != std::string::npos;)
		text.replace(at, 1, "(x1+x2)");
	EXPECT_EQ(p.poly, multilinear_part(make_identity(text, v).poly, 4));
}

TEST(Polarize, MultilinearIsUnchanged)
{
	Identity one_two = catalog("identity_1_2");
	Identity p = polarize(one_two);
	EXPECT_EQ(p.poly, one_two.poly);
	EXPECT_EQ(p.vars, one_two.vars);
}

TEST(Polarize, ReidentificationGivesFactorial)
{
	for (const char *name : {"hom_malcev", "malcev", "eq_2_7", "eq_2_8"})
	{
		Identity id = compact(catalog(name));
		Identity p = polarize(id);
		auto deg = *id.degrees();
		Substitution back{std::vector<std::optional<Monomial>>(p.vars.size()), id.vars};
		for (int i = 0; i < p.vars.size(); ++i)
		{
			std::string n = p.vars.name(i);
			back.images[i] = Monomial::leaf(id.vars.find(n.substr(0, n.find('#'))));
		}
		Rational f = 1;
		for (int d : deg)
			for (int k = 2; k <= d; ++k)
				f *= k;
		EXPECT_EQ(substitute(p, back).poly, id.poly.scaled(f)) << name;
	}
}

TEST(Polarize, DegreeThree)
{
	Identity id = make_identity("(x*a(x))*(y*x)");
	Identity p = polarize(id);
	EXPECT_EQ(p.vars.size(), 4);
	EXPECT_TRUE(p.is_multilinear());
	EXPECT_EQ(p.poly.size(), 6u);
}

TEST(SplitMultihomogeneous, Components)
{
	Identity id = make_identity("x*y + a(x)*y + (x*y)*z");
	auto parts = split_multihomogeneous(id.poly, id.vars.size());
	ASSERT_EQ(parts.size(), 2u);
	EXPECT_EQ(parts[0].size() + parts[1].size(), 3u);
}

TEST(Untwisted, HomMalcevReducesToMalcev)
{
	EXPECT_EQ(untwisted(catalog("hom_malcev")).poly, catalog("malcev").poly);
}
