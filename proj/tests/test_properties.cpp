#include "homcheck/consequence.hpp"
#include "homcheck/random.hpp"

#include <gtest/gtest.h>

using namespace homcheck;

namespace {

constexpr int cases = 1000;

RawTerm to_raw(const Monomial &m)
{
	if (m.is_leaf())
		return RawTerm::twist(RawTerm::leaf(m.var()), m.power());
	return RawTerm::prod(to_raw(m.left()), to_raw(m.right()));
}

RawTerms to_raw(const MPoly &p)
{
	RawTerms out;
	for (const auto &[m, c] : p)
		out.push_back({c, to_raw(m)});
	return out;
}

// A different word for the same element: products swapped with a sign flip,
// twists pushed into products or pulled out of them.
RawTerm scramble(RandomSource &rs, const RawTerm &t, Rational &sign)
{
	switch (t.kind())
	{
	case RawTerm::Kind::Leaf:
		return t;
	case RawTerm::Kind::Twist:
	{
		RawTerm a = t.arg();
		if (a.kind() == RawTerm::Kind::Prod && rs.chance(0.5))
			return scramble(rs, RawTerm::prod(RawTerm::twist(a.left()), RawTerm::twist(a.right())), sign);
		return RawTerm::twist(scramble(rs, a, sign));
	}
	case RawTerm::Kind::Prod:
	{
		RawTerm l = scramble(rs, t.left(), sign), r = scramble(rs, t.right(), sign);
		if (l.kind() == RawTerm::Kind::Twist && r.kind() == RawTerm::Kind::Twist && rs.chance(0.3))
			return RawTerm::twist(RawTerm::prod(l.arg(), r.arg()));
		if (rs.chance(0.5))
		{
			sign = -sign;
			return RawTerm::prod(r, l);
		}
		return RawTerm::prod(l, r);
	}
	}
	return t;
}

RawTerm replace_leaves(const RawTerm &t, const std::vector<RawTerm> &images)
{
	switch (t.kind())
	{
	case RawTerm::Kind::Leaf:
		return images[t.var()];
	case RawTerm::Kind::Twist:
		return RawTerm::twist(replace_leaves(t.arg(), images));
	case RawTerm::Kind::Prod:
		return RawTerm::prod(replace_leaves(t.left(), images), replace_leaves(t.right(), images));
	}
	return t;
}

// A random multihomogeneous identity with at least one repeated variable.
Identity random_homogeneous(RandomSource &rs)
{
	for (;;)
	{
		RawExpr e = random_raw_expr(rs, 3, 6, 4);
		MPoly p = normalize(e);
		if (p.is_zero())
			continue;
		auto parts = split_multihomogeneous(p, e.vars.size());
		Identity id = compact(Identity{parts[rs.uniform(0, static_cast<int>(parts.size()) - 1)], e.vars});
		if (!id.is_multilinear())
			return id;
	}
}

} // namespace

TEST(Property, NormalizationIsIdempotent)
{
	RandomSource rs(1);
	for (int i = 0; i < cases; ++i)
	{
		RawExpr e = random_raw_expr(rs);
		MPoly p = normalize(e);
		ASSERT_EQ(normalize(to_raw(p)), p) << format_expr(e);
	}
}

TEST(Property, FormatParseRoundTrip)
{
	RandomSource rs(2);
	for (int i = 0; i < cases; ++i)
	{
		RawExpr e = random_raw_expr(rs);
		MPoly p = normalize(e);
		std::string text = format_expr(p, e.vars);
		ASSERT_EQ(normalize(parse_expr(with_vars_header(text, e.vars))), p) << text;
		ASSERT_EQ(format_expr(normalize(parse_expr(text, e.vars)), e.vars), text);
		RawExpr raw_again = parse_expr(format_expr(e), e.vars);
		ASSERT_EQ(normalize(raw_again), p) << format_expr(e);
	}
}

TEST(Property, NormalFormIsConfluent)
{
	RandomSource rs(3);
	for (int i = 0; i < cases; ++i)
	{
		RawExpr e = random_raw_expr(rs);
		RawTerms other;
		for (const auto &[c, t] : e.terms)
		{
			Rational sign = 1;
			RawTerm s = scramble(rs, t, sign);
			other.push_back({c * sign, s});
		}
		std::shuffle(other.begin(), other.end(), rs.engine());
		ASSERT_EQ(normalize(other), normalize(e)) << format_expr(e);
	}
}

TEST(Property, SymbolicAndConcreteEvaluationAgree)
{
	RandomSource rs(4);
	for (int i = 0; i < cases; ++i)
	{
		RawExpr e = random_raw_expr(rs);
		AlgebraSpec spec = random_multiplicative_algebra(rs);
		ASSERT_FALSE(spec.multiplicativity_failure().has_value());
		std::vector<Element> values;
		for (int v = 0; v < e.vars.size(); ++v)
			values.push_back(random_element(rs, spec.dim()));
		ASSERT_EQ(evaluate(spec, e.terms, values), evaluate(spec, normalize(e), values)) << format_expr(e);
	}
}

TEST(Property, PolarizeReidentifiesWithFactorial)
{
	RandomSource rs(5);
	for (int i = 0; i < cases; ++i)
	{
		Identity id = random_homogeneous(rs);
		Identity p = polarize(id);
		ASSERT_TRUE(p.is_multilinear());
		Substitution back{std::vector<std::optional<Monomial>>(p.vars.size()), id.vars};
		for (int v = 0; v < p.vars.size(); ++v)
		{
			const std::string &n = p.vars.name(v);
			back.images[v] = Monomial::leaf(id.vars.find(n.substr(0, n.find('#'))));
		}
		Rational f = 1;
		const std::vector<int> deg = *id.degrees();
		for (int d : deg)
			for (int k = 2; k <= d; ++k)
				f *= k;
		ASSERT_EQ(substitute(p, back).poly, id.poly.scaled(f)) << format_expr(id.poly, id.vars);
	}
}

TEST(Property, SubstitutionCommutesWithNormalization)
{
	RandomSource rs(6);
	for (int i = 0; i < cases; ++i)
	{
		RawExpr e = random_raw_expr(rs, 3, 4, 3);
		const VarTable target{"p", "q", "r", "s"};
		std::vector<RawTerm> raw_images;
		std::vector<std::optional<Monomial>> images;
		for (int v = 0; v < e.vars.size(); ++v)
		{
			RawTerm t = random_raw_term(rs, target.size(), 2);
			auto n = normalize(raw_single(t));
			if (n.is_zero() || n.begin()->second != 1)
				t = RawTerm::leaf(rs.uniform(0, target.size() - 1)), n = normalize(raw_single(t));
			raw_images.push_back(t);
			images.push_back(n.begin()->first);
		}
		RawTerms replaced;
		for (const auto &[c, t] : e.terms)
			replaced.push_back({c, replace_leaves(t, raw_images)});
		ASSERT_EQ(normalize(replaced), substitute(normalize(e), images)) << format_expr(e);
	}
}

TEST(Property, CertificatesIndependentOfJobs)
{
	RandomSource rs(7);
	const VarTable vars{"x", "y", "z"};
	auto axioms = prepare_axioms({"hom_jacobi"});
	SearchBounds one, many;
	one.max_alpha_power = many.max_alpha_power = 1;
	many.jobs = 3;
	auto inst = generate_instances(axioms, 0, vars, one);
	for (int i = 0; i < cases; ++i)
	{
		// A random combination of instances, sometimes spoiled by a stray word.
		MPoly target;
		for (int k = 0; k < 3; ++k)
			target.add(inst[rs.uniform(0, static_cast<int>(inst.size()) - 1)].poly, rs.nonzero_rational());
		if (rs.chance(0.2))
			target.add(normalize(parse_expr("(x*y)*a(z)", vars)), 1);
		if (target.is_zero())
			continue;
		Identity t{target, vars};
		Derivation a = derive(t, axioms, one), b = derive(t, axioms, many);
		ASSERT_EQ(a.result.index(), b.result.index());
		if (auto *c = std::get_if<Certificate>(&a.result))
		{
			ASSERT_EQ(certificate_to_json(*c, a.axioms), certificate_to_json(std::get<Certificate>(b.result), b.axioms));
			ASSERT_EQ(replay(*c, a.axioms), a.target.poly);
		}
		else
			ASSERT_EQ(std::get<NotInSpan>(a.result).residual, std::get<NotInSpan>(b.result).residual);
	}
}
