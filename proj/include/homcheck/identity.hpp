#pragma once

// Identities (polynomials asserted to vanish), substitution instances and
// full polarization.

#include "normalform.hpp"
#include "parser.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcheck {

struct Identity
{
	MPoly poly;
	VarTable vars;

	std::optional<std::vector<int>> degrees() const { return multidegree(poly, vars.size()); }

	bool is_multilinear() const
	{
		auto d = degrees();
		return d && std::all_of(d->begin(), d->end(), [](int k) { return k <= 1; });
	}
};

inline Identity make_identity(std::string_view text, VarTable vars = {})
{
	RawExpr e = parse_expr(text, std::move(vars));
	return Identity{normalize(e), std::move(e.vars)};
}

class NonHomogeneousError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

// Maps each variable of an identity (by index) to a monomial over `target`.
struct Substitution
{
	std::vector<std::optional<Monomial>> images;
	VarTable target;

	static Substitution identity_on(const VarTable &vars)
	{
		Substitution s{std::vector<std::optional<Monomial>>(vars.size()), vars};
		for (int i = 0; i < vars.size(); ++i)
			s.images[i] = Monomial::leaf(i);
		return s;
	}

	// Variable renaming by name, e.g. {{"w","y"}} on vars w,x,y,z.
	static Substitution rename(const VarTable &from, const std::vector<std::pair<std::string, std::string>> &pairs,
	                           VarTable target)
	{
		Substitution s{std::vector<std::optional<Monomial>>(from.size()), std::move(target)};
		for (int i = 0; i < from.size(); ++i)
		{
			std::string image = from.name(i);
			for (const auto &[a, b] : pairs)
				if (a == image)
				{
					image = b;
					break;
				}
			int j = s.target.find(image);
			if (j < 0)
				throw std::invalid_argument("substitution target has no variable '" + image + "'");
			s.images[i] = Monomial::leaf(j);
		}
		return s;
	}
};

// Replaces every leaf α^k(v) by α^k(image of v) and renormalizes.
inline MPoly substitute(const MPoly &p, const std::vector<std::optional<Monomial>> &images)
{
	return rebuild(p, [&](const Monomial &leaf) -> std::optional<SignedMonomial> {
		int v = leaf.var();
		if (v >= static_cast<int>(images.size()) || !images[v])
			throw std::invalid_argument("substitution leaves variable #" + std::to_string(v) + " unmapped");
		return SignedMonomial{1, images[v]->twisted(leaf.power())};
	});
}

inline Identity substitute(const Identity &id, const Substitution &s)
{
	for (int v = 0; v < id.vars.size(); ++v)
		if (v >= static_cast<int>(s.images.size()) || !s.images[v])
		{
			// Only variables that occur need an image.
			auto d = multidegree(id.poly, id.vars.size());
			if (!d || (*d)[v] > 0)
				throw std::invalid_argument("substitution leaves variable '" + id.vars.name(v) + "' unmapped");
		}
	return Identity{substitute(id.poly, s.images), s.target};
}

// Multihomogeneous components, keyed by multidegree in ascending order.
inline std::vector<MPoly> split_multihomogeneous(const MPoly &p, int nvars)
{
	std::map<std::vector<int>, MPoly> parts;
	for (const auto &[m, c] : p)
		parts[*multidegree(MPoly::monomial(m), nvars)].add(m, c);
	std::vector<MPoly> out;
	for (auto &[deg, part] : parts)
		out.push_back(std::move(part));
	return out;
}

// Drops variables that do not occur, keeping the order of the rest.
inline Identity compact(const Identity &id)
{
	auto d = multidegree(id.poly, id.vars.size());
	if (!d)
		throw NonHomogeneousError("identity is not multihomogeneous");
	std::vector<std::optional<Monomial>> images(id.vars.size());
	VarTable vars;
	for (int v = 0; v < id.vars.size(); ++v)
		if ((*d)[v] > 0)
			images[v] = Monomial::leaf(vars.intern(id.vars.name(v)));
	return Identity{substitute(id.poly, images), vars};
}

// Full polarization. Each variable u of degree d > 1 becomes d fresh variables
// u#1..u#d, placed after the remaining variables; the result is the component
// multilinear in all of them. Variables of degree 0 are dropped.
inline Identity polarize(const Identity &id)
{
	auto deg = id.degrees();
	if (!deg)
		throw NonHomogeneousError("polarize: identity is not multihomogeneous");
	const int n = id.vars.size();
	VarTable out_vars;
	std::vector<int> plain_index(n, -1);
	for (int v = 0; v < n; ++v)
		if ((*deg)[v] == 1)
			plain_index[v] = out_vars.intern(id.vars.name(v));
	std::vector<int> repeated;
	std::vector<std::vector<int>> fresh(n);
	for (int v = 0; v < n; ++v)
		if ((*deg)[v] > 1)
		{
			repeated.push_back(v);
			for (int i = 1; i <= (*deg)[v]; ++i)
				fresh[v].push_back(out_vars.intern(id.vars.name(v) + "#" + std::to_string(i)));
		}

	MPoly out;
	// perms[v] is the current assignment of fresh variables to occurrences of v.
	std::vector<std::vector<int>> perms(n);
	for (int v : repeated)
		perms[v] = fresh[v];
	for (;;)
	{
		for (const auto &[m, c] : id.poly)
		{
			std::vector<int> seen(n, 0);
			auto r = rebuild(m, [&](const Monomial &leaf) -> std::optional<SignedMonomial> {
				int v = leaf.var();
				int target = (*deg)[v] == 1 ? plain_index[v] : perms[v][seen[v]++];
				return SignedMonomial{1, Monomial::leaf(target, leaf.power())};
			});
			if (r)
				out.add(r->mono, c * r->sign);
		}
		// Odometer over the product of permutation groups.
		std::size_t i = 0;
		for (; i < repeated.size(); ++i)
		{
			auto &p = perms[repeated[i]];
			if (std::next_permutation(p.begin(), p.end()))
				break;
		}
		if (i == repeated.size())
			break;
	}
	return Identity{std::move(out), std::move(out_vars)};
}

} // namespace homcheck
