#pragma once

// Seeded generators of random raw expressions and random multiplicative
// Hom-algebras, for property checks.

#include "algebra.hpp"

#include <random>
#include <string>
#include <vector>

namespace homcheck {

class RandomSource
{
  public:
	explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
	bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

	Rational small_rational(int max_num = 5, int max_den = 4)
	{
		Rational r(uniform(-max_num, max_num), uniform(1, max_den));
		r.canonicalize();
		return r;
	}

	Rational nonzero_rational(int max_num = 5, int max_den = 4)
	{
		Rational r;
		do
			r = small_rational(max_num, max_den);
		while (r == 0);
		return r;
	}

	std::mt19937_64 &engine() { return rng_; }

  private:
	std::mt19937_64 rng_;
};

inline RawTerm random_raw_term(RandomSource &rs, int nvars, int depth)
{
	int roll = depth <= 0 ? 0 : rs.uniform(0, 5);
	if (roll <= 1)
		return RawTerm::leaf(rs.uniform(0, nvars - 1));
	if (roll == 2)
		return RawTerm::twist(random_raw_term(rs, nvars, depth - 1));
	return RawTerm::prod(random_raw_term(rs, nvars, depth - 1), random_raw_term(rs, nvars, depth - 1));
}

inline RawExpr random_raw_expr(RandomSource &rs, int max_vars = 4, int max_terms = 5, int max_depth = 4)
{
	static const char *names[] = {"w", "x", "y", "z", "u", "v"};
	int nvars = rs.uniform(1, std::min(max_vars, 6));
	RawExpr e;
	for (int i = 0; i < nvars; ++i)
		e.vars.intern(names[i]);
	int nterms = rs.uniform(1, max_terms);
	for (int t = 0; t < nterms; ++t)
		e.terms.push_back({rs.nonzero_rational(), random_raw_term(rs, nvars, rs.uniform(0, max_depth))});
	return e;
}

// Inverse of a square rational matrix; throws if singular.
inline std::vector<Element> invert(std::vector<Element> m)
{
	const int n = static_cast<int>(m.size());
	std::vector<Element> inv(n, Element(n));
	for (int i = 0; i < n; ++i)
		inv[i][i] = 1;
	for (int col = 0; col < n; ++col)
	{
		int piv = col;
		while (piv < n && m[piv][col] == 0)
			++piv;
		if (piv == n)
			throw std::invalid_argument("singular matrix");
		std::swap(m[piv], m[col]);
		std::swap(inv[piv], inv[col]);
		Rational f = 1 / m[col][col];
		for (int c = 0; c < n; ++c)
		{
			m[col][c] *= f;
			inv[col][c] *= f;
		}
		for (int r = 0; r < n; ++r)
		{
			if (r == col || m[r][col] == 0)
				continue;
			Rational g = m[r][col];
			for (int c = 0; c < n; ++c)
			{
				m[r][c] -= g * m[col][c];
				inv[r][c] -= g * inv[col][c];
			}
		}
	}
	return inv;
}

inline Element mat_vec(const std::vector<Element> &m, const Element &v)
{
	Element out(m.size());
	for (std::size_t r = 0; r < m.size(); ++r)
		for (std::size_t c = 0; c < v.size(); ++c)
			out[r] += m[r][c] * v[c];
	return out;
}

// The isomorphic copy of `spec` in the basis given by the columns of p:
// μ'(u, v) = p⁻¹ μ(p u, p v), α' = p⁻¹ α p.
inline AlgebraSpec change_basis(const AlgebraSpec &spec, const std::vector<Element> &p)
{
	const int n = spec.dim();
	auto pinv = invert(p);
	std::vector<Element> cols(n);
	for (int i = 0; i < n; ++i)
		cols[i] = mat_vec(p, spec.basis_element(i));
	AlgebraSpec out(n);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			out.set_product(i, j, mat_vec(pinv, spec.multiply(cols[i], cols[j])));
	std::vector<Element> t(n, Element(n));
	for (int c = 0; c < n; ++c)
	{
		Element img = mat_vec(pinv, spec.apply_twist(cols[c]));
		for (int r = 0; r < n; ++r)
			t[r][c] = img[r];
	}
	out.set_twist(std::move(t));
	out.require_multiplicative = spec.require_multiplicative;
	return out;
}

// A random anticommutative algebra with a multiplicative twist: a diagonal
// twist with eigenvalues λ_i, products e_i·e_j supported on basis vectors e_k
// with λ_k = λ_i λ_j, then moved to a random basis.
inline AlgebraSpec random_multiplicative_algebra(RandomSource &rs, int min_dim = 2, int max_dim = 4)
{
	static const Rational eigen[] = {Rational(1), Rational(1), Rational(-1), Rational(2), Rational(1, 2),
	                                 Rational(0)};
	const int n = rs.uniform(min_dim, max_dim);
	std::vector<Rational> lambda(n);
	for (auto &l : lambda)
		l = eigen[rs.uniform(0, 5)];
	AlgebraSpec a(n);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
		{
			Element out(n);
			for (int k = 0; k < n; ++k)
				if (lambda[k] == lambda[i] * lambda[j] && rs.chance(0.7))
					out[k] = rs.small_rational(3, 2);
			a.set_product(i, j, std::move(out));
		}
	std::vector<Element> t(n, Element(n));
	for (int i = 0; i < n; ++i)
		t[i][i] = lambda[i];
	a.set_twist(std::move(t));

	// Unit upper triangular change of basis, columns permuted.
	std::vector<Element> p(n, Element(n));
	for (int r = 0; r < n; ++r)
	{
		p[r][r] = 1;
		for (int c = r + 1; c < n; ++c)
			p[r][c] = rs.uniform(-2, 2);
	}
	std::vector<int> perm(n);
	for (int i = 0; i < n; ++i)
		perm[i] = i;
	std::shuffle(perm.begin(), perm.end(), rs.engine());
	std::vector<Element> q(n, Element(n));
	for (int r = 0; r < n; ++r)
		for (int c = 0; c < n; ++c)
			q[r][c] = p[r][perm[c]];
	AlgebraSpec out = change_basis(a, q);
	out.require_multiplicative = true;
	return out;
}

inline Element random_element(RandomSource &rs, int dim)
{
	Element e(dim);
	for (auto &x : e)
		x = rs.small_rational();
	return e;
}

} // namespace homcheck
