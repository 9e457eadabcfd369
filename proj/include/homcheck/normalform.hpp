#pragma once

// Canonical normal form of elements of the free anticommutative
// multiplicative Hom-algebra over the rationals.

#include "monomial.hpp"
#include "term.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homcheck {

class MPoly
{
  public:
	using Map = std::map<Monomial, Rational>;
	using const_iterator = Map::const_iterator;

	MPoly() = default;

	static MPoly monomial(Monomial m, Rational c = 1)
	{
		MPoly p;
		p.add(std::move(m), c);
		return p;
	}

	void add(const Monomial &m, const Rational &c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(m, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	void add(const MPoly &other, const Rational &c = 1)
	{
		if (c == 0)
			return;
		for (const auto &[m, v] : other.terms_)
			add(m, v * c);
	}

	MPoly scaled(const Rational &c) const
	{
		MPoly out;
		if (c == 0)
			return out;
		for (const auto &[m, v] : terms_)
			out.terms_.emplace_hint(out.terms_.end(), m, v * c);
		return out;
	}

	Rational coeff(const Monomial &m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	const_iterator begin() const { return terms_.begin(); }
	const_iterator end() const { return terms_.end(); }
	const Map &terms() const { return terms_; }

	friend bool operator==(const MPoly &a, const MPoly &b) { return a.terms_ == b.terms_; }

	friend MPoly operator+(MPoly a, const MPoly &b)
	{
		a.add(b);
		return a;
	}
	friend MPoly operator-(MPoly a, const MPoly &b)
	{
		a.add(b, -1);
		return a;
	}

  private:
	Map terms_;
};

namespace detail {

// Normal form of a single raw word with `pending` twists applied from above.
inline std::optional<SignedMonomial> normalize_term(const RawTerm &t, int pending)
{
	switch (t.kind())
	{
	case RawTerm::Kind::Leaf:
		return SignedMonomial{1, Monomial::leaf(t.var(), pending)};
	case RawTerm::Kind::Twist:
		return normalize_term(t.arg(), pending + 1);
	case RawTerm::Kind::Prod:
	{
		auto l = normalize_term(t.left(), pending);
		if (!l)
			return std::nullopt;
		auto r = normalize_term(t.right(), pending);
		if (!r)
			return std::nullopt;
		auto p = canonical_product(l->mono, r->mono);
		if (!p)
			return std::nullopt;
		p->sign *= l->sign * r->sign;
		return p;
	}
	}
	return std::nullopt;
}

} // namespace detail

inline MPoly normalize(const RawTerms &terms)
{
	MPoly out;
	for (const auto &e : terms)
		if (auto n = detail::normalize_term(e.term, 0))
			out.add(n->mono, n->sign * e.coeff);
	return out;
}

inline MPoly normalize(const RawExpr &expr) { return normalize(expr.terms); }

// Rebuilds a monomial with each leaf replaced by `image(leaf)` and restores
// canonical order. `image` returns nullopt for a vanishing leaf image.
template <class LeafImage>
std::optional<SignedMonomial> rebuild(const Monomial &m, const LeafImage &image)
{
	if (m.is_leaf())
		return image(m);
	auto l = rebuild(m.left(), image);
	if (!l)
		return std::nullopt;
	auto r = rebuild(m.right(), image);
	if (!r)
		return std::nullopt;
	auto p = canonical_product(l->mono, r->mono);
	if (!p)
		return std::nullopt;
	p->sign *= l->sign * r->sign;
	return p;
}

template <class LeafImage>
MPoly rebuild(const MPoly &p, const LeafImage &image)
{
	MPoly out;
	for (const auto &[m, c] : p)
		if (auto r = rebuild(m, image))
			out.add(r->mono, c * r->sign);
	return out;
}

struct Scaled
{
	Rational coeff;
	MPoly poly;
};

inline MPoly poly_combine(const std::vector<Scaled> &parts)
{
	MPoly out;
	for (const auto &[c, p] : parts)
		out.add(p, c);
	return out;
}

// Leaf counts per variable, or nullopt when monomials disagree. α-powers are
// ignored. The zero polynomial has all degrees 0.
inline std::optional<std::vector<int>> multidegree(const MPoly &p, int nvars)
{
	std::optional<std::vector<int>> result;
	for (const auto &[m, c] : p)
	{
		std::vector<int> deg(nvars, 0);
		auto count = [&](auto &&self, const Monomial &n) -> void {
			if (n.is_leaf())
			{
				if (n.var() >= nvars)
					deg.resize(n.var() + 1, 0);
				++deg[n.var()];
				return;
			}
			self(self, n.left());
			self(self, n.right());
		};
		count(count, m);
		if (!result)
			result = std::move(deg);
		else if (*result != deg)
			return std::nullopt;
	}
	if (!result)
		result = std::vector<int>(nvars, 0);
	return result;
}

inline int max_alpha_power(const Monomial &m)
{
	if (m.is_leaf())
		return m.power();
	return std::max(max_alpha_power(m.left()), max_alpha_power(m.right()));
}

// Sets every α-power to zero (the α = Id specialization) and renormalizes.
inline MPoly strip_twist(const MPoly &p)
{
	return rebuild(p, [](const Monomial &leaf) {
		return std::optional<SignedMonomial>(SignedMonomial{1, Monomial::leaf(leaf.var())});
	});
}

namespace detail {

inline void format_leaf(std::string &out, const VarTable &vars, int var, int power)
{
	int opened = 0;
	for (int k = power; k >= 2; k -= 2, ++opened)
		out += "a2(";
	if (power % 2 == 1)
	{
		out += "a(";
		++opened;
	}
	out += var < vars.size() ? vars.name(var) : "v" + std::to_string(var);
	out.append(opened, ')');
}

inline void format_monomial(std::string &out, const VarTable &vars, const Monomial &m, bool nested)
{
	if (m.is_leaf())
	{
		format_leaf(out, vars, m.var(), m.power());
		return;
	}
	if (nested)
		out += '(';
	format_monomial(out, vars, m.left(), true);
	out += '*';
	format_monomial(out, vars, m.right(), true);
	if (nested)
		out += ')';
}

inline void format_signed(std::string &out, bool first, Rational c, const std::string &body)
{
	bool neg = c < 0;
	if (neg)
		c = -c;
	if (first)
		out += neg ? "-" : "";
	else
		out += neg ? " - " : " + ";
	if (c != 1)
		out += c.get_str(10) + "*";
	out += body;
}

} // namespace detail

inline std::string format_monomial(const Monomial &m, const VarTable &vars)
{
	std::string s;
	detail::format_monomial(s, vars, m, false);
	return s;
}

// DSL text of a normal form; "0" for the zero polynomial.
inline std::string format_expr(const MPoly &p, const VarTable &vars)
{
	if (p.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[m, c] : p)
	{
		detail::format_signed(out, first, c, format_monomial(m, vars));
		first = false;
	}
	return out;
}

namespace detail {

inline void format_raw(std::string &out, const VarTable &vars, const RawTerm &t, bool nested)
{
	switch (t.kind())
	{
	case RawTerm::Kind::Leaf:
		out += vars.name(t.var());
		return;
	case RawTerm::Kind::Twist:
		out += "a(";
		format_raw(out, vars, t.arg(), false);
		out += ')';
		return;
	case RawTerm::Kind::Prod:
		if (nested)
			out += '(';
		format_raw(out, vars, t.left(), true);
		out += '*';
		format_raw(out, vars, t.right(), true);
		if (nested)
			out += ')';
		return;
	}
}

} // namespace detail

// DSL text of a raw expression, preserving its words verbatim.
inline std::string format_expr(const RawExpr &e)
{
	if (e.terms.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto &[c, t] : e.terms)
	{
		std::string body;
		detail::format_raw(body, e.vars, t, false);
		detail::format_signed(out, first, c, body);
		first = false;
	}
	return out;
}

// Prefixes a `vars` header so the text re-parses with the same variable order.
inline std::string with_vars_header(const std::string &body, const VarTable &vars)
{
	if (vars.size() == 0)
		return body;
	std::string out = "vars ";
	for (int i = 0; i < vars.size(); ++i)
		out += (i ? "," : "") + vars.name(i);
	return out + "; " + body;
}

} // namespace homcheck
