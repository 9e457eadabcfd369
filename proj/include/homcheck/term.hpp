#pragma once

// Raw (pre-normalization) words of a Hom-algebra and their linear
// combinations, plus expansion of the Hom-Jacobian J and the four-variable
// function G into raw words.

#include "rational.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcheck {

// Ordered variable names; a variable's index is its position.
class VarTable
{
  public:
	VarTable() = default;
	VarTable(std::initializer_list<std::string> names) : names_(names) {}
	explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {}

	int find(std::string_view name) const
	{
		for (std::size_t i = 0; i < names_.size(); ++i)
			if (names_[i] == name)
				return static_cast<int>(i);
		return -1;
	}

	int intern(std::string_view name)
	{
		int i = find(name);
		if (i >= 0)
			return i;
		names_.emplace_back(name);
		return static_cast<int>(names_.size()) - 1;
	}

	const std::string &name(int index) const { return names_.at(index); }
	int size() const { return static_cast<int>(names_.size()); }
	const std::vector<std::string> &names() const { return names_; }

	bool operator==(const VarTable &) const = default;

  private:
	std::vector<std::string> names_;
};

class RawTerm
{
  public:
	enum class Kind
	{
		Leaf,
		Prod,
		Twist
	};

	static RawTerm leaf(int var) { return RawTerm(std::make_shared<Node>(Node{Kind::Leaf, var, {}, {}})); }
	static RawTerm prod(RawTerm l, RawTerm r)
	{
		return RawTerm(std::make_shared<Node>(Node{Kind::Prod, -1, std::move(l.node_), std::move(r.node_)}));
	}
	static RawTerm twist(RawTerm arg)
	{
		return RawTerm(std::make_shared<Node>(Node{Kind::Twist, -1, std::move(arg.node_), {}}));
	}
	static RawTerm twist(RawTerm arg, int times)
	{
		for (int i = 0; i < times; ++i)
			arg = twist(std::move(arg));
		return arg;
	}

	Kind kind() const { return node_->kind; }
	int var() const { return node_->var; }
	RawTerm left() const { return RawTerm(node_->a); }
	RawTerm right() const { return RawTerm(node_->b); }
	RawTerm arg() const { return RawTerm(node_->a); }

	// Structural equality (no rewriting).
	friend bool operator==(const RawTerm &x, const RawTerm &y)
	{
		if (x.node_ == y.node_)
			return true;
		if (x.kind() != y.kind())
			return false;
		switch (x.kind())
		{
		case Kind::Leaf:
			return x.var() == y.var();
		case Kind::Twist:
			return x.arg() == y.arg();
		case Kind::Prod:
			return x.left() == y.left() && x.right() == y.right();
		}
		return false;
	}

  private:
	struct Node
	{
		Kind kind;
		int var;
		std::shared_ptr<const Node> a, b;
	};
	explicit RawTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
	std::shared_ptr<const Node> node_;
};

struct RawEntry
{
	Rational coeff;
	RawTerm term;
};

// Linear combination of raw words; like terms are NOT merged.
using RawTerms = std::vector<RawEntry>;

struct RawExpr
{
	VarTable vars;
	RawTerms terms;
};

inline RawTerms raw_single(RawTerm t, Rational c = 1)
{
	if (c == 0)
		return {};
	return {RawEntry{std::move(c), std::move(t)}};
}

inline RawTerms raw_scale(const RawTerms &a, const Rational &c)
{
	RawTerms out;
	if (c == 0)
		return out;
	out.reserve(a.size());
	for (const auto &e : a)
		out.push_back({e.coeff * c, e.term});
	return out;
}

inline RawTerms raw_add(RawTerms a, const RawTerms &b, const Rational &cb = 1)
{
	if (cb == 0)
		return a;
	for (const auto &e : b)
		a.push_back({e.coeff * cb, e.term});
	return a;
}

// Bilinear product, distributed over both sums.
inline RawTerms raw_mul(const RawTerms &a, const RawTerms &b)
{
	RawTerms out;
	out.reserve(a.size() * b.size());
	for (const auto &x : a)
		for (const auto &y : b)
			out.push_back({x.coeff * y.coeff, RawTerm::prod(x.term, y.term)});
	return out;
}

inline RawTerms raw_twist(const RawTerms &a, int times = 1)
{
	RawTerms out;
	out.reserve(a.size());
	for (const auto &e : a)
		out.push_back({e.coeff, RawTerm::twist(e.term, times)});
	return out;
}

class ArityError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

// J(t,u,v) = tu·α(v) + uv·α(t) + vt·α(u)
inline RawTerms hom_jacobian(const RawTerms &t, const RawTerms &u, const RawTerms &v)
{
	RawTerms out = raw_mul(raw_mul(t, u), raw_twist(v));
	out = raw_add(std::move(out), raw_mul(raw_mul(u, v), raw_twist(t)));
	out = raw_add(std::move(out), raw_mul(raw_mul(v, t), raw_twist(u)));
	return out;
}

// G(w,x,y,z) = J(w·x, α(y), α(z)) − α²(x)·J(w,y,z) − J(x,y,z)·α²(w)
inline RawTerms g_function(const RawTerms &w, const RawTerms &x, const RawTerms &y, const RawTerms &z)
{
	RawTerms out = hom_jacobian(raw_mul(w, x), raw_twist(y), raw_twist(z));
	out = raw_add(std::move(out), raw_mul(raw_twist(x, 2), hom_jacobian(w, y, z)), -1);
	out = raw_add(std::move(out), raw_mul(hom_jacobian(x, y, z), raw_twist(w, 2)), -1);
	return out;
}

// Expands a call of the J or G macro.
inline RawTerms expand_macros(std::string_view name, std::span<const RawTerms> args)
{
	if (name == "J")
	{
		if (args.size() != 3)
			throw ArityError("J expects 3 arguments, got " + std::to_string(args.size()));
		return hom_jacobian(args[0], args[1], args[2]);
	}
	if (name == "G")
	{
		if (args.size() != 4)
			throw ArityError("G expects 4 arguments, got " + std::to_string(args.size()));
		return g_function(args[0], args[1], args[2], args[3]);
	}
	throw std::invalid_argument("unknown macro '" + std::string(name) + "'");
}

} // namespace homcheck
