#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>

namespace homcheck {

// A canonical word of the free anticommutative multiplicative Hom-algebra:
// a binary product tree whose leaves are α^k(x_i). Every product node has
// left < right in the monomial order; α only appears on leaves.
class Monomial
{
  public:
	static Monomial leaf(int var, int power = 0)
	{
		return Monomial(std::make_shared<Node>(Node{var, power, 1, {}, {}}));
	}

	// Caller guarantees compare(l, r) < 0; use canonical_product otherwise.
	static Monomial prod_unchecked(Monomial l, Monomial r)
	{
		int n = l.leaf_count() + r.leaf_count();
		return Monomial(std::make_shared<Node>(Node{-1, 0, n, std::move(l.node_), std::move(r.node_)}));
	}

	bool is_leaf() const { return !node_->left; }
	int var() const { return node_->var; }
	int power() const { return node_->power; }
	int leaf_count() const { return node_->leaves; }
	Monomial left() const { return Monomial(node_->left); }
	Monomial right() const { return Monomial(node_->right); }

	// α^k applied to the whole word: k is added to every leaf. Twisting both
	// sides preserves the order, so the result is still canonical.
	Monomial twisted(int k) const
	{
		if (k == 0)
			return *this;
		if (is_leaf())
			return leaf(var(), power() + k);
		return prod_unchecked(left().twisted(k), right().twisted(k));
	}

	// Leaf count first; then Leaf < Prod; leaves by (var, power); products
	// by (left, right).
	friend std::strong_ordering compare(const Monomial &a, const Monomial &b)
	{
		if (a.node_ == b.node_)
			return std::strong_ordering::equal;
		if (auto c = a.leaf_count() <=> b.leaf_count(); c != 0)
			return c;
		if (a.is_leaf() != b.is_leaf())
			return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
		if (a.is_leaf())
		{
			if (auto c = a.var() <=> b.var(); c != 0)
				return c;
			return a.power() <=> b.power();
		}
		if (auto c = compare(a.left(), b.left()); c != 0)
			return c;
		return compare(a.right(), b.right());
	}

	friend bool operator==(const Monomial &a, const Monomial &b) { return compare(a, b) == 0; }
	friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) { return compare(a, b); }

  private:
	struct Node
	{
		int var;
		int power;
		int leaves;
		std::shared_ptr<const Node> left, right;
	};
	explicit Monomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
	std::shared_ptr<const Node> node_;
};

struct SignedMonomial
{
	int sign;
	Monomial mono;
};

// u·v in canonical form: nullopt when u = v (the product vanishes), else the
// ordered product with sign −1 if the factors had to be swapped.
inline std::optional<SignedMonomial> canonical_product(const Monomial &u, const Monomial &v)
{
	auto c = compare(u, v);
	if (c == 0)
		return std::nullopt;
	if (c < 0)
		return SignedMonomial{1, Monomial::prod_unchecked(u, v)};
	return SignedMonomial{-1, Monomial::prod_unchecked(v, u)};
}

} // namespace homcheck
