#pragma once

// Finite-dimensional anticommutative Hom-algebras over the rationals given by
// structure constants and a twist matrix, and exact evaluation of identities
// in them.

#include "consequence.hpp"

#include <json.hpp>

#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace homcheck {

using Element = std::vector<Rational>;

class AlgebraError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

class SchemaError : public AlgebraError
{
  public:
	using AlgebraError::AlgebraError;
};

class MultiplicativityError : public AlgebraError
{
  public:
	MultiplicativityError(int i, int j)
	    : AlgebraError("twist is not multiplicative on basis pair (" + std::to_string(i) + "," +
	                   std::to_string(j) + ")"),
	      i_(i), j_(j)
	{
	}
	// 1-based basis indices of the failing pair.
	int i() const { return i_; }
	int j() const { return j_; }

  private:
	int i_, j_;
};

class AlgebraSpec
{
  public:
	AlgebraSpec() = default;

	// Zero product, identity twist.
	explicit AlgebraSpec(int dim) : dim_(dim), products_(dim * dim, Element(dim)), twist_(dim, Element(dim))
	{
		if (dim <= 0)
			throw SchemaError("dimension must be positive");
		for (int i = 0; i < dim; ++i)
		{
			basis_.push_back("e" + std::to_string(i + 1));
			twist_[i][i] = 1;
		}
	}

	int dim() const { return dim_; }
	const std::vector<std::string> &basis() const { return basis_; }
	void set_basis(std::vector<std::string> names) { basis_ = std::move(names); }

	// e_i·e_j for 0-based i < j; e_j·e_i is its negative.
	void set_product(int i, int j, Element out)
	{
		check_index(i);
		check_index(j);
		check(out);
		if (i >= j)
			throw SchemaError("products are stored for i < j only");
		products_[i * dim_ + j] = out;
		for (auto &x : out)
			x = -x;
		products_[j * dim_ + i] = std::move(out);
	}

	// Structure constants of e_i·e_j for any 0-based i, j.
	const Element &product(int i, int j) const { return products_[i * dim_ + j]; }

	// twist[r][c] is the coefficient of e_r in α(e_c).
	const std::vector<Element> &twist() const { return twist_; }
	void set_twist(std::vector<Element> t)
	{
		if (static_cast<int>(t.size()) != dim_)
			throw SchemaError("twist must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
		for (const auto &row : t)
			check(row);
		twist_ = std::move(t);
	}

	Element basis_element(int i) const
	{
		Element e(dim_);
		e.at(i) = 1;
		return e;
	}

	Element multiply(const Element &u, const Element &v) const
	{
		check(u);
		check(v);
		Element out(dim_);
		for (int i = 0; i < dim_; ++i)
		{
			if (u[i] == 0)
				continue;
			for (int j = 0; j < dim_; ++j)
			{
				if (i == j || v[j] == 0)
					continue;
				const Element &c = products_[i * dim_ + j];
				Rational f = u[i] * v[j];
				for (int k = 0; k < dim_; ++k)
					if (c[k] != 0)
						out[k] += f * c[k];
			}
		}
		return out;
	}

	Element apply_twist(const Element &u) const
	{
		check(u);
		Element out(dim_);
		for (int c = 0; c < dim_; ++c)
		{
			if (u[c] == 0)
				continue;
			for (int r = 0; r < dim_; ++r)
				if (twist_[r][c] != 0)
					out[r] += twist_[r][c] * u[c];
		}
		return out;
	}

	// First 0-based pair i < j with α(e_i·e_j) ≠ α(e_i)·α(e_j).
	std::optional<std::pair<int, int>> multiplicativity_failure() const
	{
		for (int i = 0; i < dim_; ++i)
			for (int j = i + 1; j < dim_; ++j)
			{
				Element ei = basis_element(i), ej = basis_element(j);
				if (apply_twist(multiply(ei, ej)) != multiply(apply_twist(ei), apply_twist(ej)))
					return std::pair{i, j};
			}
		return std::nullopt;
	}

	bool require_multiplicative = false;

	friend bool operator==(const AlgebraSpec &a, const AlgebraSpec &b)
	{
		return a.dim_ == b.dim_ && a.products_ == b.products_ && a.twist_ == b.twist_;
	}

  private:
	void check(const Element &e) const
	{
		if (static_cast<int>(e.size()) != dim_)
			throw std::invalid_argument("element has dimension " + std::to_string(e.size()) + ", algebra has " +
			                            std::to_string(dim_));
	}
	void check_index(int i) const
	{
		if (i < 0 || i >= dim_)
			throw SchemaError("basis index out of range");
	}

	int dim_ = 0;
	std::vector<std::string> basis_;
	std::vector<Element> products_; // dim × dim, row-major
	std::vector<Element> twist_;
};

namespace detail {

inline Rational json_rational(const nlohmann::json &j, const std::string &where)
{
	try
	{
		if (j.is_string())
			return parse_rational(j.get<std::string>());
		if (j.is_number_integer())
			return Rational(Integer(std::to_string(j.get<long long>()), 10));
	}
	catch (const std::invalid_argument &e)
	{
		throw SchemaError(where + ": " + e.what());
	}
	throw SchemaError(where + ": expected a rational string");
}

} // namespace detail

// Validates and loads the algebra JSON document:
//   { "dim": n, "basis": [names], "product": [{"i":1,"j":2,"out":{"3":"1"}}, ...],
//     "twist": [[rational strings]], "require_multiplicative": bool }
// Indices are 1-based, only i < j is stored, and omitted pairs multiply to 0.
inline AlgebraSpec load_algebra(const nlohmann::json &doc)
{
	if (!doc.is_object())
		throw SchemaError("algebra document must be an object");
	if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0 ||
	    doc["dim"].get<long long>() > 64)
		throw SchemaError("'dim' must be an integer in 1..64");
	const int n = doc["dim"].get<int>();
	AlgebraSpec spec(n);

	if (doc.contains("basis"))
	{
		const auto &b = doc["basis"];
		if (!b.is_array() || static_cast<int>(b.size()) != n)
			throw SchemaError("'basis' must list " + std::to_string(n) + " names");
		std::vector<std::string> names;
		for (const auto &x : b)
		{
			if (!x.is_string())
				throw SchemaError("basis names must be strings");
			names.push_back(x.get<std::string>());
		}
		spec.set_basis(std::move(names));
	}

	if (doc.contains("product"))
	{
		const auto &p = doc["product"];
		if (!p.is_array())
			throw SchemaError("'product' must be an array");
		std::vector<bool> seen(n * n, false);
		for (const auto &entry : p)
		{
			if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("out") ||
			    !entry["i"].is_number_integer() || !entry["j"].is_number_integer() || !entry["out"].is_object())
				throw SchemaError("product entries need integer 'i', 'j' and an object 'out'");
			int i = entry["i"].get<int>(), j = entry["j"].get<int>();
			std::string where = "product (" + std::to_string(i) + "," + std::to_string(j) + ")";
			if (i < 1 || j > n || i >= j)
				throw SchemaError(where + ": need 1 <= i < j <= dim");
			if (seen[(i - 1) * n + (j - 1)])
				throw SchemaError(where + ": listed twice");
			seen[(i - 1) * n + (j - 1)] = true;
			Element out(n);
			for (const auto &[key, val] : entry["out"].items())
			{
				int k = 0;
				try
				{
					std::size_t used = 0;
					k = std::stoi(key, &used);
					if (used != key.size())
						throw std::invalid_argument(key);
				}
				catch (const std::exception &)
				{
					throw SchemaError(where + ": output key '" + key + "' is not an index");
				}
				if (k < 1 || k > n)
					throw SchemaError(where + ": output index " + key + " out of range");
				out[k - 1] = detail::json_rational(val, where);
			}
			spec.set_product(i - 1, j - 1, std::move(out));
		}
	}

	if (doc.contains("twist"))
	{
		const auto &t = doc["twist"];
		if (!t.is_array() || static_cast<int>(t.size()) != n)
			throw SchemaError("'twist' must be an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
		std::vector<Element> m;
		for (std::size_t r = 0; r < t.size(); ++r)
		{
			if (!t[r].is_array() || static_cast<int>(t[r].size()) != n)
				throw SchemaError("'twist' row " + std::to_string(r + 1) + " must have " + std::to_string(n) +
				                  " entries");
			Element row;
			for (const auto &x : t[r])
				row.push_back(detail::json_rational(x, "twist"));
			m.push_back(std::move(row));
		}
		spec.set_twist(std::move(m));
	}

	if (doc.contains("require_multiplicative"))
	{
		if (!doc["require_multiplicative"].is_boolean())
			throw SchemaError("'require_multiplicative' must be a boolean");
		spec.require_multiplicative = doc["require_multiplicative"].get<bool>();
	}
	if (spec.require_multiplicative)
		if (auto bad = spec.multiplicativity_failure())
			throw MultiplicativityError(bad->first + 1, bad->second + 1);
	return spec;
}

inline nlohmann::json algebra_to_json(const AlgebraSpec &spec)
{
	nlohmann::json doc;
	const int n = spec.dim();
	doc["dim"] = n;
	doc["basis"] = spec.basis();
	doc["product"] = nlohmann::json::array();
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
		{
			nlohmann::json out = nlohmann::json::object();
			const Element &c = spec.product(i, j);
			for (int k = 0; k < n; ++k)
				if (c[k] != 0)
					out[std::to_string(k + 1)] = format_rational(c[k]);
			if (!out.empty())
				doc["product"].push_back({{"i", i + 1}, {"j", j + 1}, {"out", out}});
		}
	doc["twist"] = nlohmann::json::array();
	for (const auto &row : spec.twist())
	{
		nlohmann::json r = nlohmann::json::array();
		for (const auto &x : row)
			r.push_back(format_rational(x));
		doc["twist"].push_back(r);
	}
	doc["require_multiplicative"] = spec.require_multiplicative;
	return doc;
}

// The Hom-algebra (A, α∘μ, α) built from (A, μ) and a multiplicative twist α.
inline AlgebraSpec yau_twist(const AlgebraSpec &spec)
{
	if (auto bad = spec.multiplicativity_failure())
		throw MultiplicativityError(bad->first + 1, bad->second + 1);
	AlgebraSpec out = spec;
	for (int i = 0; i < spec.dim(); ++i)
		for (int j = i + 1; j < spec.dim(); ++j)
			out.set_product(i, j, spec.apply_twist(spec.product(i, j)));
	return out;
}

// Evaluates normal forms with variable v set to values[v]; α-powers of the
// inputs are computed once.
class Evaluator
{
  public:
	Evaluator(const AlgebraSpec &spec, std::vector<Element> values, int max_power)
	    : spec_(spec), powers_(values.size())
	{
		for (std::size_t v = 0; v < values.size(); ++v)
		{
			powers_[v].push_back(std::move(values[v]));
			for (int k = 1; k <= max_power; ++k)
				powers_[v].push_back(spec.apply_twist(powers_[v].back()));
		}
	}

	Element operator()(const Monomial &m) const
	{
		if (m.is_leaf())
		{
			const auto &pw = powers_.at(m.var());
			if (m.power() < static_cast<int>(pw.size()))
				return pw[m.power()];
			Element e = pw.back();
			for (int k = static_cast<int>(pw.size()) - 1; k < m.power(); ++k)
				e = spec_.apply_twist(e);
			return e;
		}
		return spec_.multiply((*this)(m.left()), (*this)(m.right()));
	}

	Element operator()(const MPoly &p) const
	{
		Element out(spec_.dim());
		for (const auto &[m, c] : p)
		{
			Element e = (*this)(m);
			for (int k = 0; k < spec_.dim(); ++k)
				if (e[k] != 0)
					out[k] += c * e[k];
		}
		return out;
	}

  private:
	const AlgebraSpec &spec_;
	std::vector<std::vector<Element>> powers_;
};

inline int max_alpha_power(const MPoly &p)
{
	int k = 0;
	for (const auto &[m, c] : p)
		k = std::max(k, max_alpha_power(m));
	return k;
}

inline Element evaluate(const AlgebraSpec &spec, const MPoly &p, const std::vector<Element> &values)
{
	return Evaluator(spec, values, max_alpha_power(p))(p);
}

// Direct evaluation of raw words: no normalization involved.
inline Element evaluate(const AlgebraSpec &spec, const RawTerm &t, const std::vector<Element> &values)
{
	switch (t.kind())
	{
	case RawTerm::Kind::Leaf:
		return values.at(t.var());
	case RawTerm::Kind::Twist:
		return spec.apply_twist(evaluate(spec, t.arg(), values));
	case RawTerm::Kind::Prod:
		return spec.multiply(evaluate(spec, t.left(), values), evaluate(spec, t.right(), values));
	}
	return {};
}

inline Element evaluate(const AlgebraSpec &spec, const RawTerms &terms, const std::vector<Element> &values)
{
	Element out(spec.dim());
	for (const auto &[c, t] : terms)
	{
		Element e = evaluate(spec, t, values);
		for (int k = 0; k < spec.dim(); ++k)
			out[k] += c * e[k];
	}
	return out;
}

struct Holds
{
	std::size_t tuples_checked;
};

struct Counterexample
{
	VarTable vars;             // polarized variables
	std::vector<int> tuple;    // 0-based basis index per variable
	Element residual;
	std::size_t component = 0; // multihomogeneous component, when split
};

using ConcreteVerdict = std::variant<Holds, Counterexample>;

// Polarizes the identity and evaluates it on every tuple of basis vectors,
// which is complete by multilinearity. Reports the first failing tuple in
// lexicographic order.
inline ConcreteVerdict check_identity_concrete(const AlgebraSpec &spec, const Identity &id, int jobs = 1)
{
	std::size_t checked = 0;
	auto parts = split_multihomogeneous(id.poly, id.vars.size());
	for (std::size_t part = 0; part < parts.size(); ++part)
	{
		Identity lin = compact(Identity{parts[part], id.vars});
		if (!lin.is_multilinear())
			lin = polarize(lin);
		const int m = lin.vars.size();
		const int n = spec.dim();
		std::size_t total = 1;
		for (int v = 0; v < m; ++v)
		{
			if (total > std::numeric_limits<std::size_t>::max() / n)
				throw std::invalid_argument("too many basis tuples");
			total *= n;
		}
		const int maxp = max_alpha_power(lin.poly);
		auto decode = [&](std::size_t idx) {
			std::vector<int> t(m);
			for (int v = m - 1; v >= 0; --v)
			{
				t[v] = static_cast<int>(idx % n);
				idx /= n;
			}
			return t;
		};
		std::atomic<std::size_t> first_bad{total};
		jobs = std::max(1, jobs);
		detail::parallel_for(static_cast<std::size_t>(jobs), jobs, [&](std::size_t worker) {
			for (std::size_t idx = worker; idx < total; idx += jobs)
			{
				if (idx >= first_bad.load())
					return;
				auto t = decode(idx);
				std::vector<Element> values;
				for (int b : t)
					values.push_back(spec.basis_element(b));
				Element r = Evaluator(spec, std::move(values), maxp)(lin.poly);
				if (std::any_of(r.begin(), r.end(), [](const Rational &x) { return x != 0; }))
				{
					std::size_t cur = first_bad.load();
					while (idx < cur && !first_bad.compare_exchange_weak(cur, idx))
					{
					}
					return;
				}
			}
		});
		if (first_bad < total)
		{
			auto t = decode(first_bad);
			std::vector<Element> values;
			for (int b : t)
				values.push_back(spec.basis_element(b));
			Element r = evaluate(spec, lin.poly, values);
			return Counterexample{lin.vars, std::move(t), std::move(r), part};
		}
		checked += total;
	}
	return Holds{checked};
}

} // namespace homcheck

namespace homcheck {

// e1·e2 = e3, e2·e3 = e1, e3·e1 = e2; identity twist.
inline AlgebraSpec cross3_algebra()
{
	AlgebraSpec a(3);
	a.set_product(0, 1, {0, 0, 1});
	a.set_product(0, 2, {0, -1, 0});
	a.set_product(1, 2, {1, 0, 0});
	a.require_multiplicative = true;
	return a;
}

// Imaginary octonions under e_i·e_j = (1/2)[e_i, e_j]; identity twist. Same
// basis convention as algebras/m7.json.
inline AlgebraSpec m7_algebra()
{
	struct Entry
	{
		int i, j, k, sign;
	};
	static constexpr Entry table[] = {
	    {1, 2, 3, 1},  {1, 3, 2, -1}, {1, 4, 5, 1},  {1, 5, 4, -1}, {1, 6, 7, -1}, {1, 7, 6, 1},  {2, 3, 1, 1},
	    {2, 4, 6, 1},  {2, 5, 7, 1},  {2, 6, 4, -1}, {2, 7, 5, -1}, {3, 4, 7, 1},  {3, 5, 6, -1}, {3, 6, 5, 1},
	    {3, 7, 4, -1}, {4, 5, 1, 1},  {4, 6, 2, 1},  {4, 7, 3, 1},  {5, 6, 3, -1}, {5, 7, 2, 1},  {6, 7, 1, -1},
	};
	AlgebraSpec a(7);
	for (const auto &e : table)
	{
		Element out(7);
		out[e.k - 1] = e.sign;
		a.set_product(e.i - 1, e.j - 1, std::move(out));
	}
	a.require_multiplicative = true;
	return a;
}

} // namespace homcheck
