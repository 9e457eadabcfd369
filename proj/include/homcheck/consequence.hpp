#pragma once

// Bounded consequence checking: is a target identity a rational linear
// combination of substitution instances of axiom identities? Successful
// searches return a certificate that replays exactly.

#include "catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace homcheck {

struct SearchBounds
{
	int max_alpha_power = 3;
	int jobs = 1;
	// Also use instances multiplied on the right by monomials in the
	// remaining target variables, i.e. elements of the ideal they generate.
	bool ideal_closure = false;
};

// An axiom prepared for instantiation: multilinear, unused variables dropped.
struct Axiom
{
	std::string name;
	Identity id;
};

struct Instance
{
	std::size_t axiom; // index into the axiom list
	Substitution subst;
	std::vector<Monomial> multipliers; // ((instance * m1) * m2) ...
	MPoly poly;
};

struct CertificateRow
{
	std::string axiom;
	Substitution subst;
	Rational coeff;
	std::vector<Monomial> multipliers = {};
};

struct Certificate
{
	std::vector<CertificateRow> rows;
	Identity target;
};

struct NotInSpan
{
	std::size_t residual_terms;
	MPoly residual;
};

using SpanResult = std::variant<Certificate, NotInSpan>;

// All canonical monomials using each variable of `vars` exactly once, with
// every α-power at most k, in ascending monomial order.
inline std::vector<Monomial> enumerate_monomials(const std::vector<int> &vars, int k)
{
	if (vars.empty())
		throw std::invalid_argument("enumerate_monomials: empty variable set");
	if (k < 0)
		throw std::invalid_argument("enumerate_monomials: negative α bound");
	std::vector<Monomial> out;
	if (vars.size() == 1)
	{
		for (int p = 0; p <= k; ++p)
			out.push_back(Monomial::leaf(vars[0], p));
		return out;
	}
	// Splits {A, B} with vars[0] in A, so each unordered split is seen once.
	const std::size_t n = vars.size();
	for (unsigned mask = 1; mask < (1u << n) - 1; ++mask)
	{
		if (!(mask & 1u))
			continue;
		std::vector<int> a, b;
		for (std::size_t i = 0; i < n; ++i)
			((mask >> i) & 1u ? a : b).push_back(vars[i]);
		auto left = enumerate_monomials(a, k);
		auto right = enumerate_monomials(b, k);
		for (const auto &l : left)
			for (const auto &r : right)
				out.push_back(canonical_product(l, r)->mono);
	}
	std::sort(out.begin(), out.end());
	return out;
}

// Prepares an identity for use as an axiom: drops unused variables and
// polarizes. Inhomogeneous input is split into multihomogeneous components
// first (each is itself a consequence in characteristic 0), named name[i].
inline std::vector<Axiom> prepare_axioms(const std::string &name, const Identity &id)
{
	std::vector<Axiom> out;
	auto parts = split_multihomogeneous(id.poly, id.vars.size());
	for (std::size_t i = 0; i < parts.size(); ++i)
	{
		Identity c = compact(Identity{parts[i], id.vars});
		if (!c.is_multilinear())
			c = polarize(c);
		out.push_back({parts.size() == 1 ? name : name + "[" + std::to_string(i) + "]", std::move(c)});
	}
	return out;
}

// Resolves a catalog name or DSL text to an identity.
inline Identity resolve_identity(const std::string &name_or_expr)
{
	if (find_catalog_entry(name_or_expr))
		return catalog(name_or_expr);
	return make_identity(name_or_expr);
}

// The target as used by the engine: unused variables dropped, polarized.
inline Identity prepare_target(const Identity &id)
{
	if (!id.degrees())
		throw NonHomogeneousError("target identity is not multihomogeneous");
	Identity c = compact(id);
	return c.is_multilinear() ? c : polarize(c);
}

namespace detail {

// Surjections from target variable positions onto axiom variables, in
// lexicographic order of the assignment vector.
inline std::vector<std::vector<int>> surjections(int n_target, int n_axiom)
{
	std::vector<std::vector<int>> out;
	std::vector<int> f(n_target, 0);
	for (;;)
	{
		std::vector<bool> hit(n_axiom, false);
		for (int v : f)
			hit[v] = true;
		if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
			out.push_back(f);
		int i = n_target - 1;
		while (i >= 0 && f[i] == n_axiom - 1)
			f[i--] = 0;
		if (i < 0)
			break;
		++f[i];
	}
	return out;
}

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn fn)
{
	jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
	if (jobs <= 1)
	{
		for (std::size_t i = 0; i < n; ++i)
			fn(i);
		return;
	}
	std::vector<std::thread> pool;
	for (int t = 0; t < jobs; ++t)
		pool.emplace_back([&, t] {
			for (std::size_t i = t; i < n; i += jobs)
				fn(i);
		});
	for (auto &th : pool)
		th.join();
}

inline MPoly::Map scale_key(const MPoly &p)
{
	return p.scaled(1 / p.begin()->second).terms();
}

} // namespace detail

// Substitution instances of one axiom over `subset` of the target variables
// (all of them when empty): for every surjective assignment of those
// variables to axiom variables and every choice of monomial (α-powers within
// the bound) on each block. Zero instances and instances equal up to scaling
// to an earlier one are dropped.
inline std::vector<Instance> generate_instances(const std::vector<Axiom> &axioms, std::size_t which,
                                                const VarTable &target_vars, const SearchBounds &bounds,
                                                std::vector<int> subset = {})
{
	const Identity &ax = axioms.at(which).id;
	if (!ax.is_multilinear())
		throw std::invalid_argument("generate_instances: axiom must be multilinear");
	if (subset.empty())
		for (int t = 0; t < target_vars.size(); ++t)
			subset.push_back(t);
	const int na = ax.vars.size(), nt = static_cast<int>(subset.size());
	if (na > nt)
		throw std::invalid_argument("generate_instances: axiom has more variables (" + std::to_string(na) +
		                            ") than the target (" + std::to_string(nt) + ")");
	auto maps = detail::surjections(nt, na);
	std::vector<std::vector<Instance>> chunks(maps.size());
	detail::parallel_for(maps.size(), bounds.jobs, [&](std::size_t idx) {
		const auto &f = maps[idx];
		std::vector<std::vector<Monomial>> choices(na);
		for (int a = 0; a < na; ++a)
		{
			std::vector<int> block;
			for (int t = 0; t < nt; ++t)
				if (f[t] == a)
					block.push_back(subset[t]);
			choices[a] = enumerate_monomials(block, bounds.max_alpha_power);
		}
		std::vector<std::size_t> pick(na, 0);
		for (;;)
		{
			Substitution s{std::vector<std::optional<Monomial>>(na), target_vars};
			for (int a = 0; a < na; ++a)
				s.images[a] = choices[a][pick[a]];
			MPoly p = substitute(ax.poly, s.images);
			if (!p.is_zero())
				chunks[idx].push_back(Instance{which, std::move(s), {}, std::move(p)});
			int a = na - 1;
			while (a >= 0 && pick[a] + 1 == choices[a].size())
				pick[a--] = 0;
			if (a < 0)
				break;
			++pick[a];
		}
	});
	std::vector<Instance> out;
	std::set<MPoly::Map> seen;
	for (auto &chunk : chunks)
		for (auto &inst : chunk)
			if (seen.insert(detail::scale_key(inst.poly)).second)
				out.push_back(std::move(inst));
	return out;
}

// p · m, with m sharing no variable with p.
inline MPoly right_multiply(const MPoly &p, const Monomial &m)
{
	MPoly out;
	for (const auto &[u, c] : p)
		if (auto r = canonical_product(u, m))
			out.add(r->mono, c * r->sign);
	return out;
}

// Per-variable weight (α-power + depth) of the leaves of a multilinear
// monomial. Normalization preserves it, and a substitution instance of an
// axiom that is homogeneous for it is homogeneous again.
inline std::optional<std::vector<int>> weight_profile(const MPoly &p, int nvars)
{
	std::optional<std::vector<int>> result;
	for (const auto &[m, c] : p)
	{
		std::vector<int> w(nvars, -1);
		bool repeated = false;
		auto walk = [&](auto &&self, const Monomial &n, int depth) -> void {
			if (n.is_leaf())
			{
				if (w[n.var()] >= 0)
					repeated = true;
				w[n.var()] = n.power() + depth;
				return;
			}
			self(self, n.left(), depth + 1);
			self(self, n.right(), depth + 1);
		};
		walk(walk, m, 0);
		if (repeated)
			return std::nullopt;
		if (!result)
			result = std::move(w);
		else if (*result != w)
			return std::nullopt;
	}
	return result;
}

namespace detail {

struct EchelonRow
{
	MPoly vec;
	std::map<std::size_t, Rational> combo;
};

inline void add_combo(std::map<std::size_t, Rational> &dst, const std::map<std::size_t, Rational> &src,
                      const Rational &c)
{
	for (const auto &[i, v] : src)
	{
		auto &slot = dst[i];
		slot += v * c;
		if (slot == 0)
			dst.erase(i);
	}
}

} // namespace detail

// Exact elimination over the monomial basis with the first nonzero monomial
// (in monomial order) as pivot, instances taken in order. Instances that are
// homogeneous for a different weight profile than the target are orthogonal
// to it and are skipped.
inline SpanResult span_membership(const Identity &target, const std::vector<Axiom> &axioms,
                                  const std::vector<Instance> &instances)
{
	auto target_profile = weight_profile(target.poly, target.vars.size());
	std::map<Monomial, detail::EchelonRow> basis;
	for (std::size_t i = 0; i < instances.size(); ++i)
	{
		const MPoly &p = instances[i].poly;
		if (target_profile)
		{
			auto prof = weight_profile(p, target.vars.size());
			if (prof && *prof != *target_profile)
				continue;
		}
		detail::EchelonRow row{p, {{i, Rational(1)}}};
		while (!row.vec.is_zero())
		{
			const auto &[lead, c] = *row.vec.begin();
			auto it = basis.find(lead);
			if (it == basis.end())
			{
				Monomial key = lead;
				basis.emplace(std::move(key), std::move(row));
				break;
			}
			Rational f = c / it->second.vec.begin()->second;
			row.vec.add(it->second.vec, -f);
			detail::add_combo(row.combo, it->second.combo, -f);
		}
	}

	MPoly rest = target.poly, residual;
	std::map<std::size_t, Rational> combo;
	while (!rest.is_zero())
	{
		auto [lead, c] = *rest.begin();
		auto it = basis.find(lead);
		if (it == basis.end())
		{
			residual.add(lead, c);
			rest.add(lead, -c);
			continue;
		}
		Rational f = c / it->second.vec.begin()->second;
		rest.add(it->second.vec, -f);
		detail::add_combo(combo, it->second.combo, f);
	}
	if (!residual.is_zero())
		return NotInSpan{residual.size(), residual};

	Certificate cert;
	cert.target = target;
	for (const auto &[i, c] : combo)
		cert.rows.push_back({axioms[instances[i].axiom].name, instances[i].subst, c, instances[i].multipliers});
	return cert;
}

// Σ coeff · substitute(axiom, subst) over the certificate rows.
inline MPoly replay(const Certificate &cert, const std::vector<Axiom> &axioms)
{
	MPoly out;
	for (const auto &row : cert.rows)
	{
		auto it = std::find_if(axioms.begin(), axioms.end(), [&](const Axiom &a) { return a.name == row.axiom; });
		if (it == axioms.end())
			throw std::invalid_argument("certificate references unknown axiom '" + row.axiom + "'");
		MPoly p = substitute(it->id.poly, row.subst.images);
		for (const auto &m : row.multipliers)
			p = right_multiply(p, m);
		out.add(p, row.coeff);
	}
	return out;
}

inline std::vector<Axiom> prepare_axioms(const std::vector<std::string> &names)
{
	std::vector<Axiom> out;
	for (const auto &n : names)
		for (auto &a : prepare_axioms(n, resolve_identity(n)))
			out.push_back(std::move(a));
	return out;
}

struct Derivation
{
	Identity target; // prepared (compact, multilinear)
	std::vector<Axiom> axioms;
	std::size_t instance_count = 0;
	SpanResult result;
};

namespace detail {

// Multilinear elements over exactly the variables in `mask` of the ideal
// generated by the axiom instances: instances themselves, and (with ideal
// closure) elements over a smaller mask multiplied by a monomial in the rest.
inline const std::vector<Instance> &ideal_elements(unsigned mask, const std::vector<Axiom> &axioms,
                                                   const VarTable &vars, const SearchBounds &bounds,
                                                   std::map<unsigned, std::vector<Instance>> &memo)
{
	if (auto it = memo.find(mask); it != memo.end())
		return it->second;
	std::vector<int> subset;
	for (int t = 0; t < vars.size(); ++t)
		if ((mask >> t) & 1u)
			subset.push_back(t);
	std::vector<Instance> out;
	for (std::size_t a = 0; a < axioms.size(); ++a)
	{
		if (axioms[a].id.vars.size() > static_cast<int>(subset.size()) || axioms[a].id.poly.is_zero())
			continue;
		for (auto &i : generate_instances(axioms, a, vars, bounds, subset))
			out.push_back(std::move(i));
	}
	if (bounds.ideal_closure)
		for (unsigned inner = (mask - 1) & mask; inner; inner = (inner - 1) & mask)
		{
			std::vector<int> rest;
			for (int t = 0; t < vars.size(); ++t)
				if (((mask & ~inner) >> t) & 1u)
					rest.push_back(t);
			const auto &base = ideal_elements(inner, axioms, vars, bounds, memo);
			if (base.empty())
				continue;
			for (const auto &m : enumerate_monomials(rest, bounds.max_alpha_power))
				for (const auto &e : base)
				{
					MPoly p = right_multiply(e.poly, m);
					if (p.is_zero())
						continue;
					Instance prod = e;
					prod.multipliers.push_back(m);
					prod.poly = std::move(p);
					out.push_back(std::move(prod));
				}
		}
	return memo.emplace(mask, std::move(out)).first->second;
}

} // namespace detail

// Decides, within the bounds, whether `target` follows from `axioms`.
// Axioms with more variables than the target contribute no instances.
inline Derivation derive(const Identity &target, std::vector<Axiom> axioms, const SearchBounds &bounds)
{
	Identity t = prepare_target(target);
	if (t.vars.size() > 30)
		throw std::invalid_argument("derive: too many target variables");
	std::map<unsigned, std::vector<Instance>> memo;
	unsigned full = t.vars.size() == 0 ? 0u : (1u << t.vars.size()) - 1;
	std::vector<Instance> all;
	if (full)
		all = detail::ideal_elements(full, axioms, t.vars, bounds, memo);
	SpanResult r = span_membership(t, axioms, all);
	return Derivation{std::move(t), std::move(axioms), all.size(), std::move(r)};
}

inline Derivation derive(const std::string &target, const std::vector<std::string> &axioms,
                         const SearchBounds &bounds)
{
	return derive(resolve_identity(target), prepare_axioms(axioms), bounds);
}

// [{axiom, substitution: {var: monomial}, coeff: "p/q"}, ...]
inline nlohmann::json certificate_to_json(const Certificate &cert, const std::vector<Axiom> &axioms)
{
	nlohmann::json rows = nlohmann::json::array();
	for (const auto &row : cert.rows)
	{
		auto it = std::find_if(axioms.begin(), axioms.end(), [&](const Axiom &a) { return a.name == row.axiom; });
		nlohmann::json sub = nlohmann::json::object();
		for (std::size_t v = 0; v < row.subst.images.size(); ++v)
			if (row.subst.images[v])
				sub[it->id.vars.name(static_cast<int>(v))] = format_monomial(*row.subst.images[v], row.subst.target);
		nlohmann::json entry{{"axiom", row.axiom}, {"substitution", sub}, {"coeff", format_rational(row.coeff)}};
		if (!row.multipliers.empty())
		{
			entry["multipliers"] = nlohmann::json::array();
			for (const auto &m : row.multipliers)
				entry["multipliers"].push_back(format_monomial(m, row.subst.target));
		}
		rows.push_back(std::move(entry));
	}
	return rows;
}

inline Monomial parse_monomial(const std::string &text, const VarTable &vars)
{
	MPoly m = normalize(parse_expr(text, vars));
	if (m.size() != 1 || m.begin()->second != 1)
		throw std::invalid_argument("'" + text + "' is not a canonical monomial");
	return m.begin()->first;
}

// Inverse of certificate_to_json; monomials are parsed over the target's
// variables and must already be canonical.
inline Certificate certificate_from_json(const nlohmann::json &rows, const Identity &target,
                                         const std::vector<Axiom> &axioms)
{
	Certificate cert;
	cert.target = target;
	for (const auto &r : rows)
	{
		std::string name = r.at("axiom").get<std::string>();
		auto it = std::find_if(axioms.begin(), axioms.end(), [&](const Axiom &a) { return a.name == name; });
		if (it == axioms.end())
			throw std::invalid_argument("certificate references unknown axiom '" + name + "'");
		Substitution s{std::vector<std::optional<Monomial>>(it->id.vars.size()), target.vars};
		for (const auto &[var, text] : r.at("substitution").items())
		{
			int v = it->id.vars.find(var);
			if (v < 0)
				throw std::invalid_argument("axiom '" + name + "' has no variable '" + var + "'");
			s.images[v] = parse_monomial(text.get<std::string>(), target.vars);
		}
		std::vector<Monomial> multipliers;
		if (r.contains("multipliers"))
			for (const auto &text : r.at("multipliers"))
				multipliers.push_back(parse_monomial(text.get<std::string>(), target.vars));
		cert.rows.push_back(
		    {name, std::move(s), parse_rational(r.at("coeff").get<std::string>()), std::move(multipliers)});
	}
	return cert;
}

} // namespace homcheck
