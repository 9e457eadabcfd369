#pragma once

// The homcheck command line. Exit codes: 0 success, 1 semantic negative
// (not in span, counterexample, unequal, failed step), 2 usage or parse
// error, 3 invalid input file.

#include "homcheck.hpp"
#include "random.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace homcheck::cli {

enum ExitCode
{
	ok = 0,
	negative = 1,
	usage = 2,
	bad_input = 3
};

struct RunConfig
{
	std::string format = "text";
	int K = 3;
	int jobs = 1;
	std::uint64_t seed = 0;
	int cases = 1000;
	bool ideal = false;
};

namespace detail {

// Without a `vars` header, variables are ordered by name so the printed
// form does not depend on how the input was written.
inline RawExpr parse_sorted(const std::string &text)
{
	RawExpr first = parse_expr(text);
	std::string_view t(text);
	while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
		t.remove_prefix(1);
	if (t.substr(0, 4) == "vars")
		return first;
	auto names = first.vars.names();
	std::sort(names.begin(), names.end());
	return parse_expr(text, VarTable(names));
}

inline Identity identity_arg(const std::string &name_or_expr)
{
	if (find_catalog_entry(name_or_expr))
		return catalog(name_or_expr);
	RawExpr e = parse_sorted(name_or_expr);
	return Identity{normalize(e), e.vars};
}

inline int capped_k(int k, std::ostream &err)
{
	if (const char *cap = std::getenv("HOMCHECK_MAX_K"))
	{
		int c = std::atoi(cap);
		if (c >= 0 && k > c)
		{
			err << "note: K capped at " << c << " by HOMCHECK_MAX_K\n";
			return c;
		}
	}
	return k;
}

inline nlohmann::json read_json_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw AlgebraError("cannot open '" + path + "'");
	try
	{
		return nlohmann::json::parse(in);
	}
	catch (const nlohmann::json::parse_error &e)
	{
		throw SchemaError(path + ": " + e.what());
	}
}

inline std::string element_text(const Element &e, const AlgebraSpec &spec)
{
	std::string out;
	bool first = true;
	for (int k = 0; k < spec.dim(); ++k)
	{
		if (e[k] == 0)
			continue;
		Rational c = e[k];
		bool neg = c < 0;
		if (neg)
			c = -c;
		out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
		if (c != 1)
			out += c.get_str(10) + "*";
		out += spec.basis()[k];
		first = false;
	}
	return first ? "0" : out;
}

inline nlohmann::json derivation_json(const Derivation &d, int K)
{
	nlohmann::json j;
	j["target"] = format_expr(d.target.poly, d.target.vars);
	j["target_vars"] = d.target.vars.names();
	j["K"] = K;
	j["instances"] = d.instance_count;
	if (auto *c = std::get_if<Certificate>(&d.result))
	{
		j["result"] = "certificate";
		j["certificate"] = certificate_to_json(*c, d.axioms);
		j["replay_residual_terms"] = (replay(*c, d.axioms) - d.target.poly).size();
	}
	else
	{
		const auto &n = std::get<NotInSpan>(d.result);
		j["result"] = "not_in_span";
		j["residual_terms"] = n.residual_terms;
		j["residual"] = format_expr(n.residual, d.target.vars);
	}
	return j;
}

} // namespace detail

inline int cmd_normalize(const std::string &expr, const RunConfig &cfg, std::ostream &out)
{
	RawExpr e = detail::parse_sorted(expr);
	MPoly p = normalize(e);
	if (cfg.format == "json")
		out << nlohmann::json{{"normal_form", format_expr(p, e.vars)}, {"vars", e.vars.names()}, {"terms", p.size()}}
		           .dump(2)
		    << "\n";
	else
		out << format_expr(p, e.vars) << "\n";
	return ok;
}

inline int cmd_equal(const std::string &lhs, const std::string &rhs, const RunConfig &cfg, std::ostream &out)
{
	// Each side alone first, so parse errors point into the right argument.
	parse_expr(lhs);
	parse_expr(rhs);
	RawExpr joint = detail::parse_sorted("(" + lhs + ") - (" + rhs + ")");
	MPoly diff = normalize(joint);
	bool equal = diff.is_zero();
	if (cfg.format == "json")
		out << nlohmann::json{{"equal", equal}, {"difference", format_expr(diff, joint.vars)}}.dump(2) << "\n";
	else
		out << (equal ? "equal" : "not equal: difference " + format_expr(diff, joint.vars)) << "\n";
	return equal ? ok : negative;
}

inline int cmd_derive(const std::string &target, const std::vector<std::string> &axioms, const RunConfig &cfg,
                      std::ostream &out, std::ostream &err)
{
	int K = detail::capped_k(cfg.K, err);
	SearchBounds bounds{K, cfg.jobs, cfg.ideal};
	Identity t = detail::identity_arg(target);
	std::vector<Axiom> ax;
	for (const auto &a : axioms)
		for (auto &prepared : prepare_axioms(a, detail::identity_arg(a)))
			ax.push_back(std::move(prepared));
	Derivation d = derive(t, std::move(ax), bounds);
	nlohmann::json j = detail::derivation_json(d, K);
	if (cfg.format == "json")
		out << j.dump(2) << "\n";
	else if (std::holds_alternative<Certificate>(d.result))
	{
		out << "certificate: " << j["certificate"].size() << " rows, replay residual "
		    << j["replay_residual_terms"].get<std::size_t>() << " terms\n";
		out << j["certificate"].dump(2) << "\n";
	}
	else
		out << "not in span within bounds (K=" << K << ", " << d.instance_count << " instances): residual has "
		    << j["residual_terms"].get<std::size_t>() << " monomials\n"
		    << j["residual"].get<std::string>() << "\n";
	return std::holds_alternative<Certificate>(d.result) ? ok : negative;
}

inline int cmd_polarize(const std::string &arg, const RunConfig &cfg, std::ostream &out)
{
	Identity p = polarize(compact(detail::identity_arg(arg)));
	if (cfg.format == "json")
		out << nlohmann::json{{"vars", p.vars.names()}, {"polynomial", format_expr(p.poly, p.vars)}}.dump(2) << "\n";
	else
		out << with_vars_header(format_expr(p.poly, p.vars), p.vars) << "\n";
	return ok;
}

inline int cmd_verify_paper(const std::vector<std::string> &algebra_files, const RunConfig &cfg,
                            std::ostream &out, std::ostream &err)
{
	int K = detail::capped_k(cfg.K, err);
	SearchBounds bounds{K, cfg.jobs, cfg.ideal};
	std::vector<std::pair<std::string, AlgebraSpec>> algebras;
	if (algebra_files.empty())
		algebras = {{"cross3", cross3_algebra()}, {"m7", m7_algebra()}};
	for (const auto &f : algebra_files)
		algebras.emplace_back(f, load_algebra(detail::read_json_file(f)));
	Report r = verify_paper(bounds, algebras);
	int passed = static_cast<int>(std::count_if(r.steps.begin(), r.steps.end(), [](auto &s) { return s.passed; }));
	if (cfg.format == "json")
	{
		nlohmann::json steps = nlohmann::json::array();
		for (const auto &s : r.steps)
		{
			nlohmann::json js{{"step", s.number}, {"title", s.title}, {"passed", s.passed}, {"detail", s.detail}};
			js["derivations"] = nlohmann::json::object();
			for (const auto &[name, d] : s.derivations)
				js["derivations"][name] = detail::derivation_json(d, K);
			steps.push_back(std::move(js));
		}
		out << nlohmann::json{{"steps", steps}, {"passed", passed}, {"total", 9}}.dump(2) << "\n";
	}
	else
	{
		for (const auto &s : r.steps)
		{
			out << (s.passed ? "[PASS] " : "[FAIL] ") << s.number << ". " << s.title;
			for (const auto &[name, d] : s.derivations)
				if (auto *c = std::get_if<Certificate>(&d.result))
					out << " {" << name << ": " << c->rows.size() << " rows}";
			if (!s.detail.empty())
				out << " -- " << s.detail;
			out << "\n";
		}
		out << passed << "/9 steps passed\n";
	}
	return r.passed() ? ok : negative;
}

inline int cmd_check(const std::string &path, const std::string &identity, const RunConfig &cfg,
                     std::ostream &out)
{
	AlgebraSpec spec = load_algebra(detail::read_json_file(path));
	Identity id = detail::identity_arg(identity);
	ConcreteVerdict v = check_identity_concrete(spec, id, cfg.jobs);
	if (auto *h = std::get_if<Holds>(&v))
	{
		if (cfg.format == "json")
			out << nlohmann::json{{"verdict", "holds"}, {"tuples_checked", h->tuples_checked}}.dump(2) << "\n";
		else
			out << "Holds (" << h->tuples_checked << " basis tuples)\n";
		return ok;
	}
	const auto &c = std::get<Counterexample>(v);
	nlohmann::json tuple = nlohmann::json::object();
	std::string text;
	for (int k = 0; k < c.vars.size(); ++k)
	{
		tuple[c.vars.name(k)] = spec.basis()[c.tuple[k]];
		text += (k ? ", " : "") + c.vars.name(k) + "=" + spec.basis()[c.tuple[k]];
	}
	std::string residual = detail::element_text(c.residual, spec);
	if (cfg.format == "json")
		out << nlohmann::json{{"verdict", "counterexample"}, {"tuple", tuple}, {"residual", residual}}.dump(2) << "\n";
	else
		out << "Counterexample: " << text << " gives " << residual << "\n";
	return negative;
}

inline int cmd_twist(const std::string &path, const std::string &output, std::ostream &out)
{
	AlgebraSpec twisted = yau_twist(load_algebra(detail::read_json_file(path)));
	twisted.require_multiplicative = true;
	std::string text = algebra_to_json(twisted).dump(2) + "\n";
	if (output.empty())
		out << text;
	else
	{
		std::ofstream f(output);
		if (!f)
			throw AlgebraError("cannot write '" + output + "'");
		f << text;
	}
	return ok;
}

// Seeded property corpus: normalization idempotence, format/parse round trip
// and agreement of raw and normal-form evaluation.
inline int cmd_selfcheck(const RunConfig &cfg, std::ostream &out)
{
	RandomSource rs(cfg.seed);
	int failures = 0;
	for (int i = 0; i < cfg.cases; ++i)
	{
		RawExpr e = random_raw_expr(rs);
		MPoly p = normalize(e);
		std::string text = format_expr(p, e.vars);
		MPoly again = normalize(parse_expr(text, e.vars));
		AlgebraSpec spec = random_multiplicative_algebra(rs);
		std::vector<Element> values;
		for (int v = 0; v < e.vars.size(); ++v)
			values.push_back(random_element(rs, spec.dim()));
		bool agree = evaluate(spec, e.terms, values) == evaluate(spec, p, values);
		if (again != p || !agree)
		{
			++failures;
			out << "case " << i << ": " << format_expr(e) << (again != p ? " (round trip)" : "")
			    << (agree ? "" : " (evaluation)") << "\n";
		}
	}
	out << cfg.cases - failures << "/" << cfg.cases << " cases passed (seed " << cfg.seed << ")\n";
	return failures ? negative : ok;
}

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
	CLI::App app{"homcheck: identities in anticommutative Hom-algebras"};
	app.require_subcommand(1);
	app.fallthrough();
	RunConfig cfg;
	app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
	app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
	app.add_option("--seed", cfg.seed, "Seed for randomized corpora");

	std::string expr, expr2, target, path, identity, output;
	std::vector<std::string> axioms, algebras;

	auto *normalize_cmd = app.add_subcommand("normalize", "Print the canonical form of an expression");
	normalize_cmd->add_option("expr", expr)->required();

	auto *equal_cmd = app.add_subcommand("equal", "Compare two expressions after normalization");
	equal_cmd->add_option("lhs", expr)->required();
	equal_cmd->add_option("rhs", expr2)->required();

	auto *derive_cmd = app.add_subcommand("derive", "Search for a certificate that the target follows");
	derive_cmd->add_option("--target", target, "Catalog name or expression")->required();
	derive_cmd->add_option("--axiom", axioms, "Catalog name or expression")->required();
	derive_cmd->add_option("--K", cfg.K, "Maximum alpha power in substitutions")->check(CLI::NonNegativeNumber);
	derive_cmd->add_flag("--ideal", cfg.ideal, "Also multiply instances by monomials");

	auto *polarize_cmd = app.add_subcommand("polarize", "Print the full polarization of an identity");
	polarize_cmd->add_option("identity", expr)->required();

	auto *verify_cmd = app.add_subcommand("verify-paper", "Replay the Hom-Malcev equivalence step by step");
	verify_cmd->add_option("--K", cfg.K, "Maximum alpha power in substitutions")->check(CLI::NonNegativeNumber);
	verify_cmd->add_option("--algebra", algebras, "Algebra files for the alpha = Id step");

	auto *check_cmd = app.add_subcommand("check", "Check an identity on all basis tuples of an algebra");
	check_cmd->add_option("algebra", path)->required();
	check_cmd->add_option("identity", identity)->required();

	auto *twist_cmd = app.add_subcommand("twist", "Emit the twisted algebra (A, alpha.mu, alpha)");
	twist_cmd->add_option("algebra", path)->required();
	twist_cmd->add_option("-o,--output", output);

	auto *self_cmd = app.add_subcommand("selfcheck", "Run the seeded property corpus");
	self_cmd->add_option("--cases", cfg.cases)->check(CLI::PositiveNumber);

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp &e)
	{
		app.exit(e, out, err);
		return ok;
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e, out, err);
		return usage;
	}

	try
	{
		if (*normalize_cmd)
			return cmd_normalize(expr, cfg, out);
		if (*equal_cmd)
			return cmd_equal(expr, expr2, cfg, out);
		if (*derive_cmd)
			return cmd_derive(target, axioms, cfg, out, err);
		if (*polarize_cmd)
			return cmd_polarize(expr, cfg, out);
		if (*verify_cmd)
			return cmd_verify_paper(algebras, cfg, out, err);
		if (*check_cmd)
			return cmd_check(path, identity, cfg, out);
		if (*twist_cmd)
			return cmd_twist(path, output, out);
		if (*self_cmd)
			return cmd_selfcheck(cfg, out);
	}
	catch (const AlgebraError &e)
	{
		err << "error: " << e.what() << "\n";
		return bad_input;
	}
	catch (const ParseError &e)
	{
		err << "parse error: " << e.what() << "\n";
		return usage;
	}
	catch (const std::exception &e)
	{
		err << "error: " << e.what() << "\n";
		return usage;
	}
	return usage;
}

} // namespace homcheck::cli
