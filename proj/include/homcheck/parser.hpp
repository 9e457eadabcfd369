#pragma once

// Text form of identities:
//
//   input   := ['vars' ident (',' ident)* ';'] expr
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := [rat '*'] factor ('*' factor)* | '0'
//   factor  := ident | 'a(' expr ')' | 'a2(' expr ')'
//            | 'J(' expr ',' expr ',' expr ')'
//            | 'G(' expr ',' expr ',' expr ',' expr ')'
//            | '(' expr ')' | '-' factor
//   rat     := integer ['/' positive-integer]
//
// '*' is the algebra product and associates to the left. Identifiers match
// [a-z][a-z0-9_#]* and may not be a, a2 or vars.

#include "term.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homcheck {

class ParseError : public std::runtime_error
{
  public:
	ParseError(int line, int column, const std::string &what)
	    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
	      column_(column)
	{
	}
	int line() const { return line_; }
	int column() const { return column_; }

  private:
	int line_, column_;
};

namespace detail {

class Parser
{
  public:
	Parser(std::string_view text, VarTable vars) : text_(text), vars_(std::move(vars)) {}

	RawExpr run()
	{
		skip_ws();
		if (peek_word() == "vars")
		{
			advance(4);
			do
			{
				skip_ws();
				auto [line, col] = position();
				std::string name = ident();
				if (vars_.find(name) >= 0)
					throw ParseError(line, col, "variable '" + name + "' declared twice");
				vars_.intern(name);
				skip_ws();
			} while (accept(','));
			expect(';');
		}
		RawTerms terms = expr();
		skip_ws();
		if (pos_ != text_.size())
			fail(std::string("unexpected '") + text_[pos_] + "'");
		return RawExpr{std::move(vars_), std::move(terms)};
	}

  private:
	std::string_view text_;
	std::size_t pos_ = 0;
	VarTable vars_;

	std::pair<int, int> position() const
	{
		int line = 1, col = 1;
		for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
		{
			if (text_[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
		return {line, col};
	}

	[[noreturn]] void fail(const std::string &what) const
	{
		auto [line, col] = position();
		throw ParseError(line, col, what);
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	char peek()
	{
		skip_ws();
		return pos_ < text_.size() ? text_[pos_] : '\0';
	}

	void advance(std::size_t n) { pos_ += n; }

	bool accept(char c)
	{
		if (peek() == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c))
		{
			if (pos_ >= text_.size())
				fail(std::string("expected '") + c + "' but reached end of input");
			fail(std::string("expected '") + c + "' but found '" + text_[pos_] + "'");
		}
	}

	static bool word_char(char c)
	{
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
	}

	// The maximal run of identifier characters at the cursor.
	std::string_view peek_word()
	{
		skip_ws();
		std::size_t end = pos_;
		while (end < text_.size() && word_char(text_[end]))
			++end;
		return text_.substr(pos_, end - pos_);
	}

	std::string ident()
	{
		std::string_view w = peek_word();
		if (w.empty() || !(w[0] >= 'a' && w[0] <= 'z'))
			fail("expected identifier");
		for (char c : w)
			if (std::isupper(static_cast<unsigned char>(c)))
				fail("identifiers are lowercase");
		if (w == "a" || w == "a2" || w == "vars")
			fail("'" + std::string(w) + "' is reserved");
		advance(w.size());
		return std::string(w);
	}

	Integer integer()
	{
		std::string_view w = peek_word();
		for (char c : w)
			if (!std::isdigit(static_cast<unsigned char>(c)))
				fail("malformed number '" + std::string(w) + "'");
		advance(w.size());
		return Integer(std::string(w), 10);
	}

	Rational rat()
	{
		Integer num = integer();
		Integer den = 1;
		if (accept('/'))
		{
			if (!std::isdigit(static_cast<unsigned char>(peek())))
				fail("expected denominator");
			den = integer();
			if (den == 0)
				fail("zero denominator");
		}
		Rational r(num, den);
		r.canonicalize();
		return r;
	}

	RawTerms expr()
	{
		RawTerms out;
		Rational sign = 1;
		if (accept('-'))
			sign = -1;
		else
			accept('+');
		out = raw_add(std::move(out), term(), sign);
		for (;;)
		{
			if (accept('+'))
				out = raw_add(std::move(out), term());
			else if (accept('-'))
				out = raw_add(std::move(out), term(), -1);
			else
				return out;
		}
	}

	RawTerms term()
	{
		Rational coeff = 1;
		if (std::isdigit(static_cast<unsigned char>(peek())))
		{
			coeff = rat();
			if (peek() != '*')
			{
				if (coeff != 0)
					fail("a scalar must multiply a product term");
				return {};
			}
			expect('*');
		}
		RawTerms out = factor();
		while (accept('*'))
			out = raw_mul(out, factor());
		return raw_scale(out, coeff);
	}

	std::vector<RawTerms> arguments()
	{
		std::vector<RawTerms> args;
		args.push_back(expr());
		while (accept(','))
			args.push_back(expr());
		expect(')');
		return args;
	}

	RawTerms factor()
	{
		char c = peek();
		if (c == '-')
		{
			advance(1);
			return raw_scale(factor(), -1);
		}
		if (c == '(')
		{
			advance(1);
			RawTerms inner = expr();
			expect(')');
			return inner;
		}
		if (c == '\0')
			fail("unexpected end of input");
		std::string_view w = peek_word();
		if (w.empty())
			fail(std::string("unexpected '") + c + "'");
		auto [line, col] = position();
		std::size_t after = pos_ + w.size();
		bool call = after < text_.size() && text_[after] == '(';
		if (call)
		{
			std::string name(w);
			if (name != "a" && name != "a2" && name != "J" && name != "G")
				fail("unknown function '" + name + "'");
			advance(w.size() + 1);
			std::vector<RawTerms> args = arguments();
			if (name == "a" || name == "a2")
			{
				if (args.size() != 1)
					throw ParseError(line, col, name + " expects 1 argument, got " + std::to_string(args.size()));
				return raw_twist(args[0], name == "a" ? 1 : 2);
			}
			try
			{
				return expand_macros(name, args);
			}
			catch (const ArityError &e)
			{
				throw ParseError(line, col, e.what());
			}
		}
		if (std::isdigit(static_cast<unsigned char>(w[0])))
			fail("a scalar may only lead a term");
		std::string name = ident();
		return raw_single(RawTerm::leaf(vars_.intern(name)));
	}
};

} // namespace detail

// Parses DSL text. Variables not listed in `vars` (or a `vars` header) are
// registered in order of first appearance.
inline RawExpr parse_expr(std::string_view text, VarTable vars = {})
{
	return detail::Parser(text, std::move(vars)).run();
}

} // namespace homcheck
