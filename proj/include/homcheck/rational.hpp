#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcheck {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". The result is canonicalized (reduced, q > 0).
inline Rational parse_rational(std::string_view text)
{
	std::string s(text);
	auto bad = [&] { return std::invalid_argument("malformed rational '" + s + "'"); };
	if (s.empty())
		throw bad();
	auto slash = s.find('/');
	auto digits_ok = [](std::string_view d, bool allow_sign) {
		if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+'))
			d.remove_prefix(1);
		if (d.empty())
			return false;
		for (char c : d)
			if (c < '0' || c > '9')
				return false;
		return true;
	};
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	if (!digits_ok(num, true) || !digits_ok(den, false))
		throw bad();
	if (num[0] == '+')
		num.erase(0, 1);
	Integer n(num, 10), d(den, 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" + s + "'");
	Rational r(n, d);
	r.canonicalize();
	return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational &r)
{
	return r.get_str(10);
}

} // namespace homcheck
