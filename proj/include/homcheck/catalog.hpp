#pragma once

// Named identities, each stored as LHS − RHS in the orientation in which it
// is usually displayed.

#include "identity.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homcheck {

struct CatalogEntry
{
	std::string_view name;
	std::string_view source;
	std::string_view description;
};

// clang-format off
inline constexpr std::array catalog_entries{
	CatalogEntry{"malcev",
		"vars x,y,z; (x*y)*(x*z) + (y*(x*z))*x + ((x*z)*x)*y - ((x*y)*z + (y*z)*x + (z*x)*y)*x",
		"Malcev identity J(x,y,xz) = J(x,y,z)x with the untwisted Jacobian"},
	CatalogEntry{"hom_malcev",
		"vars x,y,z; J(a(x),a(y),x*z) - J(x,y,z)*a2(x)",
		"Hom-Malcev identity J(a(x),a(y),xz) = J(x,y,z)a2(x)"},
	CatalogEntry{"hom_jacobi",
		"vars x,y,z; J(x,y,z)",
		"Hom-Jacobi identity J(x,y,z) = 0"},
	CatalogEntry{"identity_1_2",
		"vars w,x,y,z; J(w*x,a(y),a(z)) - (J(w,y,z)*a2(x) + a2(w)*J(x,y,z) - 2*J(y*z,a(w),a(x)))",
		"J(wx,a(y),a(z)) = J(w,y,z)a2(x) + a2(w)J(x,y,z) - 2J(yz,a(w),a(x))"},
	CatalogEntry{"lemma_2_4_ii",
		"vars w,x,y,z; a2(w)*J(x,y,z) - a2(x)*J(y,z,w) + a2(y)*J(z,w,x) - a2(z)*J(w,x,y)"
		" - (J(w*x,a(y),a(z)) + J(y*z,a(w),a(x)) + J(w*y,a(z),a(x))"
		" + J(z*x,a(w),a(y)) - J(z*w,a(x),a(y)) - J(x*y,a(z),a(w)))",
		"alternating sum of a2(.)J(...) against six J(uv,a(.),a(.)) terms; holds in every anticommutative Hom-algebra"},
	CatalogEntry{"g_def",
		"vars w,x,y,z; G(w,x,y,z) - (J(w*x,a(y),a(z)) - a2(x)*J(w,y,z) - J(x,y,z)*a2(w))",
		"definition of G (vanishes identically after expansion)"},
	CatalogEntry{"lemma_2_5_a",
		"vars x,y,z; G(y,x,y,z)",
		"G(y,x,y,z) = 0"},
	CatalogEntry{"lemma_2_5_b",
		"vars w,y,z; G(w,y,y,z)",
		"G(w,y,y,z) = 0"},
	CatalogEntry{"eq_2_2",
		"vars w,x,y,z; J(w*x,a(y),a(z)) + J(x*y,a(z),a(w)) + J(y*z,a(w),a(x)) + J(z*w,a(x),a(y))",
		"cyclic sum of J(uv,a(.),a(.)) vanishes"},
	CatalogEntry{"eq_2_3",
		"vars w,x,y,z; 2*G(w,x,y,z) - a2(w)*J(x,y,z) + a2(x)*J(w,y,z) - a2(y)*J(z,w,x) + a2(z)*J(w,x,y)"
		" - (J(w*x,a(y),a(z)) + J(y*z,a(w),a(x)))",
		"2G(w,x,y,z) - a2(w)J(x,y,z) + a2(x)J(w,y,z) - a2(y)J(z,w,x) + a2(z)J(w,x,y) = J(wx,a(y),a(z)) + J(yz,a(w),a(x))"},
	CatalogEntry{"eq_2_4",
		"vars w,x,y,z; G(w,x,y,z) - 2*(J(w*x,a(y),a(z)) + J(y*z,a(w),a(x)))",
		"G(w,x,y,z) = 2[J(wx,a(y),a(z)) + J(yz,a(w),a(x))]"},
	CatalogEntry{"eq_2_5",
		"vars w,x,y,z; a2(w)*J(x,y,z) - a2(x)*J(y,z,w) + a2(y)*J(z,w,x) - a2(z)*J(w,x,y)"
		" - 3*(J(w*x,a(y),a(z)) + J(y*z,a(w),a(x)))",
		"alternating a2(.)J(...) sum = 3[J(wx,a(y),a(z)) + J(yz,a(w),a(x))]"},
	CatalogEntry{"eq_2_6",
		"vars w,x,y,z; J(w*x,a(y),a(z)) - (a2(x)*J(w,y,z) + J(x,y,z)*a2(w) + G(w,x,y,z))",
		"definition of G solved for J(wx,a(y),a(z)) (vanishes identically)"},
	CatalogEntry{"eq_2_7",
		"vars x,y,z; J(y*x,a(y),a(z)) - (a2(y)*J(y,z,x) - 2*J(a(y),a(x),y*z))",
		"identity_1_2 at w = y"},
	CatalogEntry{"eq_2_8",
		"vars x,y,z; 4*J(a(y),a(z),y*x) - (-2*a2(y)*J(y,z,x) - 2*J(y*z,a(y),a(x)))",
		"eq_2_7 with x and z exchanged, rearranged"},
};
// clang-format on

inline const CatalogEntry *find_catalog_entry(std::string_view name)
{
	for (const auto &e : catalog_entries)
		if (e.name == name)
			return &e;
	return nullptr;
}

inline std::vector<std::string> catalog_names()
{
	std::vector<std::string> out;
	for (const auto &e : catalog_entries)
		out.emplace_back(e.name);
	return out;
}

inline Identity catalog(std::string_view name)
{
	const CatalogEntry *e = find_catalog_entry(name);
	if (!e)
		throw std::invalid_argument("unknown catalog identity '" + std::string(name) + "'");
	return make_identity(e->source);
}

// The α = Id specialization of an identity.
inline Identity untwisted(const Identity &id) { return Identity{strip_twist(id.poly), id.vars}; }

} // namespace homcheck
