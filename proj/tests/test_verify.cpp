#include "homcheck/verify.hpp"

#include <gtest/gtest.h>

using namespace homcheck;

TEST(VerifyPaper, AllNineStepsPass)
{
	Report r = verify_paper(SearchBounds{});
	ASSERT_EQ(r.steps.size(), 9u);
	for (const auto &s : r.steps)
		EXPECT_TRUE(s.passed) << s.number << ". " << s.title << ": " << s.detail;
	EXPECT_TRUE(r.passed());
	for (std::size_t i = 0; i < r.steps.size(); ++i)
		EXPECT_EQ(r.steps[i].number, static_cast<int>(i + 1));
}

TEST(VerifyPaper, CertificatesReplayExactly)
{
	Report r = verify_paper(SearchBounds{});
	int certificates = 0;
	for (const auto &s : r.steps)
		for (const auto &[name, d] : s.derivations)
		{
			auto *c = std::get_if<Certificate>(&d.result);
			ASSERT_NE(c, nullptr) << name;
			EXPECT_EQ(replay(*c, d.axioms), d.target.poly) << name;
			EXPECT_LE(c->rows.size(), 64u) << name;
			++certificates;
		}
	EXPECT_GE(certificates, 7);
}

TEST(VerifyPaper, LowBoundStillPasses)
{
	SearchBounds b;
	b.max_alpha_power = 0;
	EXPECT_TRUE(verify_paper(b).passed());
}

TEST(VerifyPaper, IdentityTwistStepUsesOnlyUntwistedAlgebras)
{
	AlgebraSpec rot = cross3_algebra();
	rot.set_twist({{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, 1}});
	Report r = verify_paper(SearchBounds{}, {{"cross3", cross3_algebra()}, {"rot", rot}});
	EXPECT_TRUE(r.passed());
	EXPECT_NE(r.steps.back().detail.find("plus 1 algebra"), std::string::npos);
}
