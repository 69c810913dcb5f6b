#include <doctest.h>

#include "gcdmat/divisibility.hpp"
#include "gcdmat/divisibility_checks.hpp"
#include "test_corpus.hpp"

using namespace gcdmat;
using test::set_of;

namespace {

ExactMatrix mat2(long a, long b, long c, long d) {
  ExactMatrix m(2, 2);
  m << Rational(a), Rational(b), Rational(c), Rational(d);
  return m;
}

}  // namespace

TEST_CASE("right quotient on hand fixtures") {
  const GcdSet s = set_of({1, 2});
  const ExactMatrix ga = build_gcd_matrix(s, ArithmeticFn::power(1));
  const ExactMatrix gb = build_gcd_matrix(s, ArithmeticFn::power(2));
  CHECK(quotient(gb, ga) == mat2(1, 0, -2, 3));
  CHECK(quotient(ga, ga) == ExactMatrix::Identity(2, 2));
  CHECK(quotient(build_lcm_matrix(s, 2), build_lcm_matrix(s, 1)) == mat2(3, -1, 0, 2));
  CHECK(quotient(build_lcm_matrix(s, 2), ga) == mat2(-2, 3, 4, 0));
  CHECK_THROWS_AS(quotient(gb, mat2(1, 2, 2, 4)), SingularMatrixError);
  CHECK_THROWS_AS(quotient(gb, ExactMatrix::Identity(3, 3)), DimensionMismatchError);
}

TEST_CASE("quotient times divisor reproduces the dividend") {
  for (const GcdSet& s : test::fixture_corpus()) {
    const ExactMatrix ma = build_gcd_matrix(s, ArithmeticFn::power(1));
    const ExactMatrix mb = build_lcm_matrix(s, 2);
    CHECK(quotient(mb, ma) * ma == mb);
  }
}

TEST_CASE("divides: integral verdicts") {
  const DivisibilityReport r = divides(set_of({1, 2}), 1, 2, PairKind::kGcdGcd);
  CHECK(r.status == ReportStatus::kDecided);
  CHECK(r.integral);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.quotient == mat2(1, 0, -2, 3));

  const DivisibilityReport rl = divides(set_of({1, 2}), 1, 2, PairKind::kGcdLcm);
  CHECK(rl.integral);
  CHECK(rl.quotient == mat2(-2, 3, 4, 0));

  const DivisibilityReport id = divides(set_of({1}), 7, 7, PairKind::kLcmLcm);
  CHECK(id.integral);
  CHECK(id.quotient(0, 0) == Rational(1));
}

TEST_CASE("divides: the non-dividing exponent pair fails with a witness") {
  const DivisibilityReport r = divides(set_of({1, 2}), 2, 3, PairKind::kGcdGcd);
  CHECK(r.status == ReportStatus::kDecided);
  CHECK_FALSE(r.integral);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->row == 2);
  CHECK(r.witness->col == 1);
  CHECK(r.witness->value == Rational(Int(-4), Int(3)));
}

TEST_CASE("left quotient is the transpose of the right quotient") {
  for (const GcdSet& s : test::fixture_corpus()) {
    const ExactMatrix ma = build_gcd_matrix(s, ArithmeticFn::power(1));
    const ExactMatrix mb = build_lcm_matrix(s, 2);
    const ExactMatrix right = quotient(mb, ma);
    const ExactMatrix left = inverse_oracle(ma) * mb;
    CHECK(left == ExactMatrix(right.transpose()));
  }
}

TEST_CASE("kernel values on hand fixtures") {
  const GcdSet s6 = set_of({1, 2, 3, 6});
  const std::size_t i6 = s6.require_index(Int(6));
  const std::size_t i2 = s6.require_index(Int(2));
  CHECK(kernel_gcd(s6, 1, 2, i2, i6) == Rational(0));
  CHECK(kernel_gcd(s6, 1, 2, i6, i6) == Rational(12));
  CHECK(kernel_lcm(s6, 1, 2, i2, i6) == Rational(0));
  CHECK(kernel_lcm(s6, 1, 2, 0, 0) == Rational(1));
  CHECK(kernel_lcm_scaled(s6, 1, 2, i6, i6, 0) == Rational(36));

  const GcdSet d30 = test::divisor_set(30);
  const std::size_t i30 = d30.require_index(Int(30));
  CHECK(kernel_gcd(d30, 1, 2, i30, i30) == Rational(72));
  CHECK(kernel_lcm(d30, 1, 2, 0, i30) == Rational(72));
  const std::size_t i5 = d30.require_index(Int(5));
  CHECK(kernel_lcm_scaled(d30, 1, 2, i30, i30, i5) == Rational(180));

  const GcdSet one = set_of({1});
  CHECK(kernel_lcm_scaled(one, 1, 1, 0, 0, 0) == Rational(1));

  CHECK_THROWS_AS(kernel_lcm_scaled(d30, 1, 2, 0, i5, i30), NotADivisorError);
}

TEST_CASE("kernel route reproduces the oracle quotient") {
  for (const GcdSet& s : test::fixture_corpus()) {
    if (!is_gcd_closed(s) || max_gtd(s) > 3) continue;
    for (const auto& [a, b] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 1}, {1, 2}, {1, 3}, {2, 4}}) {
      const ExactMatrix ga = build_gcd_matrix(s, ArithmeticFn::power(a));
      CHECK(quotient_via_kernels(s, a, b, PairKind::kGcdGcd) ==
            quotient(build_gcd_matrix(s, ArithmeticFn::power(b)), ga));
      CHECK(quotient_via_kernels(s, a, b, PairKind::kGcdLcm) ==
            quotient(build_lcm_matrix(s, b), ga));
      CHECK(quotient_via_kernels(s, a, b, PairKind::kLcmLcm) ==
            quotient(build_lcm_matrix(s, b), build_lcm_matrix(s, a)));
    }
  }
}

TEST_CASE("kernels are integers under the divisibility hypotheses") {
  for (const GcdSet& s : {test::divisor_set(30), test::cube_sixty(), test::divisor_set(60)}) {
    REQUIRE(condition_g(s).holds);
    const CTable c(s);
    for (const auto& [a, b] :
         std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 4}}) {
      const AlphaTable alpha(s, ArithmeticFn::power(a));
      const AlphaTable alpha_inv(s, ArithmeticFn::inverse_power(a));
      for (std::size_t m = 0; m < s.size(); ++m) {
        if (greatest_type_divisors(s, s[m]).size() != 3) continue;
        for (std::size_t l = 0; l < s.size(); ++l) {
          CHECK(kernel_gcd(s, b, l, m, c, alpha).is_integer());
          CHECK(kernel_lcm(s, b, l, m, c, alpha).is_integer());
          for (std::size_t t = 0; t < s.size(); ++t) {
            if (s[m] % s[t] != 0) continue;
            CHECK(kernel_lcm_scaled(s, a, b, l, m, t, c, alpha_inv).is_integer());
          }
        }
      }
    }
  }
}

TEST_CASE("alternating sums and their quotients on divisors(30)") {
  const GcdSet d30 = test::divisor_set(30);
  const std::size_t m = d30.require_index(Int(30));
  CHECK(triple_gtd_alternating_sum(d30, m, 1) == 8);
  CHECK(triple_gtd_alternating_sum(d30, m, 2) == 576);
  CHECK(triple_gtd_alternating_sum(d30, m, 2) / triple_gtd_alternating_sum(d30, m, 1) == 72);
  CHECK(triple_gtd_alternating_sum_inverse(d30, m, 1) == Rational(Int(-4), Int(15)));
  // degree (b - a) sum over x_t^a times the inverse sum, at x_t = 1
  const Rational part2 =
      Rational(triple_gtd_alternating_sum(d30, m, 1)) / triple_gtd_alternating_sum_inverse(d30, m, 1);
  CHECK(part2 == Rational(-30));
}

TEST_CASE("single-gtd divisibility checks hold") {
  CHECK(check_single_gtd_divisibility(set_of({1, 2, 4}), 1, 2).empty());
  CHECK(check_single_gtd_divisibility(set_of({1, 2, 3, 6}), 1, 3).empty());
  CHECK(check_single_gtd_divisibility(set_of({1, 2}), 2, 4).empty());
  CHECK_THROWS_AS(check_single_gtd_divisibility(set_of({1, 2}), 2, 3), NotDividingError);
  CHECK_THROWS_AS(check_single_gtd_divisibility(set_of({2, 3}), 1, 2), NotGcdClosedError);
}

TEST_CASE("double-gtd divisibility checks hold") {
  CHECK(check_double_gtd_divisibility(set_of({1, 2, 3, 6}), 1, 2).violations.empty());
  CHECK(check_double_gtd_divisibility(set_of({1, 2, 4}), 1, 2).violations.empty());
  CHECK(check_double_gtd_divisibility(set_of({1, 2, 3, 6, 12}), 1, 3).violations.empty());
}

TEST_CASE("double-gtd check skips intervals containing condition violators") {
  // at x = 12, z = 2 the interval {2,12} contains 12 itself, whose gtd
  // pair breaks the condition; the conclusion genuinely fails there, so
  // the hypothesis must reject it
  const DoubleGtdScan scan = check_double_gtd_divisibility(test::violating_twelve(), 1, 2);
  CHECK(scan.violations.empty());
  CHECK_FALSE(scan.skipped.empty());
}

TEST_CASE("triple-gtd divisibility checks hold") {
  for (const GcdSet& s : {test::divisor_set(30), test::cube_sixty(), test::divisor_set(60)}) {
    for (const auto& [a, b] :
         std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {2, 4}, {2, 6}})
      CHECK(check_triple_gtd_divisibility(s, a, b).empty());
  }
  CHECK(check_triple_gtd_divisibility(set_of({1, 2, 4}), 1, 2).empty());  // vacuous
  CHECK_THROWS_AS(check_triple_gtd_divisibility(test::violating_twelve(), 1, 2),
                  ConditionGViolatedError);
}

TEST_CASE("hypothesis-gated validation bundles") {
  const DivisibilityValidation ok = validate_divisibility(test::divisor_set(30), 1, 2);
  CHECK(ok.hypotheses_met);
  CHECK(ok.max_gtd == 3);
  for (const DivisibilityReport& r : ok.reports) {
    CHECK(r.status == ReportStatus::kDecided);
    CHECK(r.integral);
  }

  const DivisibilityValidation bad_structure = validate_divisibility(test::violating_twelve(), 1, 2);
  CHECK_FALSE(bad_structure.hypotheses_met);
  CHECK_FALSE(bad_structure.condition_g);

  const DivisibilityValidation bad_powers = validate_divisibility(set_of({1, 2}), 2, 3);
  CHECK_FALSE(bad_powers.hypotheses_met);
  CHECK_FALSE(bad_powers.reports[0].integral);  // gcd-gcd witness above
}

TEST_CASE("divisibility holds across hypothesis-satisfying strata") {
  for (const GcdSet& s : test::fixture_corpus()) {
    const StructureProfile p = analyze(s);
    if (!p.gcd_closed || !p.condition_g || p.max_gtd > 3) continue;
    for (const auto& [a, b] :
         std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 4}, {3, 6}}) {
      for (PairKind kind : {PairKind::kGcdGcd, PairKind::kGcdLcm, PairKind::kLcmLcm}) {
        const DivisibilityReport r = divides(s, a, b, kind);
        CHECK(r.status == ReportStatus::kDecided);
        CHECK(r.integral);
      }
    }
  }
}
