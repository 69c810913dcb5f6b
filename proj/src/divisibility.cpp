#include "gcdmat/divisibility.hpp"

#include "gcdmat/errors.hpp"

namespace gcdmat {

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::kGcdGcd:
      return "gcd-gcd";
    case PairKind::kGcdLcm:
      return "gcd-lcm";
    case PairKind::kLcmLcm:
      return "lcm-lcm";
  }
  throw Error("unreachable");
}

PairKind parse_pair_kind(std::string_view text) {
  if (text == "gcd-gcd") return PairKind::kGcdGcd;
  if (text == "gcd-lcm") return PairKind::kGcdLcm;
  if (text == "lcm-lcm") return PairKind::kLcmLcm;
  throw ParseError("invalid pair kind: '" + std::string(text) + "'");
}

ExactMatrix quotient(const ExactMatrix& dividend, const ExactMatrix& divisor) {
  if (dividend.rows() != divisor.rows() || dividend.cols() != divisor.cols() ||
      divisor.rows() != divisor.cols())
    throw DimensionMismatchError();
  return dividend * inverse_oracle(divisor);
}

DivisibilityReport divides(const GcdSet& s, unsigned a, unsigned b, PairKind kind) {
  DivisibilityReport report{s,     a,
                            b,     kind,
                            ReportStatus::kSingularDivisor,
                            false, std::nullopt,
                            ExactMatrix()};

  const ExactMatrix divisor = (kind == PairKind::kLcmLcm)
                                  ? build_lcm_matrix(s, a)
                                  : build_gcd_matrix(s, ArithmeticFn::power(a));
  const ExactMatrix dividend = (kind == PairKind::kGcdGcd)
                                   ? build_gcd_matrix(s, ArithmeticFn::power(b))
                                   : build_lcm_matrix(s, b);
  try {
    report.quotient = quotient(dividend, divisor);
  } catch (const SingularMatrixError&) {
    report.status = ReportStatus::kSingularDivisor;
    return report;
  }
  report.status = ReportStatus::kDecided;
  const auto bad = first_non_integral(report.quotient);
  report.integral = !bad.has_value();
  if (bad) report.witness = EntryWitness{bad->first, bad->second,
                                         report.quotient(bad->first - 1, bad->second - 1)};
  return report;
}

Rational kernel_gcd(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m) {
  return kernel_gcd(s, b, l, m, CTable(s), AlphaTable(s, ArithmeticFn::power(a)));
}

Rational kernel_gcd(const GcdSet& s, unsigned b, std::size_t l, std::size_t m, const CTable& c,
                    const AlphaTable& alpha) {
  Rational sum(0);
  for (std::size_t r = 0; r <= m; ++r) {
    if (s[m] % s[r] != 0) continue;
    const std::int64_t crm = c(r, m);
    if (crm == 0) continue;
    sum += Rational(Int(crm) * pow(gcd(s[l], s[r]), b));
  }
  return sum / alpha[m];
}

Rational kernel_lcm(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m) {
  return kernel_lcm(s, b, l, m, CTable(s), AlphaTable(s, ArithmeticFn::power(a)));
}

Rational kernel_lcm(const GcdSet& s, unsigned b, std::size_t l, std::size_t m, const CTable& c,
                    const AlphaTable& alpha) {
  Rational sum(0);
  for (std::size_t r = 0; r <= m; ++r) {
    if (s[m] % s[r] != 0) continue;
    const std::int64_t crm = c(r, m);
    if (crm == 0) continue;
    sum += Rational(Int(crm) * pow(lcm(s[l], s[r]), b));
  }
  return sum / alpha[m];
}

Rational kernel_lcm_scaled(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m,
                           std::size_t sidx) {
  return kernel_lcm_scaled(s, a, b, l, m, sidx, CTable(s),
                           AlphaTable(s, ArithmeticFn::inverse_power(a)));
}

Rational kernel_lcm_scaled(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m,
                           std::size_t sidx, const CTable& c, const AlphaTable& alpha_inv) {
  if (s[m] % s[sidx] != 0)
    throw NotADivisorError("x_s = " + s[sidx].str() + " does not divide x_m = " + s[m].str());
  if (alpha_inv[m].is_zero()) throw AlphaZeroError();
  Rational sum(0);
  for (std::size_t r = 0; r <= m; ++r) {
    if (s[m] % s[r] != 0) continue;
    const std::int64_t crm = c(r, m);
    if (crm == 0) continue;
    sum += Rational(Int(crm) * pow(lcm(s[l], s[r]), b), pow(s[r], a));
  }
  return sum / (Rational(pow(s[sidx], a)) * alpha_inv[m]);
}

ExactMatrix quotient_via_kernels(const GcdSet& s, unsigned a, unsigned b, PairKind kind) {
  const CTable c(s);
  const auto n = static_cast<Eigen::Index>(s.size());
  ExactMatrix q(n, n);

  if (kind == PairKind::kLcmLcm) {
    const AlphaTable alpha_inv(s, ArithmeticFn::inverse_power(a));
    for (std::size_t m = 0; m < s.size(); ++m)
      if (alpha_inv[m].is_zero()) throw AlphaZeroError();
    for (std::size_t l = 0; l < s.size(); ++l) {
      for (std::size_t sidx = 0; sidx < s.size(); ++sidx) {
        Rational sum(0);
        for (std::size_t m = sidx; m < s.size(); ++m) {
          if (s[m] % s[sidx] != 0) continue;
          const std::int64_t csm = c(sidx, m);
          if (csm == 0) continue;
          sum += Rational(Int(csm)) * kernel_lcm_scaled(s, a, b, l, m, sidx, c, alpha_inv);
        }
        q(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(sidx)) = std::move(sum);
      }
    }
    return q;
  }

  const AlphaTable alpha(s, ArithmeticFn::power(a));
  for (std::size_t l = 0; l < s.size(); ++l) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      Rational sum(0);
      for (std::size_t m = j; m < s.size(); ++m) {
        if (s[m] % s[j] != 0) continue;
        const std::int64_t cjm = c(j, m);
        if (cjm == 0) continue;
        const Rational k = (kind == PairKind::kGcdGcd) ? kernel_gcd(s, b, l, m, c, alpha)
                                                       : kernel_lcm(s, b, l, m, c, alpha);
        sum += Rational(Int(cjm)) * k;
      }
      q(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j)) = std::move(sum);
    }
  }
  return q;
}

}  // namespace gcdmat
