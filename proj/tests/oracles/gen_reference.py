"""Regenerates the frozen reference values used by the C++ unit tests.

Runs with mpmath at 50 significant digits, independent of the library code.
Usage: python3 tests/oracles/gen_reference.py > tests/reference_values.hpp
"""
from mpmath import mp, mpf, erfc, sqrt, exp, log, pi, lambertw

mp.dps = 50


def survival(x):
    return erfc(mpf(x) / sqrt(2)) / 2


def pdf(x):
    return exp(-mpf(x) ** 2 / 2) / sqrt(2 * pi)


def upper_quantile(log_p):
    guess = sqrt(max(mpf(0.1), -2 * log_p))
    return mp.findroot(lambda x: log(survival(x)) - log_p, guess)


def value_or_zero(q):
    # Below the double range the log field is authoritative.
    return mp.nstr(q, 20) if q > mpf("1e-300") else "0.0"


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-5, max_fixed=5)


out = []
out.append("// Generated by tests/oracles/gen_reference.py (mpmath, 50 digits). Do not edit.")
out.append("#pragma once\n")
out.append("namespace normmax::reference {\n")
out.append("struct SurvivalPoint {\n  double x;\n  double value;\n  double log_value;\n};\n")
out.append("inline constexpr SurvivalPoint kSurvival[] = {")
x = mpf(-40)
while x <= 40:
    q = survival(x)
    out.append(f"    {{{fmt(x)}, {value_or_zero(q)}, {fmt(log(q))}}},")
    x += mpf("2.5")
for xv in ["0.1", "0.5", "1", "1.5", "3", "4.5", "5.5", "7", "9", "37.5", "38.5", "39.9"]:
    q = survival(mpf(xv))
    out.append(f"    {{{xv}, {value_or_zero(q)}, {fmt(log(q))}}},")
out.append("};\n")

out.append("struct MillsPoint {\n  double x;\n  double mills;\n};\n")
out.append("inline constexpr MillsPoint kMills[] = {")
for xv in ["0", "0.25", "1", "2", "3.9", "4.1", "6", "10", "20", "40"]:
    xm = mpf(xv)
    out.append(f"    {{{xv}, {mp.nstr(survival(xm) / pdf(xm), 20)}}},")
out.append("};\n")

out.append("struct LambertPoint {\n  double t;\n  double w;\n};\n")
out.append("inline constexpr LambertPoint kLambert[] = {")
for tv in ["1e-6", "0.5", "1", "10", "1e6", "1e100", "1e300"]:
    out.append(f"    {{{tv}, {mp.nstr(lambertw(mpf(float(tv))).real, 20)}}},")
out.append("};\n")

out.append("// Exact b_n = Q^{-1}(1/n) and Hall's b*_n = sqrt(W(n^2/2pi)) at n = 10^k.")
out.append("struct NormingPoint {\n  int k;\n  double exact_b;\n  double hall_b_star;\n};\n")
out.append("inline constexpr NormingPoint kNorming[] = {")
for k in [1, 2, 3, 5, 10, 30, 60, 100]:
    n = mpf(10) ** k
    b = upper_quantile(-log(n))
    bs = sqrt(lambertw(n * n / (2 * pi)).real)
    out.append(f"    {{{k}, {mp.nstr(b, 20)}, {mp.nstr(bs, 20)}}},")
out.append("};\n")

b3 = upper_quantile(log(mpf(1) / 3))
out.append(f"inline constexpr double kExactB3 = {mp.nstr(b3, 20)};")
out.append(f"inline constexpr double kKConstant3 = {mp.nstr(b3 ** 2 / log(3), 20)};")
out.append("\n}  // namespace normmax::reference")
print("\n".join(out))
