"""Taylor coefficients about t = 0 for integrands that cancel catastrophically
near the origin. Prints C++ arrays consumed by core/src/binet.cpp and
core/src/glaisher.cpp.

    python3 tools/derive/series_coefficients.py
"""
import sympy as sp

t = sp.symbols("t")
TERMS = 18

FUNCTIONS = {
    # (1/(e^t - 1) - 1/t + 1/2) / t
    "binet_first_bracket": (1 / (sp.exp(t) - 1) - 1 / t + sp.Rational(1, 2)) / t,
    # 1/(e^t - 1) - 1/t
    "poisson_exp_bracket": 1 / (sp.exp(t) - 1) - 1 / t,
    # (1 - e^{-t/2}) (t coth(t/2) - 2) / t^3
    "coth_integrand": (1 - sp.exp(-t / 2)) * (t * sp.cosh(t / 2) / sp.sinh(t / 2) - 2) / t**3,
    # e^{-t} [(8 - 3t) e^t - 8 e^{t/2} - t] / (t^2 (e^t - 1))
    "exp_bracket_integrand": ((8 - 3 * t) - 8 * sp.exp(-t / 2) - t * sp.exp(-t)) / (t**2 * (sp.exp(t) - 1)),
    # [e^{-t}/8 - 1/((1+t)^{3/2} log^2(1+t)) - (log(1+t) - 2)/(2 (1+t) log^2(1+t))] / t
    "log_bracket_integrand": (
        sp.exp(-t) / 8
        - 1 / ((1 + t) ** sp.Rational(3, 2) * sp.log(1 + t) ** 2)
        - (sp.log(1 + t) - 2) / (2 * (1 + t) * sp.log(1 + t) ** 2)
    ) / t,
}


def main():
    for name, f in FUNCTIONS.items():
        s = sp.series(f, t, 0, TERMS).removeO()
        coeffs = [sp.nsimplify(s.coeff(t, i)) for i in range(TERMS)]
        body = ",\n    ".join(f"{float(c):.17e}" for c in coeffs)
        print(f"// {name}: coefficients of t^0 .. t^{TERMS - 1}")
        print(f"constexpr std::array<double, {TERMS}> {name}_series = {{\n    {body},\n}};\n")


if __name__ == "__main__":
    main()
