"""One-dimensional fractional calculus on a segment.

Three players:

* ``rl_integral``   — the left/right fractional integral of order a in (0, 1],
  computed with a product-trapezoid rule that is exact on piecewise-linear
  integrands;
* ``rl_derivative`` — the fractional derivative of order a in (0, 1), computed
  with an L1-type rule plus an exact boundary term;
* ``rl_power_oracle`` — the closed-form action of both operators on power
  functions (t - a)^beta, used as an independent reference everywhere.

The script prints three small studies: the constant rule, the power rule, and
the derivative-of-integral composition with its empirical convergence order.
"""

import numpy as np

from bcfrac import FracScheme, Segment, rl_derivative, rl_integral, rl_power_oracle
from bcfrac.quadrature import estimate_order

SEG = Segment(0.0, 1.0)


def one(t):
    return np.ones_like(np.asarray(t, dtype=float))


print("== the constant rule ==")
print("derivative of 1 is (x-a)^(-alpha)/Gamma(1-alpha); the L1 rule gets it")
print("to machine precision because constants have no curvature:\n")
scheme = FracScheme(n=512)
print(f"{'alpha':>6} {'x':>5} {'numeric':>22} {'closed form':>22} {'rel err':>10}")
for alpha in (0.25, 0.5, 0.75):
    for x in (0.3, 0.9):
        got = complex(rl_derivative(one, SEG, alpha, x, "a-plus", scheme)).real
        want = rl_power_oracle(0.0, alpha, SEG.a, x).real
        print(f"{alpha:>6} {x:>5} {got:>22.15f} {want:>22.15f} {abs(got - want) / want:>10.1e}")

print("\n== the power rule ==")
print("f(t) = t: D^alpha f = Gamma(2)/Gamma(2-alpha) * x^(1-alpha)\n")
print(f"{'alpha':>6} {'x':>5} {'numeric':>22} {'closed form':>22} {'rel err':>10}")
for alpha in (0.25, 0.5, 0.75):
    for x in (0.5, 1.0):
        got = complex(
            rl_derivative(lambda t: np.asarray(t, float), SEG, alpha, x, "a-plus", scheme)
        ).real
        want = rl_power_oracle(1.0, alpha, SEG.a, x).real
        print(f"{alpha:>6} {x:>5} {got:>22.15f} {want:>22.15f} {abs(got - want) / want:>10.1e}")

print("\n== composition: the derivative inverts the integral ==")
print("D^alpha I^alpha f = f for smooth f; error at x=0.7, f(t)=t^2, alpha=0.5:\n")
alpha, x = 0.5, 0.7


def f(t):
    return np.asarray(t, dtype=float) ** 2


pairs = []
print(f"{'n':>6} {'sup err':>12}")
for n in (128, 256, 512, 1024):
    sch = FracScheme(n=n)

    def integral(ts, sch=sch):
        return np.asarray(
            [rl_integral(f, SEG, alpha, float(t), "a-plus", sch) for t in np.atleast_1d(ts)]
        )

    err = abs(complex(rl_derivative(integral, SEG, alpha, x, "a-plus", sch)) - x**2)
    pairs.append((1.0 / n, err))
    print(f"{n:>6} {err:>12.3e}")

print(f"\nempirical order (log-log slope): {estimate_order(pairs):.2f}")

print("\n== both sides of the segment ==")
print("the right-sided operators mirror the left-sided ones exactly:")
sch = FracScheme(n=256)
left = rl_integral(f, SEG, 0.5, 0.3, "a-plus", sch)


def f_reflected(t):
    return f(SEG.a + SEG.b - np.asarray(t, dtype=float))


right = rl_integral(f_reflected, SEG, 0.5, SEG.a + SEG.b - 0.3, "b-minus", sch)
print(f"left at 0.3: {complex(left).real:.15f}")
print(f"mirrored right at 0.7: {complex(right).real:.15f}")
