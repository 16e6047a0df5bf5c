"""Tour of the two-component commutative number system.

The package computes with numbers Z = z1*e + z2*ed: two complex components
attached to a pair of complementary idempotents (e*e = e, ed*ed = ed,
e*ed = 0, e + ed = 1).  Multiplication acts componentwise, which keeps the
algebra commutative at the price of zero divisors — anything supported on a
single idempotent annihilates the complementary one.  This script walks
through construction, the cartesian view, the hyperbolic modulus, the partial
order, and the failure modes.
"""

import math

from bcfrac import BCNumber, DomainError, E, E_DAG, UNIT_J, HyperbolicNumber, inner_c


def section(title: str) -> None:
    print(f"\n== {title} ==")


section("construction and the two views")
Z = BCNumber(2 + 1j, -1 + 3j)
print(f"idempotent components:  Z = {Z}")
w1, w2 = Z.to_cartesian()
print(f"cartesian view:         Z = ({w1}) + j*({w2})")
print(f"round trip:             {BCNumber.from_cartesian(w1, w2)}")

section("the second imaginary unit")
print(f"j = {UNIT_J}  (as a number: -i*e + i*ed)")
print(f"j*j = {UNIT_J * UNIT_J}  (equals -1, yet j is not a complex scalar)")

section("componentwise product and idempotents")
W = BCNumber(5, 7)
print(f"{BCNumber(2, 3)} * {W} = {BCNumber(2, 3) * W}")
print(f"Z*E      = {Z * E}      (projection on the first component)")
print(f"Z*E_DAG  = {Z * E_DAG}  (projection on the second)")
print(f"Z*E + Z*E_DAG = {Z * E + Z * E_DAG}  (recovers Z)")

section("zero divisors")
D = BCNumber(3 - 2j, 0)
print(f"D = {D} has a vanishing second component, so D * E_DAG = {D * E_DAG}")
try:
    _ = Z / D
except DomainError as exc:
    print(f"division by D is refused: {exc}")

section("conjugation, hyperbolic modulus, partial order")
print(f"Z.conj_star()        = {Z.conj_star()}")
m = Z.modulus_k()
print(f"Z.modulus_k()        = {m}  (a hyperbolic number, |z1|e + |z2|ed)")
zz = Z * Z.conj_star()
print(f"Z * Z.conj_star()    = {zz}  (the squared modulus on the diagonal)")
small = BCNumber(0.5, 0.25)
big = BCNumber(1.5, 2.0)
print(f"{small}.preceq({big}) = {small.preceq(big)}  (componentwise real order)")

section("euclidean norm and inner products")
print(f"abs(Z)              = {abs(Z):.6f}  (= hypot(|z1|,|z2|)/sqrt(2))")
print(f"inner_c(2+1j, 3-1j) = {inner_c(2 + 1j, 3 - 1j)}")
K = Z.inner_k(W)
print(f"Z.inner_k(W)        = {K}  (componentwise real pairing)")

section("scale invariance sanity check")
t = HyperbolicNumber(2.0, 0.5)
print(f"a hyperbolic scale: {t}; modulus is multiplicative componentwise:")
lhs = (Z * W).modulus_k()
print(f"|Z*W|_k = {lhs}")
rhs_l1 = Z.modulus_k().l1 * W.modulus_k().l1
rhs_l2 = Z.modulus_k().l2 * W.modulus_k().l2
print(f"|Z|_k*|W|_k = HyperbolicNumber(l1={rhs_l1}, l2={rhs_l2})")
assert math.isclose(lhs.l1, rhs_l1) and math.isclose(lhs.l2, rhs_l2)
print("\nall good.")
