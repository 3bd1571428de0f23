"""Localized invariants from fixed-point weight data.

A circle action on a closed almost complex 6-manifold with isolated fixed
points is summarized, for our purposes, by the three integer rotation
weights at each fixed point. The fixed-point localization theorem then
computes characteristic numbers as exact rational sums over the points.
"""

from circle6 import (
    c1_cubed, chern_report, chi_y_profile, dataset, gen_family, jang_case,
    todd_genus, validate, NonIntegralChernNumber,
)

# The standard weight-(1, 2) action on the 6-sphere: two fixed points with
# opposite weights. Every weight sum is zero, so c1^3 localizes to 0.
s6 = dataset(3, [("north", (1, 2, -3)), ("south", (-1, -2, 3))])
assert validate(s6) == []

print("6-sphere, weights (1, 2):")
print("  c1^3      =", c1_cubed(s6))
print("  chi_y     =", chi_y_profile(s6), "(one point with 1 negative weight, one with 2)")
print("  Todd      =", todd_genus(s6))
print()

# A 4-point example: the projective-space family at parameters (1, 2, 3).
# The four points contribute 36 - 4 - 4 + 36 = 64 = c1^3 of CP^3.
cp3 = gen_family(jang_case("A", 1, 2, 3))
print("projective-space family at (1, 2, 3):")
for p in cp3.points:
    term = c1_cubed(dataset(3, [(p.name, p.weights)]))
    print(f"  {p.name}: weights {p.weights}, term {term}")
print("  total c1^3 =", c1_cubed(cp3))
print("  full report:", chern_report(cp3).as_json_dict())
print()

# The integrality gate: weight data of a closed manifold must produce an
# integer. A single point with weights (1, 2, 4) gives 343/8, which cannot
# come from any closed almost complex 6-manifold.
bad = dataset(3, [("p", (1, 2, 4))])
print("single point (1, 2, 4): raw sum =", c1_cubed(bad))
try:
    chern_report(bad)
except NonIntegralChernNumber as exc:
    print("  chern_report refuses:", exc)
print()

# Across each of the six families the degree sum is remarkably rigid:
# constant in the parameters for five of them, quadratic for the sixth.
print("family constants (parameters swept over small grids):")
for letter, grids in [("A", [(1, 2, 3), (2, 5, 9), (1, 7, 4)]),
                      ("B", [(1, 1), (3, 2), (7, 5)]),
                      ("D", [(1, 2, 3, 4), (2, 2, 2, 2)]),
                      ("E", [(1, 1), (4, 3)]),
                      ("F", [(1, 1), (5, 2)])]:
    values = {c1_cubed(gen_family(jang_case(letter, *ps))) for ps in grids}
    print(f"  case {letter}: c1^3 = {sorted(values)}")
print("  case C: c1^3 = 72 - 2a^2, e.g.",
      [(a, int(c1_cubed(gen_family(jang_case('C', a))))) for a in (1, 2, 3, 6)])
