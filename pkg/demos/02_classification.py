"""The six weight families and the inverse matching problem.

Any almost complex circle action on a 6-manifold with exactly four fixed
points has weight data falling into one of six parametric families
(Jang's classification). `gen_family` produces the data; `classify` runs
the other way, recovering every (case, parameters) pair that fits.
"""

from circle6 import classify, dataset, gen_family, jang_case, negate_all

# Generate and display one member of each family.
for letter, params in [("A", (1, 2, 3)), ("B", (1, 1)), ("C", (4,)),
                       ("D", (1, 2, 3, 4)), ("E", (1, 1)), ("F", (1, 1))]:
    data = gen_family(jang_case(letter, *params))
    print(f"case {letter} at {params}: {data.weight_rows()}")
print()

# Round trip: classify recovers the generating case and parameters. All
# valid matches are reported, so parameter symmetries of a template show up
# as extra tuples.
d = gen_family(jang_case("D", 1, 2, 3, 4))
print("classify(case D at (1,2,3,4)):")
for m in classify(d).matches:
    print(f"  {m.case.tag.value} {m.case.params} reversed={m.reversed} slots={m.assignment}")
print()

# Reversal: negating every weight reverses the circle action. The
# point-blow-up family is chirally asymmetric, so its reversed data only
# matches with the reversed flag set.
e = negate_all(gen_family(jang_case("E", 2, 5)))
print("classify(reversed case E at (2,5)):",
      [(m.case.tag.value, m.case.params, m.reversed) for m in classify(e).matches])
print()

# Coincidences across cases are genuine and reported: the projective-space
# data at (1, 2, 3) is literally the Fano-type family at a = 2.
a = gen_family(jang_case("A", 1, 2, 3))
print("classify(case A at (1,2,3)) finds cases:",
      sorted({m.case.tag.value for m in classify(a).matches}))
print()

# Data fitting no family is reported as unmatched, not as an error.
strange = dataset(3, [("p1", (1, 1, 1)), ("p2", (2, 2, 2)),
                      ("p3", (3, 3, 3)), ("p4", (4, 4, 4))])
print("all-positive data matches:", list(classify(strange).matches))
