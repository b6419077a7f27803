"""Finite models: builtin algebras, constructions, and classification.

The star construction: the direct product of the band B with the nilpotent
algebra K, with the ideal {(e,0), (f,0), (1,0)} collapsed.  The resulting
ten-element algebra squares everything to the constant yet fails
commutativity, which puts it exactly in the variety L.
"""

from varietylab import (
    builtin,
    check_axioms,
    direct_product,
    rees_quotient,
    render_algebra,
    satisfies,
    subdirect_check,
    variety_of,
)
from varietylab.terms import Mode

b, k = builtin("B"), builtin("K")
prod = direct_product(b, k)
print(f"|B x K| = {prod.order}, constant is {prod.element_name(prod.distinguished)}")

ideal = {i for i in range(prod.order) if prod.element_name(i).endswith(",0)")}
quo = rees_quotient(prod, ideal)
print(f"collapsing the {len(ideal)}-element ideal leaves {quo.order} elements")
print(f"  xx = O holds: {satisfies(quo, 'xx = O').holds}")
res = satisfies(quo, "xy = yx")
pair = tuple(quo.element_name(res.witness[v]) for v in "xy")
print(f"  xy = yx fails at {pair[0]}, {pair[1]}")
print(f"  least variety containing it: {variety_of(quo)}")

print()
print("Every algebra splits over its constant into a band and a nilpotent part:")
for name in ("B", "K", "M"):
    rep = subdirect_check(builtin(name))
    print(f"  {name}: band part order {rep.band.order}, "
          f"nilpotent part order {rep.nil.order}, passed={rep.passed}")

print()
print("The two-element tree-mode algebras (only 2s is associative):")
for name in ("2s", "2b"):
    a = builtin(name)
    print(f"  {name}: tree axioms pass={check_axioms(a, Mode.IZ).passed}, "
          f"flat axioms pass={check_axioms(a, Mode.IS).passed}")
print()
print("Table file format for 2b:")
print(render_algebra(builtin("2b")))
