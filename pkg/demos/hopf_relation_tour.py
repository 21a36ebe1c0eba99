"""Walk from the trivial component to the Hopf relation and the knots it divides."""
from cubicskein.relations import hopf_pair, hopf_relation, relation_between, trefoil_relation
from cubicskein.ring import alpha_substitute, exact_divide, format_poly, trivial_component
from cubicskein.rta import eval_code
from cubicskein.tangle_model import ConwayCode, reverse_code

print("t =", format_poly(trivial_component()))

h_plus, h_minus = hopf_pair()
print("H+ =", format_poly(h_plus))
print("H- =", format_poly(h_minus))
print("R_Hopf =", format_poly(hopf_relation()))

# codes and their reversals evaluate differently; the difference is a multiple of R_Hopf
for left in [(2, 2), (3, 2), (2, 1, 3), (3, -2, 2, 1)]:
    right = tuple(reverse_code(ConwayCode(left))[0])
    q = exact_divide(relation_between(left, right), hopf_relation())
    print(f"{list(left)} vs {list(right)}: quotient {format_poly(q) if q is not None else 'none'}")

tr = trefoil_relation()
print("R_Hopf divides R_tr+?", exact_divide(tr, hopf_relation()) is not None)
print("both vanish under alpha:", alpha_substitute(hopf_relation()).is_zero(),
      alpha_substitute(tr).is_zero())
print("cinquefoil N([5]) has", len(eval_code((5,)).terms), "terms")
