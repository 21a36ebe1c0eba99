"""Reduce 3-braid-like words over the 40-element basis and see where the algebra slips."""
from cubicskein.tangle3 import (
    BASIS, basis_name, multiply3, parse_word, product_defect, reduce_word, word_pairs,
)
from cubicskein.ring import alpha_substitute

print(len(BASIS), "basis words, e.g.", ", ".join(basis_name(b) for b in BASIS[:6]))

for text in ("S1 S1i", "U1 S2 U1", "S1i S2 S1i S2", "S1 S2 S1"):
    combo = reduce_word(parse_word(text))
    print(f"{text:>14} -> {len(combo.coeffs)} basis terms")

x, y = reduce_word(parse_word("S1")), reduce_word(parse_word("S2 S1"))
print("S1 * (S2 S1) == S2 S1 S2:", multiply3(x, y) == reduce_word(parse_word("S2 S1 S2")))

bad = [(u, v) for u, v in word_pairs(200, 6, seed=0) if not product_defect(u, v).is_zero()]
print(f"{len(bad)} of 200 products depend on the rewriting route")
if bad:
    u, v = bad[0]
    d = product_defect(u, v)
    print("first:", " ".join(u), "|", " ".join(v))
    print("its discrepancy vanishes mod alpha:",
          all(alpha_substitute(c).is_zero() for c in d.coeffs.values()))
