"""Fox colorings of rational links and the 7-move the cubic relation deforms."""
from cubicskein.colorings import count_fox_colorings, determinant, fraction_of
from cubicskein.tangle_model import Closure

for code in [(1,), (3,), (5,), (2, 2), (2, -2), (3, 1, 2)]:
    num, den = fraction_of(code)
    print(f"{list(code)}: fraction {num}/{den}, det {determinant(code)}, "
          f"col3 {count_fox_colorings(code, 3)}, col7 {count_fox_colorings(code, 7)}")

print("figure-eight as D([2,2]):", count_fox_colorings((2, 2), 5, Closure.Denominator), "5-colorings")

code = [2, -3, 1]
for k in range(3):
    moved = [code[0] + 7 * k] + code[1:]
    print(moved, "col7 =", count_fox_colorings(moved, 7))
