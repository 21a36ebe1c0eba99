"""Transcribed reference values, stored as text in data/golden.txt."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .ring import R, PolyRing, RingFraction, parse_poly

# value ring extended by symbols for small named diagrams
_MACROS = ("t", "Hp", "Hm", "L31", "R31", "F41")
GOLDEN_RING = PolyRing(R.names + _MACROS, R.invertible + (False,) * len(_MACROS),
                       aliases={"b∞": "binf"})


def _macro_values():
    from .relations import figure_eight_pair, hopf_pair, left_trefoil, right_trefoil
    from .ring import trivial_component
    hp, hm = hopf_pair()
    return [trivial_component(), hp, hm, left_trefoil(), right_trefoil(), figure_eight_pair()[0]]


def _parse_blocks(text: str):
    blocks, cur, last = [], None, None
    for raw in text.splitlines():
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        if raw[:1].isspace() and cur is not None and last in ("num", "den"):
            cur[last][-1] += " " + line.strip()
            continue
        key, _, val = line.partition(":")
        key, val = key.strip(), val.strip()
        if key == "name":
            cur = {"name": val, "num": [], "den": [], "note": ""}
            blocks.append(cur)
        elif key in ("num", "den"):
            cur[key].append(val)
        elif key == "note":
            cur["note"] = val
        else:
            raise ValueError("bad golden line: %r" % raw)
        last = key
    return blocks


@lru_cache(maxsize=None)
def _corpus():
    text = resources.files(__package__).joinpath("data/golden.txt").read_text(encoding="utf-8")
    return {b["name"]: b for b in _parse_blocks(text)}


def golden_names() -> list[str]:
    return list(_corpus())


def golden_note(name: str) -> str:
    return _corpus()[name]["note"]


@lru_cache(maxsize=None)
def golden_value(name: str) -> RingFraction:
    """The transcribed value as a fraction over the base ring."""
    block = _corpus()[name]
    images = list(R.gens()) + _macro_values()

    def product(parts):
        out = R.one()
        for text in parts:
            out = out * parse_poly(text, GOLDEN_RING).substitute(images, R)
        return out

    return RingFraction(product(block["num"]), product(block["den"]))
