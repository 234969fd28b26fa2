"""Canonical forms, divisors, blocks and roots on a small example.

Run with ``python3 demos/01_words.py``.
"""

from pcgk import (
    block_decomposition,
    conjugate_decompose,
    cyclic_reduce,
    cyclic_shifts,
    greatest_divisor,
    path_graph,
    root,
)
from pcgk.oracle import ball, brute_equal

# The path a - b - c: a and c commute with b but not with each other.
g = path_graph(3)
el = g.element

# %% Normal forms
# Words are reduced to the ShortLex-least geodesic spelling.
for text in ["a b a^-1", "c a", "b c b^-1 a", "a^2 b^-1 a^-2"]:
    print(f"{text!r:>18} -> {el(text)}")

# The brute-force oracle agrees without sharing any reduction code.
print("oracle says a b = b a:", brute_equal(g, "a b", "b a"))

# %% Divisors
# b commutes with a, so a can be pulled to the front of b a c.
d, rest = greatest_divisor(el("b a c"), {"a"}, "left")
print(f"\ngreatest left divisor of 'b a c' in G({{a}}): {d}, remainder {rest}")

# %% Cyclic reduction and blocks
w = el("b a^-1 c a")
u, v = cyclic_reduce(w)
print(f"\n{w} = u^-1 v u with u={u}, v={v}")
print("blocks:", [str(b) for b in block_decomposition(w)[1]])
print("cyclic shifts of 'a c':", sorted(str(s) for s in cyclic_shifts(el("a c"))))

# %% Roots
for text in ["a c a c", "a b a b", "c^-1 a^2 c"]:
    r, n = root(el(text))
    print(f"root of {text!r}: ({r})^{n}")

# %% Conjugation
dec = conjugate_decompose(el("c"), el("a b"))
print("\nc^(a b) decomposes as", {k: str(x) for k, x in dec.as_dict().items()})

print(f"\nball of radius 3 has {len(ball(g, 3))} elements")
