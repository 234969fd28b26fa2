"""Centralisers, their intersections and the centraliser criterion.

Run with ``python3 demos/02_centralisers.py``.
"""

from pcgk import (
    centraliser_of_element,
    centraliser_of_set,
    contains,
    cycle_graph,
    intersect_parabolic,
    intersect_quasiparabolic,
    is_centraliser,
    parabolic,
    present_as_centraliser,
    rank,
    standardize,
    subgroup_equal,
)
from pcgk.oracle import ball, brute_centraliser

# The square a - b - c - d - a: the group is F(a, c) x F(b, d).
g = cycle_graph(4)
el = g.element

# %% Centralisers of single elements
for text in ["a", "a c", "a b", "c^-1 a c"]:
    print(f"C({text}) = {centraliser_of_element(el(text))}")

# Membership agrees with a direct check over a ball.
H = centraliser_of_element(el("a c"))
inside = {x for x in ball(g, 3).elements if contains(H, x)}
print("agrees with brute force on ball(3):", inside == brute_centraliser(g, ["a c"], 3))

# %% Intersections
P = intersect_parabolic(parabolic(g, "a"), parabolic(g, "c", el("b")))
print("\nG({a}) ∩ G({c})^b =", P)
K = intersect_quasiparabolic(centraliser_of_element(el("a c")), centraliser_of_element(el("b d")))
print("C(a c) ∩ C(b d) =", K, "rank", tuple(rank(K)))
print("same as C({a c, b d}):", subgroup_equal(K, centraliser_of_set([el("a c"), el("b d")])))

# %% Which quasiparabolic subgroups are centralisers?
for blocks, Z in [(["a c"], {"b", "d"}), (["a c"], {"b"}), ([], {"a", "b"}), (["a c", "b d"], set())]:
    Q = standardize([el(b) for b in blocks], Z, graph=g)
    if is_centraliser(Q):
        S = present_as_centraliser(Q)
        print(f"{Q} = C({{{', '.join(map(str, S))}}})")
    else:
        print(f"{Q} is not a centraliser")
