"""Heights of centraliser lattices, with a randomized attempt to beat them.

Run with ``python3 demos/03_height.py``.  The search takes a few seconds
per graph.
"""

from pcgk import (
    centraliser_lattice_height,
    centraliser_of_element,
    complete_graph,
    cycle_graph,
    parabolicize_chain,
    parabolic,
    path_graph,
    search_longer_chain,
    whole_group,
    witness_chain,
)

graphs = {"P3": path_graph(3), "P4": path_graph(4), "C4": cycle_graph(4), "C5": cycle_graph(5), "K3": complete_graph(3)}

# %% The height equals the height of the lattice of closed vertex sets
for name, g in graphs.items():
    h = centraliser_lattice_height(g)
    chain = witness_chain(g)
    print(f"{name}: height {h}, {len(g.closed_sets.elements)} closed sets")
    print("   ", " > ".join(g.format_set(H.Z) for H in chain))

# %% A chain through non-parabolic centralisers can always be made parabolic
g = graphs["C4"]
el = g.element
chain = [whole_group(g), centraliser_of_element(el("a c")), centraliser_of_element(el("a c b d")), parabolic(g, "")]
print("\nchain of length", len(chain) - 1, ":", " > ".join(map(str, chain)))
flat = parabolicize_chain(chain)
print("parabolic chain of length", len(flat) - 1, ":", " > ".join(g.format_set(P.Y) for P in flat))

# %% Random search never finds anything longer
for name in ("P3", "C4"):
    res = search_longer_chain(graphs[name], max_chains=2000, seed=1)
    print(f"\n{name}: longest of {res.sampled} random chains has length {res.length}")
