"""Walk through one immersion build on join(C5, C5, K7), a 13-chromatic graph on 17 vertices."""

from collections import Counter

from cliqueimmersion import chromatic_number, verify_weak_immersion
from cliqueimmersion.graphs import complete_graph, cycle_graph, join
from cliqueimmersion.immersion import construct_immersion_detailed

g = join(cycle_graph(5), cycle_graph(5), complete_graph(7))
k = chromatic_number(g)
print(f"n = {g.vertex_count}, m = {g.edge_count}, chi = {k}")

res = construct_immersion_detailed(g, k)
for part, split, h, col in zip(res.decomposition.parts, res.splits, res.multigraphs, res.colorings):
    print(f"part n_i={len(part.vertices)} k_i={part.k}: "
          f"{len(h)} pairs routed through H, Delta={h.max_degree}, "
          f"mu={h.max_multiplicity}, colours={col.colors_used} of {k - part.k}")

imm = res.immersion
print("branch vertices:", imm.branch_vertices)
print("path lengths:", dict(sorted(Counter(imm.path_lengths().values()).items())))
print("verified:", verify_weak_immersion(g, imm).ok)

# a sample of the long detours
for pair, path in list(imm.paths.items())[:40]:
    if len(path) == 5:
        print(pair, "->", path)
