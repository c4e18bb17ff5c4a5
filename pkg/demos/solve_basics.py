"""Tour of the four path problems on one small graph.

Run with: python3 demos/solve_basics.py
"""

from secpath import (
    ProblemInstance,
    Variant,
    build_graph,
    free_variant_decide,
    oracle_decide,
    st_ssp_decide,
    verify_certificate,
)

# a 4-cycle with one pendant: 0-1-2-3-0 plus leaf 4 on vertex 1
g = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4)])
print(f"graph: {g.n} vertices, edges {g.edges}")
print()

print("A path's open neighborhood is every vertex outside it that touches it.")
print("The four problems bound the path size (short <= k, long >= k) and the")
print("neighborhood size (secluded <= l, unsecluded >= l).")
print()

for variant, k, l in [
    (Variant.SSP, 3, 1),
    (Variant.LSP, 4, 1),
    (Variant.SUP, 2, 3),
    (Variant.LUP, 5, 0),
]:
    inst = ProblemInstance(g, variant, k, l)
    ans = oracle_decide(inst)
    if ans.decision:
        report = verify_certificate(inst, ans.witness)
        print(
            f"{variant.value} k={k} l={l}: YES with path {ans.witness.vertices}, "
            f"{report.size} vertices, {report.neighbor_count} neighbors"
        )
    else:
        print(f"{variant.value} k={k} l={l}: NO "
              f"(searched {ans.stats.paths_enumerated} paths)")
print()

print("Fixing both endpoints turns a free instance into a terminal-pair one;")
print("the parameterized solver branches instead of enumerating everything.")
st = ProblemInstance(g, Variant.SSP, 4, 1, 3, 4)
ans = st_ssp_decide(st)
print(f"ssp from 3 to 4, k=4 l=1: {'YES ' + str(ans.witness.vertices) if ans.decision else 'NO'}")
print(f"  branching explored {ans.stats.branch_nodes_explored} nodes")
print()

print("The free wrapper answers an unanchored instance by scanning single")
print("vertices, then querying the terminal-pair solver for every pair.")
free = ProblemInstance(g, Variant.SUP, 2, 3)
ans = free_variant_decide(free)
print(f"sup k=2 l=3: {'YES ' + str(ans.witness.vertices) if ans.decision else 'NO'}")
print(f"  tried {ans.stats.candidate_pairs_tried} endpoint pairs")
