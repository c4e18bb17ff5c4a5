"""Instance transformations, end to end.

Run with: python3 demos/reductions_tour.py
"""

from secpath import (
    ProblemInstance,
    Variant,
    VertexSet,
    build_graph,
    clique_to_ssp,
    or_compose,
    oracle_decide,
    pchp_to_variant,
    rbds_to_sup,
    reduce_to_st,
)


def describe(label, out):
    inst = out.instance
    ends = f", s={inst.s} t={inst.t}" if inst.st_mode else ""
    print(f"{label}: {inst.variant.value} k={inst.k} l={inst.l}{ends} "
          f"on {inst.graph.n} vertices / {inst.graph.m} edges")
    print(f"  groups: {', '.join(f'{name}({len(vs)})' for name, vs in out.groups.items())}")
    ans = oracle_decide(inst)
    print(f"  answer: {'YES ' + str(ans.witness.vertices) if ans.decision else 'NO'}")
    print()


print("1. Free instance to terminal-pair instance: one graph copy per")
print("   endpoint pair, fresh terminals, k+2 and l plus two attachment")
print("   vertices per unused copy.")
p3 = build_graph(3, [(0, 1), (1, 2)])
describe("to-st of (P3, ssp, k=2, l=1)", reduce_to_st(ProblemInstance(p3, Variant.SSP, 2, 1)))

print("2. Hamiltonian path as a path problem: in a connected graph, a path")
print("   with no outside neighbors must swallow every vertex.")
k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
describe("ssp instance for K4", pchp_to_variant(k4, "ssp"))

print("3. k-clique as a short secluded path: edge vertices form a clique;")
print("   a filler clique makes every original vertex too loud to visit, so")
print("   a quiet path picks edges whose endpoints overlap, i.e. a clique.")
describe("clique k=3 on K4", clique_to_ssp(k4, 3))

print("4. Red-blue dominating set as a short unsecluded path: k+1 hubs with")
print("   big leaf blocks force the path to alternate hub, red, hub, ...;")
print("   the threshold is met exactly when the picked reds dominate blue.")
bip = build_graph(4, [(0, 2), (0, 3), (1, 2)])
describe("rbds k=1", rbds_to_sup(bip, VertexSet((0, 1)), VertexSet((2, 3)), 1))

print("5. OR-composition: terminal-pair instances sharing (variant, k, l)")
print("   hang off two binary trees; any root-to-root path crosses exactly")
print("   one instance, so the answer is the disjunction.")
yes = ProblemInstance(p3, Variant.SSP, 3, 0, 0, 2)
star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
no = ProblemInstance(star, Variant.SSP, 3, 0, 1, 2)
describe("compose [no, yes]", or_compose([no, yes]))
describe("compose [no, no]", or_compose([no, no]))
