"""Independent reference values for the Rust test suites.

Rebuilds the gadget graphs with networkx, computes domination numbers with
an integer program (scipy.optimize.milp) or brute force, and prints the
values that the tests pin. Run: python3 tools/oracles/oracle.py
"""

import itertools

import networkx as nx
import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def gamma_milp(g):
    nodes = list(g.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    a = np.zeros((len(nodes), len(nodes)))
    for v in nodes:
        a[idx[v], idx[v]] = 1
        for w in g.neighbors(v):
            a[idx[v], idx[w]] = 1
    res = milp(
        c=np.ones(len(nodes)),
        constraints=LinearConstraint(a, lb=1, ub=np.inf),
        integrality=np.ones(len(nodes)),
        bounds=Bounds(0, 1),
    )
    assert res.success
    return int(round(res.fun))


def dominating(g, s):
    s = set(s)
    return all(v in s or any(w in s for w in g.neighbors(v)) for v in g.nodes())


def gamma_brute(g):
    nodes = list(g.nodes())
    for k in range(1, len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            if dominating(g, s):
                return k
    return 0


def subcubic(num_vars, clauses):
    g = nx.Graph()
    for x in range(num_vars):
        cyc = [("u", x, 3), ("F", x, 2), ("T", x, 2), ("u", x, 2), ("F", x, 1),
               ("T", x, 1), ("u", x, 1), ("F", x, 3), ("T", x, 3)]
        nx.add_cycle(g, cyc)
    occ = [0] * num_vars
    for ci, cl in enumerate(clauses):
        g.add_node(("c", ci))
        ls = [("l", ci, j) for j in range(3)]
        nx.add_cycle(g, ls)
        for j, x in enumerate(cl):
            occ[x] += 1
            g.add_edge(("x", ci, j), ("l", ci, j))
            g.add_edge(("x", ci, j), ("F", x, occ[x]))
            g.add_edge(("c", ci), ("T", x, occ[x]))
    return g


def clawfree(src):
    h = nx.Graph()
    port = {}
    for v in src.nodes():
        nbrs = sorted(src.neighbors(v))
        if len(nbrs) == 3:
            order = []
            for i in range(3):
                order += [("v", i), ("u", i), ("a", i), ("b", i), ("c", i), ("w", (i + 1) % 3)]
            nx.add_cycle(h, [(v,) + t for t in order])
            for i in range(3):
                h.add_edge((v, "u", i), (v, "w", i))
        else:
            order = [("v", 0), ("u", 0), ("a", 0), ("b", 0), ("c", 0), ("u", 1), ("v", 1)]
            nx.add_path(h, [(v,) + t for t in order])
        for i, y in enumerate(nbrs):
            port[(v, y)] = (v, "v", i)
    for x, y in src.edges():
        h.add_edge(port[(x, y)], port[(y, x)])
    return h


def p7free(num_vars, clauses):
    g = nx.Graph()
    for x in range(num_vars):
        nx.add_cycle(g, [("pos", x), ("neg", x), ("u", x)])
    for i, cl in enumerate(clauses):
        for j in range(i):
            g.add_edge(("c", i), ("c", j))
        g.add_node(("c", i))
        for var, positive in cl:
            g.add_edge(("c", i), ("pos" if positive else "neg", var))
    return g


def one_contraction_lowers(g):
    gam = gamma_brute(g)
    if gam == 1:
        return False
    for u, v in g.edges():
        if gamma_brute(nx.contracted_nodes(g, u, v, self_loops=False)) < gam:
            return True
    return False


def ct_gamma(g):
    gam = gamma_brute(g)
    if gam == 1:
        return None
    frontier = [g]
    for k in (1, 2, 3):
        nxt = []
        for h in frontier:
            for u, v in h.edges():
                c = nx.contracted_nodes(h, u, v, self_loops=False)
                if gamma_brute(c) < gam:
                    return k
                nxt.append(c)
        frontier = nxt
    return None


def efficient(g, s):
    return all(sum(1 for w in [v, *g.neighbors(v)] if w in s) == 1 for v in g)


def all_mds_efficient(g):
    k = gamma_brute(g)
    return all(efficient(g, set(s)) for s in itertools.combinations(g.nodes(), k) if dominating(g, s))


def main():
    for name, g in [("C6", nx.cycle_graph(6)), ("P4", nx.path_graph(4)), ("petersen", nx.petersen_graph())]:
        print(f"{name}: gamma {gamma_brute(g)} one_contraction {one_contraction_lowers(g)} "
              f"ct {ct_gamma(g)} all_efficient {all_mds_efficient(g)}")
    sat = subcubic(3, [(0, 1, 2)] * 3)
    unsat = subcubic(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    print("subcubic sat: n", sat.number_of_nodes(), "gamma", gamma_milp(sat))
    print("subcubic unsat: n", unsat.number_of_nodes(), "gamma", gamma_milp(unsat))

    petersen = nx.petersen_graph()
    prism = nx.circular_ladder_graph(3)
    sources = {
        "C4": nx.cycle_graph(4), "C5": nx.cycle_graph(5), "C6": nx.cycle_graph(6),
        "C9": nx.cycle_graph(9), "K4": nx.complete_graph(4), "prism": prism,
        "petersen": petersen,
    }
    for name, src in sources.items():
        h = clawfree(src)
        print(f"clawfree {name}: n {h.number_of_nodes()} gamma_src {gamma_milp(src)} gamma {gamma_milp(h)}")
    h = clawfree(sat)
    print("clawfree of subcubic sat: n", h.number_of_nodes())

    single = p7free(3, [[(0, True), (1, True), (2, False)]])
    print("p7 single: n", single.number_of_nodes(), "gamma", gamma_brute(single))
    patterns = [[(v, bool(m >> v & 1)) for v in range(3)] for m in range(8)]
    allp = p7free(3, patterns)
    print("p7 all patterns: n", allp.number_of_nodes(), "gamma", gamma_brute(allp))

    sat_count = 0
    total = 0
    for k in range(1, 5):
        for subset in itertools.combinations(range(8), k):
            total += 1
            if any(all(any(bool(a >> v & 1) == bool(m >> v & 1) for v in range(3)) for m in subset)
                   for a in range(8)):
                sat_count += 1
    print("3-var formulas with <= 4 clauses:", total, "satisfiable:", sat_count)

    atlas = [g for g in nx.graph_atlas_g()[1:] if nx.is_connected(g)]
    counts = [sum(1 for g in atlas if g.number_of_nodes() == n) for n in range(1, 8)]
    print("connected graphs per n (1..7):", counts)
    small = [g for g in atlas if g.number_of_nodes() <= 6]
    yes = sum(1 for g in small if one_contraction_lowers(g))
    gamma_ge2 = [g for g in small if gamma_brute(g) >= 2]
    hist = {}
    for g in gamma_ge2:
        k = ct_gamma(g)
        hist[k] = hist.get(k, 0) + 1
    print("connected <= 6:", len(small), "one-contraction yes:", yes,
          "gamma>=2:", len(gamma_ge2), "ct histogram:", dict(sorted(hist.items(), key=str)))


if __name__ == "__main__":
    main()
