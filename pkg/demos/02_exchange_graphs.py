"""Exchange graphs over tree pairs, and the difficulty measure nu.

Every bispanning graph induces a meta-graph whose vertices are its tree
pairs (S,T) and whose arcs are edge exchanges: tau2 allows any symmetric
exchange, tau3 only unique (forced) exchanges, tau4 only left-unique ones.
nu(G) counts, at the best starting pair, the shortest inversion paths
(S,T) -> (T,S) in the directed tau3; fewer paths means a harder instance.
"""

from bispan import build_tau, leaf_restricted_tau3, named_graph, nu, tau_connected
from bispan.catalog import nu_reference_pair

for name in ("K4", "W5", "B6_3"):
    g, _ = named_graph(name)
    for variant in ("tau2", "tau3", "tau4"):
        t = build_tau(g, variant, "undirected")
        print(f"{variant}({name}): {t.num_vertices} pairs, "
              f"{t.num_edges} exchanges, "
              f"{'connected' if tau_connected(t) else 'disconnected'}")
    count, pair = nu(g)
    print(f"nu({name}) = {count}, attained with S = {list(pair)}")
    print()

# evaluating nu at a specific pair instead of the minimum
g, _ = named_graph("W5")
at_ref = nu(g, nu_reference_pair("W5"))[0]
print(f"W5: minimum nu is {nu(g)[0]}, the reference pair gives {at_ref}")

# restricting tau3 to exchanges forced by leaf edges keeps it connected
# on atomic graphs of connectivity class (3,3)
t = leaf_restricted_tau3(named_graph("K4")[0])
print(f"leaf-forced tau3(K4): {t.num_vertices} pairs, "
      f"{'connected' if tau_connected(t) else 'disconnected'}")

# DOT export for quick visualization
print()
print(build_tau(named_graph("B3_1")[0], "tau3", "undirected").to_dot())
