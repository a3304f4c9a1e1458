"""The edge recoloring game, played in process and over HTTP.

Alice wants to invert the coloring: every blue edge red and vice versa.
Each round she flips one edge, which breaks the two-trees invariant, and
Bob must restore it by recoloring an edge of her choice's induced
cut-and-cycle intersection. Alice wins fastest along forced swaps, where
Bob never has a choice.
"""

from fastapi.testclient import TestClient

from bispan import alice_flip, bob_auto, hint, named_graph, new_game
from bispan.service import create_app

g, tp = named_graph("W5")
state = new_game(g, tp, policy="adversarial")
print(f"wheel on 5 vertices, start S = {sorted(tp.S)}, "
      f"target distance {state.target_distance}")

round_no = 1
while not state.won:
    e = hint(state)
    state = alice_flip(state, e)
    f, state = bob_auto(state)
    print(f"round {round_no}: Alice flips {e}, Bob must answer {f}, "
          f"distance now {state.target_distance}")
    round_no += 1
print("Alice wins in", state.moves, "rounds")

# the same game over the HTTP API
client = TestClient(create_app())
sid = client.post("/game", json={"named": "W5"}).json()["id"]
for e, f in ((0, 7), (1, 3), (2, 4), (6, 5)):
    client.post(f"/game/{sid}/flip", json={"edge": e})
    client.post(f"/game/{sid}/auto")
final = client.get(f"/game/{sid}").json()
print("API replay:", final["phase"], "after", len(final["history"]), "rounds")
