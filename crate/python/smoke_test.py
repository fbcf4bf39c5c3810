"""Smoke test for the burnkit Python module.

Build and install the extension first:

    pip install maturin
    maturin develop -m crates/py/Cargo.toml --release

then run ``python python/smoke_test.py``.
"""

import json

import burnkit


def main():
    p4 = burnkit.generate("path", [4])
    burn = burnkit.simulate(p4, [1, 3])
    assert burn.rounds == [2, 1, 2, 2], burn.rounds
    assert burn.completion == 2
    assert burnkit.simulate(p4, [0]).completion is None

    petersen = burnkit.generate("petersen")
    assert (petersen.order, petersen.edge_count) == (10, 15)
    k, sources = burnkit.burning_number(petersen)
    assert k == 3 and burnkit.simulate(petersen, sources).completion == 3
    assert burnkit.spanning_tree_count(petersen) == 2000

    hit = burnkit.Tree(8, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6), (5, 7)])
    assert hit.is_hit() and hit.internal_vertices() == [1, 3, 5]
    assert burnkit.find_anchor(hit) == (3, 1)
    plan = burnkit.hit_schedule(hit)
    assert plan.bound == 3 and plan.sources == [3, 0, 2]
    assert json.loads(plan.to_json())["completion"] == 3

    tree = burnkit.Tree.from_graph(burnkit.generate("random_tree", [60], seed=4))
    d = len(tree.degree_two_vertices())
    plan = burnkit.tree_schedule(tree)
    assert len(plan) <= burnkit.ceil_sqrt(60 + d) == plan.bound

    hist = burnkit.find_hist(petersen)
    assert hist is not None and hist.is_hit() and hist.order == 10
    assert all(petersen.has_edge(u, v) for u, v in hist.edges())
    assert len(burnkit.hist_bound(petersen)) <= 4
    c4 = burnkit.generate("cycle", [4])
    assert burnkit.find_hist(c4) is None and burnkit.hist_bound(c4) is None

    k, witness_tree, _ = burnkit.spanning_min(c4)
    assert k == 2 and witness_tree.order == 4

    assert [len(burnkit.hits(n)) for n in range(1, 11)] == [1, 1, 0, 1, 1, 2, 2, 4, 5, 10]

    text = petersen.to_edge_list()
    assert burnkit.Graph.from_edge_list(text) == petersen

    try:
        burnkit.hit_schedule(burnkit.Tree.from_graph(p4))
    except ValueError:
        pass
    else:
        raise AssertionError("paths have degree-2 vertices")

    print("burnkit smoke test passed")


if __name__ == "__main__":
    main()
