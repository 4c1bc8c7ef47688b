import numpy as np
import pytest

from bipconn.connectivity import is_k_connected
from bipconn.errors import PreconditionViolation
from bipconn.generators import complete_graph, cycle_graph, gnp, petersen_graph, prism_graph
from bipconn.span2 import even_cycle, span2connected


def check(g):
    cert, log = span2connected(g)
    h, _ = cert.graph()
    assert cert.vertices == frozenset(range(g.n)) and not cert.structural_errors()
    assert all(g.has_edge(u, v) for u, v in cert.edges)
    assert is_k_connected(h, 2)
    assert log["seed_cycle"] % 2 == 0
    return cert, log


def test_k4_gives_c4():
    cert, _ = check(complete_graph(4))
    assert len(cert.edges) == 4


def test_k5():
    check(complete_graph(5))


@pytest.mark.parametrize("m", [3, 4, 5, 8])
def test_prism(m):
    check(prism_graph(m))


def test_petersen():
    check(petersen_graph())


def test_rejects_low_connectivity():
    with pytest.raises(PreconditionViolation) as exc:
        span2connected(cycle_graph(6))
    assert len(exc.value.witness) <= 2


def test_even_cycle_is_a_cycle():
    g = petersen_graph()
    cyc = even_cycle(g)
    assert len(cyc) % 2 == 0 and len(set(cyc)) == len(cyc)
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_random_three_connected():
    rng = np.random.default_rng(5)
    done = 0
    while done < 25:
        n = int(rng.integers(6, 30))
        g = gnp(n, float(rng.uniform(0.15, 0.6)), rng)
        if is_k_connected(g, 3):
            check(g)
            done += 1
