import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qwind.drawings import Drawing, Graph, alternating_linear_drawing
from qwind.exactgeom import Rational2
from qwind.winding import enumerate_winding


@pytest.fixture(scope="session")
def alt7():
    return alternating_linear_drawing(7)


@pytest.fixture(scope="session")
def alternating_counts():
    """Winding counts of the alternating drawings, shared by A2 and A10."""
    return {q: len(enumerate_winding(alternating_linear_drawing(3 * q - 2), q)) for q in (2, 3, 4)}


def random_points(rng: random.Random, count: int, span: int = 50, den: int = 13):
    return [
        Rational2(
            Fraction(rng.randint(-span * den, span * den), den),
            Fraction(rng.randint(-span * den, span * den), den),
        )
        for _ in range(count)
    ]


def restricted_drawing(dr: Drawing, graph: Graph) -> Drawing:
    """The drawing of a subgraph inherited from a drawing of a supergraph."""
    bends = {e: dr.bends[e] for e in graph.edges if e in dr.bends}
    return Drawing(graph, dr.positions[: graph.n], bends)
