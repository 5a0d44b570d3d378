"""A few named quivers used throughout the tests and the CLI."""
from .quiver import Quiver, build_quiver


def kronecker() -> Quiver:
    return build_quiver([0, 1], [("a", 0, 1), ("b", 0, 1)])


def a2_tilde() -> Quiver:
    return build_quiver([0, 1, 2], [("a", 0, 1), ("b", 1, 2), ("c", 0, 2)])


def d4_tilde() -> Quiver:
    """Four leaves 1..4 pointing into the centre 0."""
    return build_quiver([0, 1, 2, 3, 4], [(f"a{i}", i, 0) for i in range(1, 5)])


def a3_tilde() -> Quiver:
    return build_quiver([0, 1, 2, 3], [("a", 0, 1), ("b", 1, 2), ("c", 2, 3), ("d", 0, 3)])


def single_vertex() -> Quiver:
    return build_quiver([0], [])


NAMED = {
    "kronecker": kronecker,
    "a2": a2_tilde,
    "a3": a3_tilde,
    "d4": d4_tilde,
}
