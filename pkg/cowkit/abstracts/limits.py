"""Configured ceilings for the exponential parts of the toolkit
"""
from os import getenv

from ..exceptions import ConfigurationError


def _env_limit(name: str, default: int) -> int:
    raw = getenv(name)

    if raw is None:
        return default

    if not (raw.strip().isascii() and raw.strip().isdigit()):
        raise ConfigurationError(f"{name} must be a non-negative integer, got {raw!r}", variable=name, value=raw)

    return int(raw)


class Limits:
    """Size ceilings checked before any exponential search starts

    Args:
        max_vertices: Largest graph the exact oracles accept
        max_edges: Largest edge count the exact biclique cover accepts
        max_k: Largest width parameter the label search and G[k] builder accept
        brute_force_vertices: Largest graph the secondary brute-force oracle accepts
    """

    max_vertices: int
    max_edges: int
    max_k: int
    brute_force_vertices: int

    def __init__(
        self,
        max_vertices: int = 16,
        max_edges: int = 24,
        max_k: int = 10,
        brute_force_vertices: int = 6,
    ):
        assert max_vertices >= 0, "max_vertices must not be negative"
        assert max_edges >= 0, "max_edges must not be negative"
        assert max_k >= 0, "max_k must not be negative"
        assert brute_force_vertices >= 0, "brute_force_vertices must not be negative"
        self.max_vertices = max_vertices
        self.max_edges = max_edges
        self.max_k = max_k
        self.brute_force_vertices = brute_force_vertices

    @classmethod
    def from_env(cls) -> "Limits":
        """Defaults, overridden by COWKIT_LIMIT_N, COWKIT_LIMIT_EDGES and COWKIT_LIMIT_K"""
        defaults = cls()
        return cls(
            max_vertices=_env_limit("COWKIT_LIMIT_N", defaults.max_vertices),
            max_edges=_env_limit("COWKIT_LIMIT_EDGES", defaults.max_edges),
            max_k=_env_limit("COWKIT_LIMIT_K", defaults.max_k),
            brute_force_vertices=defaults.brute_force_vertices,
        )

    def to_dict(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "max_edges": self.max_edges,
            "max_k": self.max_k,
            "brute_force_vertices": self.brute_force_vertices,
        }

    def __repr__(self) -> str:
        return (
            f"Limits(max_vertices={self.max_vertices}, max_edges={self.max_edges}, "
            f"max_k={self.max_k}, brute_force_vertices={self.brute_force_vertices})"
        )
