"""The shipped instances the verification suites run on."""

from __future__ import annotations

from .exact_linalg import QQ, ZZ, Ring
from .families import (
    comatrix_coalgebra,
    cyclic_group_table,
    divided_power_coalgebra,
    left_zero_monoid_table,
    matrix_algebra,
    symmetric_group_table,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
)
from .fgmod import FreeModule, Submodule
from .finite_dual import (
    RecurrentSequence,
    delta_sequence,
    fibonacci_sequence,
    geometric_sequence,
)
from .hopf import HopfPresentation, group_algebra_hopf, sweedler_h4
from .structures import (
    AlgebraPresentation,
    CoalgebraPresentation,
    base_algebra,
    base_coalgebra,
    monoid_algebra,
)


def hopf_corpus(base: Ring) -> list[tuple[str, HopfPresentation]]:
    out = [(f"Z/{n}", group_algebra_hopf(cyclic_group_table(n), base)) for n in range(1, 7)]
    table, labels = symmetric_group_table(3)
    out.append(("S3", group_algebra_hopf(table, base, labels)))
    if base.characteristic != 2:
        out.append(("H4", sweedler_h4(base)))
    return out


def algebra_corpus(base: Ring) -> list[tuple[str, AlgebraPresentation]]:
    """Algebras of rank at most 6."""
    out = [("base", base_algebra(base))]
    out += [(name, h.algebra) for name, h in hopf_corpus(base) if name != "Z/1"]
    out += [
        ("M2", matrix_algebra(2, base)),
        ("x^3", truncated_polynomial_algebra(3, base)),
        ("upper-triangular", upper_triangular_algebra(base)),
        ("left-zero", monoid_algebra(left_zero_monoid_table(2), base)),
    ]
    return out


def coalgebra_corpus(base: Ring) -> list[tuple[str, CoalgebraPresentation]]:
    return [
        ("rank-1", base_coalgebra(base)),
        ("comatrix-2", comatrix_coalgebra(2, base)),
        ("divided-power-2", divided_power_coalgebra(2, base)),
    ]


def recseq_corpus(base: Ring = QQ) -> list[tuple[str, RecurrentSequence]]:
    return [
        ("geometric-2", geometric_sequence(2, base)),
        ("geometric-(-1/3)", geometric_sequence(QQ(-1) / 3, base) if base == QQ else geometric_sequence(3, base)),
        ("delta-1", delta_sequence(1, base)),
        ("delta-2", delta_sequence(2, base)),
        ("fibonacci", fibonacci_sequence(base)),
    ]


def _sub(rank: int, *gens) -> Submodule:
    return Submodule.spanned_by(FreeModule(ZZ, rank), [list(g) for g in gens])


def submodule_corpus() -> list[tuple[str, Submodule, bool]]:
    """Submodules of free Z-modules with their purity label."""
    return [
        ("2Z in Z", _sub(1, (2,)), False),
        ("Z+0 in Z^2", _sub(2, (1, 0)), True),
        ("<(2,2)> in Z^2", _sub(2, (2, 2)), False),
        ("<(1,1)> in Z^2", _sub(2, (1, 1)), True),
        ("<(2,3)> in Z^2", _sub(2, (2, 3)), True),
        ("<(4,6)> in Z^2", _sub(2, (4, 6)), False),
        ("<(2,1),(1,2)> in Z^2", _sub(2, (2, 1), (1, 2)), False),
        ("Z^2 in Z^2", _sub(2, (1, 0), (0, 1)), True),
        ("0 in Z^2", _sub(2), True),
        ("<(1,0,0),(0,2,0)> in Z^3", _sub(3, (1, 0, 0), (0, 2, 0)), False),
        ("<(1,1,0),(0,1,1)> in Z^3", _sub(3, (1, 1, 0), (0, 1, 1)), True),
        ("<(1,2,3),(4,5,6)> in Z^3", _sub(3, (1, 2, 3), (4, 5, 6)), False),
        ("<(1,2,3),(2,4,6)> in Z^3", _sub(3, (1, 2, 3), (2, 4, 6)), True),
        ("<(3,0,0,0),(0,0,5,0)> in Z^4", _sub(4, (3, 0, 0, 0), (0, 0, 5, 0)), False),
        ("<(1,2,3,4),(0,1,2,3)> in Z^4", _sub(4, (1, 2, 3, 4), (0, 1, 2, 3)), True),
    ]
