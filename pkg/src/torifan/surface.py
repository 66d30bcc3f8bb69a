"""Picard-lattice bookkeeping for point blow-ups of rational surfaces.

Classes are coordinate vectors in a labelled basis; the intersection form is
an integer Gram matrix and the canonical class is tracked explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class PicardLattice:
    labels: tuple
    gram: tuple
    canonical: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "gram", tuple(tuple(int(x) for x in row) for row in self.gram))
        object.__setattr__(self, "canonical", tuple(int(x) for x in self.canonical))
        r = len(self.labels)
        if len(self.gram) != r or any(len(row) != r for row in self.gram):
            raise DimensionMismatch("gram matrix does not match the basis")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(r) for j in range(r)):
            raise ValueError("gram matrix must be symmetric")
        if len(self.canonical) != r:
            raise DimensionMismatch("canonical class has the wrong length")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def cls(self, coords: Sequence) -> "DivClass":
        return DivClass(coords)

    def basis(self, label: str) -> "DivClass":
        i = self.labels.index(label)
        return DivClass([int(j == i) for j in range(self.rank)])

    @property
    def K(self) -> "DivClass":
        return DivClass(self.canonical)

    def exceptional(self) -> list["DivClass"]:
        return [self.basis(l) for l in self.labels if l.startswith("E")]


@dataclass(frozen=True)
class DivClass:
    coords: tuple = field()

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in self.coords))

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "DivClass") -> "DivClass":
        if len(other) != len(self):
            raise DimensionMismatch("classes of different rank")
        return DivClass([a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return DivClass([-a for a in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return DivClass([k * a for a in self.coords])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_even(self) -> bool:
        return all(a.denominator == 1 and a.numerator % 2 == 0 for a in self.coords)


def pairing(L: PicardLattice, A: DivClass, B: DivClass) -> Fraction:
    if len(A) != L.rank or len(B) != L.rank:
        raise DimensionMismatch(f"classes of rank {len(A)}, {len(B)} on a rank {L.rank} lattice")
    return sum(
        (A.coords[i] * L.gram[i][j] * B.coords[j] for i in range(L.rank) for j in range(L.rank)),
        Fraction(0),
    )


def ruled_quadric() -> PicardLattice:
    """P^1 x P^1 with the two rulings as basis."""
    return PicardLattice(("H1", "H2"), ((0, 1), (1, 0)), (-2, -2))


def blow_up_point(L: PicardLattice) -> PicardLattice:
    """Add an exceptional (-1)-class E orthogonal to everything; K gains +E."""
    r = L.rank
    n_exc = sum(1 for l in L.labels if l.startswith("E"))
    gram = [list(row) + [0] for row in L.gram] + [[0] * r + [-1]]
    return PicardLattice(L.labels + (f"E{n_exc}",), gram, L.canonical + (1,))


def blow_up_points(L: PicardLattice, k: int) -> PicardLattice:
    for _ in range(k):
        L = blow_up_point(L)
    return L


def pullback_class(lower: PicardLattice, upper: PicardLattice, A: DivClass) -> DivClass:
    """Pull a class back along a sequence of point blow-ups (pad with zeros)."""
    if len(A) != lower.rank or upper.labels[: lower.rank] != lower.labels:
        raise DimensionMismatch("upper lattice is not a blow-up of the lower one")
    return DivClass(A.coords + (0,) * (upper.rank - lower.rank))


def signature(L: PicardLattice) -> tuple[int, int]:
    """(positive, negative) inertia of the Gram matrix by exact congruence diagonalisation."""
    M = [[Fraction(x) for x in row] for row in L.gram]
    n = len(M)
    pos = neg = 0
    for t in range(n):
        if M[t][t] == 0:
            j = next((j for j in range(t + 1, n) if M[j][j] != 0), None)
            if j is not None:
                M[t], M[j] = M[j], M[t]
                for row in M:
                    row[t], row[j] = row[j], row[t]
            else:
                j = next((j for j in range(t + 1, n) if M[t][j] != 0), None)
                if j is None:
                    continue
                # e_t += e_j makes the diagonal entry 2 M[t][j] != 0
                M[t] = [a + b for a, b in zip(M[t], M[j])]
                for row in M:
                    row[t] += row[j]
        p = M[t][t]
        for i in range(t + 1, n):
            f = M[i][t] / p
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[t])]
                for row in M:
                    row[i] -= f * row[t]
        if p > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


def double_cover_report(points_on_line=(0, 1, 2, 3)) -> dict:
    """Numerical ledger for the (4,4) branch curve on P^1 x P^1 blown up at its 16 nodes.

    Returns the quantities as exact values; no verdict is asserted here.
    """
    Zp = ruled_quadric()
    Z = blow_up_points(Zp, 16)
    Bp = DivClass((4, 4))
    exc = Z.exceptional()
    B = pullback_class(Zp, Z, Bp) - 2 * sum(exc[1:], exc[0])
    L = B * Fraction(1, 2)
    KZ = Z.K
    descended = pullback_class(Zp, Z, Zp.K + Bp * Fraction(1, 2))
    fibre = DivClass((0, 1))
    C = pullback_class(Zp, Z, fibre)
    for i in points_on_line:
        C = C - exc[i]
    return {
        "K2_before": pairing(Zp, Zp.K, Zp.K),
        "K2_after": pairing(Z, KZ, KZ),
        "B": B,
        "B_even": B.is_even(),
        "K_plus_L": KZ + L,
        "pullback_K_plus_half_B": descended,
        "witness": C,
        "minus_K_dot_C": pairing(Z, -KZ, C),
        "C2": pairing(Z, C, C),
        "K_dot_C": pairing(Z, KZ, C),
        "signature": signature(Z),
    }
