"""Bidegree-wise arithmetic for mod-2 Bredon cohomology building blocks.

In RO(C2)-graded Bredon cohomology with constant Z/2 coefficients, the
cohomology of any finite C2-CW complex decomposes, as a module over the
cohomology of a point, into a finite direct sum of shifted copies of two
families:

* ``M2``, the cohomology of a fixed point.  It is nonzero on two cones:
  a *top cone* ``p >= 0, q >= p``, polynomial on the generators rho in
  bidegree (1, 1) and tau in bidegree (0, 1), and a *bottom cone*
  ``p <= 0, q <= p - 2`` consisting of the classes theta/(rho^i tau^j)
  sitting under the element theta in bidegree (0, -2).

* ``A_n``, the cohomology of the n-sphere with the antipodal involution,
  isomorphic to ``tau^{-1} M2 / (rho^{n+1})``: the n+1 full columns
  ``0 <= p <= n``, with tau acting invertibly and rho nilpotent.

Dimensions and generator-multiplication ranks are total functions of the
bidegree; nothing here materializes a grid (the modules are unbounded in
the weight q).  Windows exist only for rendering and verification sweeps.

All values are immutable and every operation is a pure function, so the
whole module is safe to use from concurrent threads without locking.

>>> m2_dim(Bidegree(0, 0)), m2_dim(Bidegree(1, 0)), m2_dim(Bidegree(0, -2))
(1, 0, 1)
>>> an_dim(2, Bidegree(2, -7))
1
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Bidegree:
    """An (p, q) index: p is the topological dimension, q the weight."""

    p: int
    q: int

    def __add__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(self.p - other.p, self.q - other.q)

    def __repr__(self) -> str:
        return f"({self.p},{self.q})"


ZERO = Bidegree(0, 0)


def _as_bidegree(b) -> Bidegree:
    if isinstance(b, Bidegree):
        return b
    p, q = b
    return Bidegree(p, q)


# ---------------------------------------------------------------------------
# The point module M2.
#
# Top cone: rho^p tau^(q-p) for p >= 0, q >= p.
# Bottom cone: theta/(rho^i tau^j) in bidegree (-i, -2-i-j), i.e. the
# region p <= 0, q <= p - 2.  The two regions are disjoint.


def m2_dim(b: Bidegree) -> int:
    """Dimension (0 or 1) of the point module in bidegree ``b``.

    >>> [m2_dim(Bidegree(0, q)) for q in range(-4, 3)]
    [1, 1, 1, 0, 1, 1, 1]
    """
    if b.p >= 0 and b.q >= b.p:
        return 1
    if b.p <= 0 and b.q <= b.p - 2:
        return 1
    return 0


def m2_rho_rank(b: Bidegree) -> int:
    """Rank of multiplication by rho from bidegree ``b`` to ``b + (1, 1)``.

    Within each cone a generator multiplies injectively, so the rank is 1
    exactly when source and target groups are both nonzero.  On the bottom
    cone, rho sends theta/(rho^i tau^j) to theta/(rho^(i-1) tau^j), which
    dies only when i = 0, i.e. in the column p = 0.
    """
    if b.p >= 0 and b.q >= b.p:
        return 1
    if b.p <= -1 and b.q <= b.p - 2:
        return 1
    return 0


def m2_tau_rank(b: Bidegree) -> int:
    """Rank of multiplication by tau from bidegree ``b`` to ``b + (0, 1)``.

    tau kills theta/(rho^i) (the top edge of the bottom cone, q = p - 2)
    because the target group there is zero; everywhere else it is nonzero
    wherever the source is.
    """
    if b.p >= 0 and b.q >= b.p:
        return 1
    if b.p <= 0 and b.q <= b.p - 3:
        return 1
    return 0


# ---------------------------------------------------------------------------
# The antipodal modules A_n = tau^{-1} M2 / (rho^{n+1}).


def an_dim(n: int, b: Bidegree) -> int:
    """Dimension of A_n in bidegree ``b``: the n+1 columns 0 <= p <= n."""
    return 1 if 0 <= b.p <= n else 0


def an_rho_rank(n: int, b: Bidegree) -> int:
    """rho maps column p isomorphically to column p+1, until rho^{n+1} = 0."""
    return 1 if 0 <= b.p <= n - 1 else 0


def an_tau_rank(n: int, b: Bidegree) -> int:
    """tau acts invertibly on A_n, hence rank 1 on every nonzero column."""
    return 1 if 0 <= b.p <= n else 0


# ---------------------------------------------------------------------------
# Summands and decompositions.


@dataclass(frozen=True)
class Summand:
    """A shifted copy of M2 (``n is None``) or of A_n (``n >= 0``).

    ``Summand(Bidegree(p, q))`` is the suspension by (p, q) of the point
    module; ``Summand(Bidegree(p, q), n)`` the suspension of A_n.  Since
    tau is invertible on A_n, a weight shift of an antipodal summand is
    isomorphic to the unshifted one; ``canonical()`` normalizes q to 0.
    """

    shift: Bidegree
    n: int | None = None

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise ValueError("antipodal index must be a natural number")

    @classmethod
    def free(cls, p: int, q: int) -> "Summand":
        return cls(Bidegree(p, q))

    @classmethod
    def antipodal(cls, p: int, n: int, q: int = 0) -> "Summand":
        return cls(Bidegree(p, q), n)

    @property
    def is_free(self) -> bool:
        return self.n is None

    def dim_at(self, b: Bidegree) -> int:
        rel = b - self.shift
        return m2_dim(rel) if self.n is None else an_dim(self.n, rel)

    def rho_rank_at(self, b: Bidegree) -> int:
        rel = b - self.shift
        return m2_rho_rank(rel) if self.n is None else an_rho_rank(self.n, rel)

    def tau_rank_at(self, b: Bidegree) -> int:
        rel = b - self.shift
        return m2_tau_rank(rel) if self.n is None else an_tau_rank(self.n, rel)

    def canonical(self) -> "Summand":
        if self.n is None or self.shift.q == 0:
            return self
        return Summand(Bidegree(self.shift.p, 0), self.n)

    def sort_key(self):
        # Free summands before antipodal ones, then (p, q, n) lexicographic.
        s = self.canonical()
        return (0 if s.n is None else 1, s.shift.p, s.shift.q, -1 if s.n is None else s.n)

    def __str__(self) -> str:
        core = "M2" if self.n is None else f"A{self.n}"
        if self.shift != ZERO:
            return f"S({self.shift.p},{self.shift.q}){core}"
        return core


class Decomposition:
    """A finite formal multiset of summands; the empty one is the zero module.

    Instances are immutable.  Equality is multiset equality after
    canonicalization, so e.g. ``S(1,1)A0`` and ``S(1,0)A0`` give equal
    decompositions.

    >>> x1 = Decomposition([Summand.free(0, 0), Summand.free(1, 0),
    ...                     Summand.free(1, 1), Summand.free(2, 1)])
    >>> x1.dim_at((1, 0)), x1.dim_at((1, 1))
    (1, 3)
    >>> print(x1)
    M2 + S(1,0)M2 + S(1,1)M2 + S(2,1)M2
    """

    __slots__ = ("_counts",)

    def __init__(self, summands: Iterable[Summand] = ()):
        counts = Counter()
        if isinstance(summands, (Counter, dict)):
            for s, c in summands.items():
                if c < 0:
                    raise ValueError("negative multiplicity")
                if c:
                    counts[s] += c
        else:
            counts.update(summands)
        object.__setattr__(self, "_counts", counts)

    # -- multiset access ----------------------------------------------------

    def items(self) -> Iterator[tuple[Summand, int]]:
        """Distinct summands with multiplicities, in canonical order."""
        merged = Counter()
        for s, c in self._counts.items():
            merged[s.canonical()] += c
        return iter(sorted(merged.items(), key=lambda it: it[0].sort_key()))

    def __len__(self) -> int:
        return sum(self._counts.values())

    def count(self, summand: Summand) -> int:
        merged = Counter()
        for s, c in self._counts.items():
            merged[s.canonical()] += c
        return merged[summand.canonical()]

    def free_shifts(self) -> list[Bidegree]:
        """Shifts of the free summands, with multiplicity."""
        out = []
        for s, c in self._counts.items():
            if s.is_free:
                out.extend([s.shift] * c)
        out.sort(key=lambda b: (b.p, b.q))
        return out

    # -- pointwise evaluation ----------------------------------------------

    def dim_at(self, b) -> int:
        """Total dimension in bidegree ``b`` (suspension shifts applied)."""
        b = _as_bidegree(b)
        return sum(c * s.dim_at(b) for s, c in self._counts.items())

    def rank_at(self, b, generator: str) -> int:
        """Rank of multiplication by ``generator`` ("rho" or "tau") at ``b``.

        Valid because the module really is the direct sum: the map splits
        summand by summand.
        """
        b = _as_bidegree(b)
        if generator == "rho":
            return sum(c * s.rho_rank_at(b) for s, c in self._counts.items())
        if generator == "tau":
            return sum(c * s.tau_rank_at(b) for s, c in self._counts.items())
        raise ValueError(f"unknown generator {generator!r}")

    # -- algebra -------------------------------------------------------------

    def canonicalize(self) -> "Decomposition":
        """Normalize antipodal weights to 0.  Idempotent; preserves dim_at
        and rank_at in every bidegree."""
        return Decomposition(dict(self.items()))

    def direct_sum(self, other: "Decomposition") -> "Decomposition":
        return Decomposition(self._counts + other._counts)

    __add__ = direct_sum

    def suspend(self, s) -> "Decomposition":
        s = _as_bidegree(s)
        shifted = Counter()
        for summand, c in self._counts.items():
            shifted[Summand(summand.shift + s, summand.n)] += c
        return Decomposition(shifted).canonicalize()

    def remove(self, summand: Summand, count: int = 1) -> "Decomposition":
        """A copy with ``count`` copies of ``summand`` removed.

        Raises KeyError if the decomposition does not contain them.
        """
        merged = Counter(dict(self.items()))
        key = summand.canonical()
        if merged[key] < count:
            raise KeyError(f"decomposition has no summand {summand}")
        merged[key] -= count
        return Decomposition(+merged)

    # -- comparison / serialization ------------------------------------------

    def _canonical_tuple(self):
        return tuple(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._canonical_tuple() == other._canonical_tuple()

    def __hash__(self) -> int:
        return hash(self._canonical_tuple())

    def __str__(self) -> str:
        parts = []
        for s, c in self.items():
            parts.append(str(s) + (f"^{c}" if c > 1 else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Decomposition<{self}>"

    def to_json_obj(self) -> dict:
        """The wire format: {"free": [[p,q,count],...], "antipodal": [[p,n,count],...]},
        entries in canonical order."""
        free, anti = [], []
        for s, c in self.items():
            if s.is_free:
                free.append([s.shift.p, s.shift.q, c])
            else:
                anti.append([s.shift.p, s.n, c])
        return {"free": free, "antipodal": anti}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Decomposition":
        counts = Counter()
        for p, q, c in obj.get("free", ()):
            counts[Summand.free(p, q)] += c
        for p, n, c in obj.get("antipodal", ()):
            counts[Summand.antipodal(p, n)] += c
        return cls(counts)


def _glyph(value: int) -> str:
    if value == 0:
        return "."
    if value > 9:
        return "+"
    return str(value)


def render_grid(d: Decomposition, p_range: tuple[int, int], q_range: tuple[int, int]) -> str:
    """Plot dimensions over a finite window as text, one character per
    bidegree: '.' for zero, digits, '+' for 10 or more.  Rows run from the
    top weight down, columns left to right in p."""
    pmin, pmax = p_range
    qmin, qmax = q_range
    if pmin > pmax or qmin > qmax:
        raise ValueError(f"inverted window p={p_range} q={q_range}")
    lines = []
    for q in range(qmax, qmin - 1, -1):
        lines.append("".join(_glyph(d.dim_at(Bidegree(p, q))) for p in range(pmin, pmax + 1)))
    return "\n".join(lines)
