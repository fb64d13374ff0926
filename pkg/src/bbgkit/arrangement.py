"""Subspaces of Q^m, inclusion-exclusion checks and the redundant-triple test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .linalg import nullspace, primitive_row, rank, rref


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RationalSubspace:
    """A subspace of Q^m stored by its reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis", "_equations")

    def __init__(self, ambient_dim: int, basis_rows: Sequence[Sequence] = ()):
        rows = [list(r) for r in basis_rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise InputError(f"row of length {len(r)} in Q^{ambient_dim}")
        red, _ = rref(rows, ambient_dim) if rows else ([], [])
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in red)
        self._equations = None

    @classmethod
    def from_basis(cls, ambient_dim, rows) -> "RationalSubspace":
        return cls(ambient_dim, rows)

    @classmethod
    def from_equations(cls, ambient_dim, rows) -> "RationalSubspace":
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise InputError(f"equation of length {len(r)} in Q^{ambient_dim}")
        return cls(ambient_dim, nullspace(rows, ambient_dim))

    @classmethod
    def whole(cls, ambient_dim) -> "RationalSubspace":
        return cls(ambient_dim, [[int(i == j) for j in range(ambient_dim)] for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def equations(self) -> tuple:
        """Integer rows cutting out the subspace: content-normalized RREF of the complement."""
        if self._equations is None:
            comp = nullspace(self.basis, self.ambient_dim) if self.basis else [
                [int(i == j) for j in range(self.ambient_dim)] for i in range(self.ambient_dim)
            ]
            red, _ = rref(comp, self.ambient_dim) if comp else ([], [])
            self._equations = tuple(sorted(primitive_row(r) for r in red))
        return self._equations

    def contains_vector(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise InputError("vector has the wrong length")
        return all(sum(Fraction(a) * Fraction(b) for a, b in zip(eq, v)) == 0 for eq in self.equations)

    def contains(self, other: "RationalSubspace") -> bool:
        _same_ambient(self, other)
        return all(self.contains_vector(v) for v in other.basis)

    def __eq__(self, other):
        return (
            isinstance(other, RationalSubspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"RationalSubspace(dim={self.dim} in Q^{self.ambient_dim})"

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "basis": [[_fmt(x) for x in r] for r in self.basis],
            "equations": [list(r) for r in self.equations],
        }


def _same_ambient(*spaces):
    dims = {s.ambient_dim for s in spaces}
    if len(dims) != 1:
        raise InputError(f"ambient dimensions differ: {sorted(dims)}")


def subspace_sum(a: RationalSubspace, b: RationalSubspace) -> RationalSubspace:
    _same_ambient(a, b)
    return RationalSubspace(a.ambient_dim, list(a.basis) + list(b.basis))


def orthogonal_complement(a: RationalSubspace) -> RationalSubspace:
    if not a.basis:
        return RationalSubspace.whole(a.ambient_dim)
    return RationalSubspace(a.ambient_dim, nullspace(a.basis, a.ambient_dim))


def intersect(a: RationalSubspace, b: RationalSubspace) -> RationalSubspace:
    _same_ambient(a, b)
    out = RationalSubspace.from_equations(a.ambient_dim, list(a.equations) + list(b.equations))
    if a.dim + b.dim != subspace_sum(a, b).dim + out.dim:
        raise AssertionError("Grassmann identity violated")
    return out


def intersect_all(spaces) -> RationalSubspace:
    spaces = list(spaces)
    _same_ambient(*spaces)
    eqs = [r for s in spaces for r in s.equations]
    return RationalSubspace.from_equations(spaces[0].ambient_dim, eqs)


def sum_all(spaces) -> RationalSubspace:
    spaces = list(spaces)
    _same_ambient(*spaces)
    return RationalSubspace(spaces[0].ambient_dim, [r for s in spaces for r in s.basis])


@dataclass(frozen=True)
class IepResult:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.equal))


def iep_check(spaces: Sequence[RationalSubspace]) -> IepResult:
    """dim of the sum against the alternating sum of intersection dimensions.

    Subsets are explored depth first; once an intersection is zero every
    larger subset contributes zero and is skipped.
    """
    spaces = list(spaces)
    if not spaces:
        raise InputError("need at least one subspace")
    _same_ambient(*spaces)
    lhs = sum_all(spaces).dim
    total = 0

    def walk(start, eqs, size):
        nonlocal total
        for i in range(start, len(spaces)):
            cur = eqs + list(spaces[i].equations)
            d = RationalSubspace.from_equations(spaces[0].ambient_dim, cur).dim
            if d == 0:
                continue
            total += d if size % 2 == 0 else -d
            walk(i + 1, cur, size + 1)

    walk(0, [], 0)
    return IepResult(lhs, total)


def iep3(w1, w2, w3) -> int:
    """Three-set inclusion-exclusion count with minus on every pairwise term."""
    _same_ambient(w1, w2, w3)
    return (
        w1.dim + w2.dim + w3.dim
        - intersect(w1, w2).dim - intersect(w1, w3).dim - intersect(w2, w3).dim
        + intersect_all([w1, w2, w3]).dim
    )


@dataclass(frozen=True)
class RedundantTripleReport:
    is_redundant: bool
    xi_vector: tuple
    k_spaces: dict  # "12", "23", "13" -> RationalSubspace of Q^{3m}
    iep3_value: int
    sum_dim: int
    inequality_holds: bool
    dichotomy_case: int | None  # None when redundant, or when neither case applies
    axes: tuple

    @property
    def dichotomy_holds(self) -> bool:
        """Trivially true for redundant triples."""
        return self.is_redundant or self.dichotomy_case is not None

    def to_json(self) -> dict:
        return {
            "is_redundant": self.is_redundant,
            "xi_vector": list(self.xi_vector),
            "k_dims": {k: v.dim for k, v in self.k_spaces.items()},
            "iep3": self.iep3_value,
            "sum_dim": self.sum_dim,
            "inequality_holds": self.inequality_holds,
            "dichotomy_case": self.dichotomy_case,
            "dichotomy_holds": self.dichotomy_holds,
            "axes": list(self.axes),
        }


def _unit(m, i):
    return [int(j == i) for j in range(m)]


def redundant_triple_test(w1, w2, w3, e1_axis: int, e2_axis: int) -> RedundantTripleReport:
    """Decide whether xi = (-e_a, e_b, e_a - e_b) avoids K12 + K23 + K13.

    K_ij embeds (W_i + W_j)^perp into three stacked copies of Q^m as
    u -> (u in slot i, -u in slot j).
    """
    _same_ambient(w1, w2, w3)
    m = w1.ambient_dim
    a, b = e1_axis, e2_axis
    if not (0 <= a < m and 0 <= b < m) or a == b:
        raise InputError("the two distinguished axes must be distinct coordinates")
    ea, eb = _unit(m, a), _unit(m, b)
    diff = [x - y for x, y in zip(ea, eb)]
    for w, normal, label in ((w1, ea, "W1 in {y_a = 0}"), (w2, eb, "W2 in {y_b = 0}"), (w3, diff, "W3 in {y_a - y_b = 0}")):
        if not all(sum(Fraction(x) * y for x, y in zip(v, normal)) == 0 for v in w.basis):
            raise InputError(f"containment {label} fails (a={a}, b={b})")
    ws = (w1, w2, w3)
    k_spaces = {}
    k_rows = []
    for i, j in ((0, 1), (1, 2), (0, 2)):
        perp = orthogonal_complement(subspace_sum(ws[i], ws[j]))
        rows = []
        for u in perp.basis:
            row = [Fraction(0)] * (3 * m)
            row[i * m:(i + 1) * m] = u
            row[j * m:(j + 1) * m] = [-x for x in u]
            rows.append(row)
        k_spaces[f"{i + 1}{j + 1}"] = RationalSubspace(3 * m, rows)
        k_rows.extend(rows)
    xi = tuple([-x for x in ea] + eb + diff)
    span_rank = rank(k_rows) if k_rows else 0
    with_xi = rank(k_rows + [list(xi)])
    redundant = with_xi > span_rank
    value = iep3(w1, w2, w3)
    sdim = sum_all(ws).dim
    holds = value >= sdim + 1
    case = None
    if redundant:
        if not holds:
            raise AssertionError("redundant triple with iep3 <= dim of the sum")
    else:
        perps = [orthogonal_complement(w) for w in ws]
        if all(p.contains_vector(ea) and p.contains_vector(eb) for p in perps):
            case = 1
        elif any(all(not w.contains_vector(_unit(m, k)) for w in ws) for k in range(m) if k not in (a, b)):
            case = 2
    return RedundantTripleReport(redundant, xi, k_spaces, value, sdim, holds, case, (a, b))
