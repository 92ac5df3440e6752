"""Exact linear algebra over Q and GF(p), boundary matrices, reduced homology.

Ranks are computed exactly: fraction-free (Bareiss) elimination on integer
matrices over Q, and modular Gaussian elimination over GF(p).  No floating
point anywhere.  Reduced simplicial homology dimensions follow from the
boundary ranks; a global cache keyed by the facet family makes the repeated
link/restriction homology lookups of the Cohen-Macaulay sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import SimplicialComplex
from .errors import VoidComplexError

_MAX_PRIME = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q (characteristic 0) or GF(p) for a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p >= _MAX_PRIME:
            raise ValueError(f"prime fields are limited to p < 2^31, got {p}")
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, flag: str) -> "FieldSpec":
        """Parse the CLI syntax: `q` for Q, `p:<prime>` for GF(p)."""
        if flag == "q":
            return cls(0)
        if flag.startswith("p:"):
            try:
                return cls(int(flag[2:]))
            except ValueError as e:
                raise ValueError(f"bad field flag {flag!r}: {e}") from None
        raise ValueError(f"bad field flag {flag!r}: expected `q` or `p:<prime>`")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    def normalize(self, value):
        """Canonical representative of ``value`` in this field."""
        if self.characteristic:
            return _mod_p(value, self.characteristic)
        return value


QQ = FieldSpec.rationals()
GF2 = FieldSpec.prime(2)


class SparseMatrix:
    """Sparse matrix with exact entries (ints or Fractions)."""

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], object] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) out of bounds")
            if v != 0:
                self.entries[(r, c)] = v

    @classmethod
    def from_rows(cls, data: list[list]) -> "SparseMatrix":
        rows = len(data)
        cols = len(data[0]) if data else 0
        entries = {}
        for r, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v != 0:
                    entries[(r, c)] = v
        return cls(rows, cols, entries)

    def to_rows(self) -> list[list]:
        data = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            data[r][c] = v
        return data

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"


def rank(matrix: SparseMatrix, fieldspec: FieldSpec) -> int:
    """Exact rank of ``matrix`` over the given field."""
    if matrix.rows == 0 or matrix.cols == 0 or not matrix.entries:
        return 0
    data = matrix.to_rows()
    if fieldspec.characteristic:
        return _rank_mod_p(data, fieldspec.characteristic)
    return _rank_rational(data)


def _mod_p(value, p: int) -> int:
    """Image of an exact scalar in GF(p); fraction denominators are inverted."""
    if isinstance(value, Fraction):
        den = value.denominator % p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
        return value.numerator * pow(den, -1, p) % p
    return int(value) % p


def _rank_mod_p(data: list[list], p: int) -> int:
    rows = [[_mod_p(v, p) for v in row] for row in data]
    m, n = len(rows), len(rows[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = rows[r]
        if inv != 1:
            rows[r] = prow = [(v * inv) % p for v in prow]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        r += 1
        if r == m:
            break
    return r


def _rank_rational(data: list[list]) -> int:
    # Clear denominators row by row; row scaling preserves rank.
    rows: list[list[int]] = []
    for row in data:
        if any(isinstance(v, Fraction) for v in row):
            lcm = 1
            for v in row:
                if isinstance(v, Fraction):
                    d = v.denominator
                    lcm = lcm * d // _gcd(lcm, d)
            rows.append([int(v * lcm) for v in row])
        else:
            rows.append([int(v) for v in row])
    return _rank_bareiss(rows)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Bareiss fraction-free elimination; mutates ``rows``."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    prev = 1
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, m):
            f = rows[i][c]
            ri = rows[i]
            # rows with a zero pivot entry still need the exact p/prev rescale
            if f:
                rows[i] = [(p * a - f * b) // prev for a, b in zip(ri, prow)]
            elif prev != 1 and p != prev:
                rows[i] = [(p * a) // prev for a in ri]
            elif p != prev:
                rows[i] = [p * a for a in ri]
        prev = p
        r += 1
        if r == m:
            break
    return r


# -- boundary matrices and homology ---------------------------------------------


@dataclass(frozen=True)
class HomologyVector:
    """Dimensions of reduced homology, indexed i = -1, 0, .., top_dim."""

    dims: tuple[int, ...]

    def degree(self, i: int) -> int:
        j = i + 1
        if 0 <= j < len(self.dims):
            return self.dims[j]
        return 0

    __getitem__ = degree

    @property
    def top_dim(self) -> int:
        return len(self.dims) - 2

    def as_dict(self) -> dict[int, int]:
        return {i - 1: d for i, d in enumerate(self.dims)}

    def is_zero(self) -> bool:
        return not any(self.dims)


def boundary_matrix(delta: SimplicialComplex, i: int, fieldspec: FieldSpec) -> SparseMatrix:
    """Matrix of the i-th boundary map, bases in lexicographic vertex-tuple order.

    Rows are indexed by (i-1)-faces, columns by i-faces; i = 0 gives the
    augmentation onto the empty face.
    """
    if delta.is_void:
        raise VoidComplexError("the void complex has no boundary maps")
    if not 0 <= i <= delta.dimension():
        raise ValueError(f"need 0 <= i <= {delta.dimension()}")
    rows = sorted(tuple(sorted(f)) for f in delta.faces(i - 1))
    cols = sorted(tuple(sorted(f)) for f in delta.faces(i))
    row_index = {f: r for r, f in enumerate(rows)}
    entries: dict[tuple[int, int], object] = {}
    for c, face in enumerate(cols):
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            entries[(row_index[sub], c)] = fieldspec.normalize((-1) ** j)
    return SparseMatrix(len(rows), len(cols), entries)


def reduced_homology(delta: SimplicialComplex, fieldspec: FieldSpec) -> HomologyVector:
    """Reduced homology dimensions of a nonvoid complex over the field."""
    if delta.is_void:
        raise VoidComplexError("the void complex has no homology")
    return HomologyVector(homology_dims_of_facets(delta.facet_masks(), fieldspec))


# Cache of homology computations keyed by (facet bitmask family, characteristic).
# Link and restriction families repeat heavily across Cohen-Macaulay sweeps.
_HOMOLOGY_CACHE: dict[tuple[frozenset[int], int], tuple[int, ...]] = {}


def homology_dims_of_facets(facet_masks: frozenset[int], fieldspec: FieldSpec) -> tuple[int, ...]:
    """Reduced homology dims (degree -1 first) of the complex generated by
    ``facet_masks``; the empty family means the empty complex {emptyset}."""
    key = (facet_masks, fieldspec.characteristic)
    hit = _HOMOLOGY_CACHE.get(key)
    if hit is not None:
        return hit
    dims = _homology_dims(facet_masks, fieldspec)
    _HOMOLOGY_CACHE[key] = dims
    return dims


def faces_by_card(facet_masks: frozenset[int]) -> list[list[int]]:
    """All face bitmasks grouped by cardinality (index 0 holds the empty face)."""
    top = max((m.bit_count() for m in facet_masks), default=0)
    seen: set[int] = set()
    by_card: list[list[int]] = [[] for _ in range(top + 1)]
    for fm in facet_masks:
        sub = fm
        while True:
            if sub not in seen:
                seen.add(sub)
                by_card[sub.bit_count()].append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    for level in by_card:
        level.sort()
    return by_card


def _homology_dims(facet_masks: frozenset[int], fieldspec: FieldSpec) -> tuple[int, ...]:
    if not facet_masks:
        return (1,)  # the empty complex: only the empty face
    # Single facet: a simplex, contractible unless it is the empty complex.
    if len(facet_masks) == 1:
        top = next(iter(facet_masks)).bit_count() - 1
        if top == -1:
            return (1,)
        return (0,) * (top + 2)
    by_card = faces_by_card(facet_masks)
    top = len(by_card) - 1  # top cardinality; dimension is top-1
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary from card k to card k-1
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(by_card[k], by_card[k - 1], fieldspec)
    dims = []
    for k in range(0, top + 1):  # cardinality k <-> degree k-1
        dims.append(len(by_card[k]) - ranks[k] - ranks[k + 1])
    return tuple(dims)


def _boundary_rank(cells: list[int], below: list[int], fieldspec: FieldSpec) -> int:
    if not cells or not below:
        return 0
    index = {m: i for i, m in enumerate(below)}
    ncols = len(below)
    rows = []
    for cell in cells:
        row = [0] * ncols
        sign = 1
        rem = cell
        while rem:
            bit = rem & (-rem)
            row[index[cell ^ bit]] = sign
            sign = -sign
            rem ^= bit
        rows.append(row)
    # rank of the transpose equals the rank
    if fieldspec.characteristic:
        return _rank_mod_p(rows, fieldspec.characteristic)
    return _rank_bareiss(rows)
