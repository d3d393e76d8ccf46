"""Skew lattices of idempotent matrices over GF(p), p an odd prime.

Meet is matrix multiplication; join is the quadratic nabla operation
x nabla y = (x + y - xy)^2.  Includes the primitive block-form
constructors, triangular factorizations, and the block-entry coset
criteria checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SkewLattice, validate
from .errors import (
    ClosureExceedsCap,
    DimensionMismatch,
    FieldMismatch,
    InternalInconsistency,
    NotAPrimeField,
    NotASkewLattice,
    NotIdempotent,
    NotInStandardForm,
)
from .reports import ConcordanceReport, Record

DEFAULT_MODULUS_CAP = 97
DEFAULT_CLOSURE_CAP = 512


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise NotAPrimeField(f"{self.p} is not prime")
        if self.p == 2:
            raise NotAPrimeField("modulus 2 not supported (characteristic 2)")
        if self.p > DEFAULT_MODULUS_CAP:
            raise NotAPrimeField(f"modulus {self.p} exceeds cap {DEFAULT_MODULUS_CAP}")


@dataclass(frozen=True)
class PrimeFieldMatrix:
    p: int
    entries: tuple  # tuple of row tuples, residues mod p

    def __post_init__(self):
        PrimeField(self.p)
        n = len(self.entries)
        rows = tuple(tuple(v % self.p for v in row) for row in self.entries)
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, p, n):
        return cls(p, tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, p, n):
        return cls(p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def _compat(self, other):
        if self.p != other.p:
            raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")

    def __add__(self, other):
        self._compat(other)
        return PrimeFieldMatrix(
            self.p,
            tuple(
                tuple(a + b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other):
        self._compat(other)
        return PrimeFieldMatrix(
            self.p,
            tuple(
                tuple(a - b for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __matmul__(self, other):
        self._compat(other)
        n = self.dim
        a, b = self.entries, other.entries
        return PrimeFieldMatrix(
            self.p,
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            ),
        )

    def is_idempotent(self) -> bool:
        return self @ self == self

    def block(self, row_range, col_range):
        return tuple(
            tuple(self.entries[i][j] for j in col_range) for i in row_range
        )

    def to_json_dict(self):
        return {"p": self.p, "dim": self.dim, "rows": [list(r) for r in self.entries]}


def circle(x: PrimeFieldMatrix, y: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """x + y - xy."""
    return x + y - x @ y


def nabla(x: PrimeFieldMatrix, y: PrimeFieldMatrix) -> PrimeFieldMatrix:
    """(x + y - xy)^2, cross-checked against its expanded quintic form
    x + y + yx - xyx - yxy (valid for idempotent x, y)."""
    c = circle(x, y)
    sq = c @ c
    if x.is_idempotent() and y.is_idempotent():
        expanded = x + y + y @ x - x @ y @ x - y @ x @ y
        if sq != expanded:
            raise InternalInconsistency("nabla expansion mismatch")
    return sq


@dataclass(frozen=True)
class MatrixSkewLattice:
    elements: tuple  # PrimeFieldMatrix, index order matches `abstract`
    abstract: SkewLattice
    origin: str

    def index(self, m: PrimeFieldMatrix) -> int:
        return self.elements.index(m)

    def to_json_dict(self):
        from .core import to_json_dict

        return {
            "origin": self.origin,
            "matrices": [m.to_json_dict() for m in self.elements],
            "abstract": to_json_dict(self.abstract),
        }


def closure(
    generators, origin: str = "closure", cap: int = DEFAULT_CLOSURE_CAP
) -> MatrixSkewLattice:
    """Least set of matrices containing the generators and closed under
    multiplication and nabla, validated as a skew lattice."""
    gens = list(generators)
    if not gens:
        raise DimensionMismatch("need at least one generator")
    for i, g in enumerate(gens):
        if not g.is_idempotent():
            raise NotIdempotent(f"generator {i} is not idempotent")
    elems = []
    seen = set()
    for g in gens:
        if g not in seen:
            seen.add(g)
            elems.append(g)
    frontier = list(elems)
    while frontier:
        new = []
        for x in frontier:
            for y in elems:
                for z in (x @ y, y @ x, nabla(x, y), nabla(y, x)):
                    if z not in seen:
                        seen.add(z)
                        new.append(z)
        elems.extend(new)
        if len(elems) > cap:
            raise ClosureExceedsCap(f"closure exceeds {cap} elements")
        frontier = new
    idx = {m: i for i, m in enumerate(elems)}
    n = len(elems)
    meet = [[idx[elems[i] @ elems[j]] for j in range(n)] for i in range(n)]
    join = [[idx[nabla(elems[i], elems[j])] for j in range(n)] for i in range(n)]
    report = validate(meet, join)
    if not report.valid:
        raise NotASkewLattice(report)
    return MatrixSkewLattice(
        elements=tuple(elems),
        abstract=SkewLattice(meet, join),
        origin=origin,
    )


# --- primitive block constructions ---------------------------------------


def _ranges(block_dims):
    n1, n2, n3 = block_dims
    if min(n1, n2, n3) < 0:
        raise DimensionMismatch("block sizes must be nonnegative")
    r1 = range(0, n1)
    r2 = range(n1, n1 + n2)
    r3 = range(n1 + n2, n1 + n2 + n3)
    return r1, r2, r3


def _as_block(p, rows, cols, data):
    if data is None:
        data = tuple((0,) * cols for _ in range(rows))
    data = tuple(tuple(v % p for v in row) for row in data)
    if len(data) != rows or any(len(r) != cols for r in data):
        raise DimensionMismatch(f"block must be {rows}x{cols}")
    return data


def _assemble(p, block_dims, blocks):
    """Build the full matrix from a dict {(i, j): block} of 1-based block
    positions; missing blocks are zero."""
    n1, n2, n3 = block_dims
    dims = (n1, n2, n3)
    n = sum(dims)
    rows = [[0] * n for _ in range(n)]
    starts = (0, n1, n1 + n2)
    for (bi, bj), data in blocks.items():
        data = _as_block(p, dims[bi - 1], dims[bj - 1], data)
        for i, row in enumerate(data):
            for j, v in enumerate(row):
                rows[starts[bi - 1] + i][starts[bj - 1] + j] = v
    return PrimeFieldMatrix(p, tuple(tuple(r) for r in rows))


def _eye(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def upper_class_matrix(p, block_dims, a13=None, a23=None) -> PrimeFieldMatrix:
    """[[I,0,a13],[0,I,a23],[0,0,0]] — the right-handed upper-class form."""
    n1, n2, _ = block_dims
    return _assemble(
        p, block_dims, {(1, 1): _eye(n1), (2, 2): _eye(n2), (1, 3): a13, (2, 3): a23}
    )


def lower_class_matrix(p, block_dims, b12=None, b13=None) -> PrimeFieldMatrix:
    """[[I,b12,b13],[0,0,0],[0,0,0]] — the right-handed lower-class form."""
    n1, _, _ = block_dims
    return _assemble(
        p, block_dims, {(1, 1): _eye(n1), (1, 2): b12, (1, 3): b13}
    )


def upper_class_matrix_left(p, block_dims, a31=None, a32=None) -> PrimeFieldMatrix:
    """[[I,0,0],[0,I,0],[a31,a32,0]] — the left-handed upper-class form."""
    n1, n2, _ = block_dims
    return _assemble(
        p, block_dims, {(1, 1): _eye(n1), (2, 2): _eye(n2), (3, 1): a31, (3, 2): a32}
    )


def lower_class_matrix_left(p, block_dims, b21=None, b31=None) -> PrimeFieldMatrix:
    """[[I,0,0],[b21,0,0],[b31,0,0]] — the left-handed lower-class form."""
    n1, _, _ = block_dims
    return _assemble(
        p, block_dims, {(1, 1): _eye(n1), (2, 1): b21, (3, 1): b31}
    )


def _check_primitive(msl: MatrixSkewLattice):
    from ._bits import bits
    from .greens import dclass_order

    d, leq = dclass_order(msl.abstract)
    if len(d.blocks) != 2:
        raise InternalInconsistency(
            f"expected exactly 2 classes, found {len(d.blocks)}"
        )
    comparable = leq[0][1] or leq[1][0]
    if not comparable:
        raise InternalInconsistency("the two classes are not comparable")
    upper_block = d.blocks[1] if leq[0][1] else d.blocks[0]
    lower_block = d.blocks[0] if leq[0][1] else d.blocks[1]
    return frozenset(bits(upper_block)), frozenset(bits(lower_block))


def primitive_right_handed(
    p: int, block_dims, a_params, b_params
) -> MatrixSkewLattice:
    """Closure of matrices in the right-handed block forms: each a-param is
    an (a13, a23) pair, each b-param a (b12, b13) pair; the diagonal
    idempotents a0, b0 are always included.  Verified primitive (two
    comparable classes) and right-handed."""
    gens = [upper_class_matrix(p, block_dims), lower_class_matrix(p, block_dims)]
    for a13, a23 in a_params:
        gens.append(upper_class_matrix(p, block_dims, a13, a23))
    for b12, b13 in b_params:
        gens.append(lower_class_matrix(p, block_dims, b12, b13))
    msl = closure(gens, origin=f"primitive-right-handed GF({p}) {tuple(block_dims)}")
    _check_primitive(msl)
    from .varieties import is_right_handed

    ok, _ = is_right_handed(msl.abstract)
    if not ok:
        raise InternalInconsistency("constructed algebra is not right-handed")
    # in the right-handed case nabla reduces to circle
    for x in msl.elements:
        for y in msl.elements:
            if nabla(x, y) != circle(x, y):
                raise InternalInconsistency("nabla differs from circle")
    return msl


def primitive_left_handed(
    p: int, block_dims, a_params, b_params
) -> MatrixSkewLattice:
    """Mirror of the right-handed constructor: a-params are (a31, a32)
    pairs, b-params are (b21, b31) pairs."""
    gens = [
        upper_class_matrix_left(p, block_dims),
        lower_class_matrix_left(p, block_dims),
    ]
    for a31, a32 in a_params:
        gens.append(upper_class_matrix_left(p, block_dims, a31, a32))
    for b21, b31 in b_params:
        gens.append(lower_class_matrix_left(p, block_dims, b21, b31))
    msl = closure(gens, origin=f"primitive-left-handed GF({p}) {tuple(block_dims)}")
    _check_primitive(msl)
    from .varieties import is_left_handed

    ok, _ = is_left_handed(msl.abstract)
    if not ok:
        raise InternalInconsistency("constructed algebra is not left-handed")
    return msl


# --- triangular factorization --------------------------------------------


def triangular_factorization(m: PrimeFieldMatrix, block_dims):
    """Split m into its lower- and upper-triangular block factors,
    m = m_L @ m_R, according to which standard form m matches."""
    r1, r2, r3 = _ranges(block_dims)
    p = m.p
    if m.dim != len(r1) + len(r2) + len(r3):
        raise DimensionMismatch("block sizes do not sum to matrix dimension")
    e1, e2 = _eye(len(r1)), _eye(len(r2))
    zero12 = _as_block(p, len(r1), len(r2), None)

    if m.block(r1, r1) == e1 and m.block(r2, r2) == e2 and m.block(r1, r2) == zero12 and m.block(r2, r1) == _as_block(p, len(r2), len(r1), None):
        # upper-class form: check the (3,3) consistency block
        a13, a23 = m.block(r1, r3), m.block(r2, r3)
        a31, a32 = m.block(r3, r1), m.block(r3, r2)
        m_l = upper_class_matrix_left(p, block_dims, a31, a32)
        m_r = upper_class_matrix(p, block_dims, a13, a23)
        if m != m_l @ m_r:
            raise NotInStandardForm("corner block is not a31*a13 + a32*a23")
    elif m.block(r1, r1) == e1:
        # lower-class form: rows 2 and 3 must be b21/b31 multiples of row 1
        b12, b13 = m.block(r1, r2), m.block(r1, r3)
        b21, b31 = m.block(r2, r1), m.block(r3, r1)
        m_l = lower_class_matrix_left(p, block_dims, b21, b31)
        m_r = lower_class_matrix(p, block_dims, b12, b13)
        if m != m_l @ m_r:
            raise NotInStandardForm("off-diagonal blocks are not rank-one products")
    else:
        raise NotInStandardForm("diagonal blocks match neither standard form")
    if not (m_l.is_idempotent() and m_r.is_idempotent()):
        raise InternalInconsistency("triangular factor is not idempotent")
    return m_l, m_r


# --- block-entry coset criteria ------------------------------------------


def matrix_coset_remark_check(
    msl: MatrixSkewLattice, block_dims
) -> ConcordanceReport:
    """Compare abstract coset equalities with the stated block-entry
    equalities, for every pair in each class."""
    from .cosets import (
        DClassPair,
        full_coset_join,
        full_coset_meet,
        left_coset_join,
        left_coset_meet,
        right_coset_join,
        right_coset_meet,
    )

    r1, r2, r3 = _ranges(block_dims)
    for m in msl.elements:
        if m.dim != len(r1) + len(r2) + len(r3):
            raise NotInStandardForm("block sizes do not sum to matrix dimension")
    upper, lower = _check_primitive(msl)
    pair = DClassPair(upper=upper, lower=lower)
    s = msl.abstract
    blk = lambda i, rr, cc: msl.elements[i].block(rr, cc)
    records = []
    for x in sorted(lower):
        for y in sorted(lower):
            records.append(
                Record(
                    ("full-lower", x, y),
                    full_coset_meet(s, upper, x) == full_coset_meet(s, upper, y),
                    blk(x, r2, r1) == blk(y, r2, r1)
                    and blk(x, r1, r2) == blk(y, r1, r2),
                )
            )
            records.append(
                Record(
                    ("right-lower", x, y),
                    right_coset_meet(s, upper, x) == right_coset_meet(s, upper, y),
                    blk(x, r2, r1) == blk(y, r2, r1)
                    and blk(x, r3, r1) == blk(y, r3, r1)
                    and blk(x, r1, r2) == blk(y, r1, r2),
                )
            )
            records.append(
                Record(
                    ("left-lower", x, y),
                    left_coset_meet(s, upper, x) == left_coset_meet(s, upper, y),
                    blk(x, r2, r1) == blk(y, r2, r1)
                    and blk(x, r1, r2) == blk(y, r1, r2)
                    and blk(x, r1, r3) == blk(y, r1, r3),
                )
            )
    for u in sorted(upper):
        for v in sorted(upper):
            records.append(
                Record(
                    ("full-upper", u, v),
                    full_coset_join(s, lower, u) == full_coset_join(s, lower, v),
                    blk(u, r3, r2) == blk(v, r3, r2)
                    and blk(u, r2, r3) == blk(v, r2, r3),
                )
            )
            records.append(
                Record(
                    ("right-upper", u, v),
                    right_coset_join(s, lower, u) == right_coset_join(s, lower, v),
                    blk(u, r3, r1) == blk(v, r3, r1)
                    and blk(u, r3, r2) == blk(v, r3, r2)
                    and blk(u, r2, r3) == blk(v, r2, r3),
                )
            )
            records.append(
                Record(
                    ("left-upper", u, v),
                    left_coset_join(s, lower, u) == left_coset_join(s, lower, v),
                    blk(u, r3, r2) == blk(v, r3, r2)
                    and blk(u, r1, r3) == blk(v, r1, r3)
                    and blk(u, r2, r3) == blk(v, r2, r3),
                )
            )
    return ConcordanceReport(
        law="matrix-block-coset-criteria",
        algebra=msl.origin,
        records=tuple(records),
    )
