"""Exact integer and field linear algebra.

Integer matrices are plain row-major lists of Python ints wrapped in
:class:`IntMatrix`. Hermite and Smith normal forms are computed with
unimodular row/column operations driven by the extended gcd; ranks and
row echelon forms over Q and GF(p) are delegated to sympy's DomainMatrix.
"""

import logging
from fractions import Fraction

from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from tropfan.errors import InconsistencyError, InputError, NotAComplexError

logger = logging.getLogger(__name__)


class Ring:
    """Coefficient ring tag: Z, Q or Fp with p prime."""

    KINDS = ('Z', 'Q', 'Fp')

    def __init__(self, kind, modulus=None):
        """Validate the tag; composite moduli are rejected."""
        if kind not in self.KINDS:
            raise InputError(f"unknown ring {kind!r}")
        if kind == 'Fp':
            if not isinstance(modulus, int) or not isprime(modulus):
                raise InputError(f"modulus not prime: {modulus!r}")
        elif modulus is not None:
            raise InputError(f"ring {kind} takes no modulus")
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def parse(cls, text):
        """Parse 'Z', 'Q' or 'Fp:<p>'."""
        if not isinstance(text, str):
            raise InputError(f"ring must be a string, got {text!r}")
        text = text.strip()
        if text in ('Z', 'Q'):
            return cls(text)
        if text.startswith('Fp:'):
            try:
                modulus = int(text[3:])
            except ValueError as error:
                raise InputError(f"bad modulus in ring {text!r}") from error
            return cls('Fp', modulus)
        raise InputError(f"unknown ring {text!r}")

    @property
    def is_field(self):
        """True for Q and Fp."""
        return self.kind != 'Z'

    @property
    def domain(self):
        """The sympy domain used for field elimination."""
        if self.kind == 'Q':
            return QQ
        if self.kind == 'Fp':
            return GF(self.modulus)
        return ZZ

    def reduce(self, value):
        """Canonical integer representative of an integer in this ring."""
        if self.kind == 'Fp':
            return value % self.modulus
        return value

    def is_zero(self, value):
        """True if the integer ``value`` is zero in the ring."""
        return self.reduce(value) == 0

    def is_unit(self, value):
        """Units: +-1 over Z, nonzero over a field."""
        if self.kind == 'Z':
            return value in (1, -1)
        return not self.is_zero(value)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.kind == other.kind
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __str__(self):
        return f"Fp:{self.modulus}" if self.kind == 'Fp' else self.kind

    def __repr__(self):
        return f"Ring({str(self)!r})"


class IntMatrix:
    """Immutable integer matrix."""

    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, rows, cols, data=None):
        """Build a rows x cols matrix from a list of rows (zeros if omitted)."""
        if rows < 0 or cols < 0:
            raise InconsistencyError(f"negative shape {rows}x{cols}")
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        if len(data) != rows or any(len(row) != cols for row in data):
            raise InconsistencyError(f"data does not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(int(x) for x in row) for row in data)

    @classmethod
    def zeros(cls, rows, cols):
        """Zero matrix."""
        return cls(rows, cols)

    @classmethod
    def identity(cls, size):
        """Identity matrix."""
        return cls(size, size, _identity_list(size))

    @classmethod
    def from_rows(cls, rows, cols=None):
        """Matrix from a list of rows; ``cols`` is needed when there are none."""
        rows = [list(row) for row in rows]
        if cols is None:
            if not rows:
                raise InconsistencyError("column count required for empty rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, rows):
        """Matrix whose columns are the given vectors of length ``rows``."""
        columns = [list(col) for col in columns]
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def hstack(cls, matrices, rows=None):
        """Concatenate side by side."""
        matrices = list(matrices)
        if not matrices:
            return cls(rows or 0, 0)
        height = matrices[0].rows
        data = [[] for _ in range(height)]
        for matrix in matrices:
            if matrix.rows != height:
                raise InconsistencyError("hstack height mismatch")
            for i in range(height):
                data[i].extend(matrix.row(i))
        return cls(height, sum(m.cols for m in matrices), data)

    @classmethod
    def block_diagonal(cls, blocks):
        """Direct sum of matrices."""
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    data[r0 + i][c0 + j] = block[i, j]
            r0 += block.rows
            c0 += block.cols
        return cls(rows, cols, data)

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    @property
    def shape(self):
        """(rows, cols)."""
        return self.rows, self.cols

    def row(self, i):
        """Row ``i`` as a tuple."""
        return self._data[i]

    def column(self, j):
        """Column ``j`` as a tuple."""
        return tuple(row[j] for row in self._data)

    def columns(self):
        """All columns as tuples."""
        return [self.column(j) for j in range(self.cols)]

    def to_list(self):
        """Mutable copy of the entries."""
        return [list(row) for row in self._data]

    def transpose(self):
        """Transposed matrix."""
        return IntMatrix(self.cols, self.rows,
                         [list(self.column(j)) for j in range(self.cols)])

    def select_columns(self, indices):
        """Sub-matrix of the given columns."""
        indices = list(indices)
        return IntMatrix(self.rows, len(indices),
                         [[row[j] for j in indices] for row in self._data])

    def select_rows(self, indices):
        """Sub-matrix of the given rows."""
        indices = list(indices)
        return IntMatrix(len(indices), self.cols,
                         [list(self._data[i]) for i in indices])

    def scale(self, factor):
        """Multiply every entry by an integer."""
        return IntMatrix(self.rows, self.cols,
                         [[factor * x for x in row] for row in self._data])

    def reduce(self, ring):
        """Entry-wise canonical representatives in ``ring``."""
        return IntMatrix(self.rows, self.cols,
                         [[ring.reduce(x) for x in row] for row in self._data])

    def is_zero(self, ring=None):
        """True if every entry vanishes (in ``ring`` when given)."""
        if ring is None:
            return all(x == 0 for row in self._data for x in row)
        return all(ring.is_zero(x) for row in self._data for x in row)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InconsistencyError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        other_cols = other.columns()
        data = [[sum(a * b for a, b in zip(row, col)) for col in other_cols]
                for row in self._data]
        return IntMatrix(self.rows, other.cols, data)

    def __add__(self, other):
        if self.shape != other.shape:
            raise InconsistencyError("shape mismatch in addition")
        return IntMatrix(self.rows, self.cols,
                         [[a + b for a, b in zip(r, s)]
                          for r, s in zip(self._data, other._data)])

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix({self.rows}, {self.cols}, {[list(r) for r in self._data]})"


class GroupPresentation:
    """A finitely generated module: free rank plus torsion invariant factors.

    Over a field ``invariant_factors`` is always empty and ``free_rank`` is
    the dimension. ``generators`` holds representing vectors (free ones
    first, then one per invariant factor) and ``relations`` optionally the
    relation matrix the module is the cokernel of.
    """

    def __init__(self, free_rank, invariant_factors=(), ring=None,
                 generators=None, relations=None):
        """Store the invariants and check the divisibility chain."""
        factors = tuple(int(d) for d in invariant_factors)
        if any(d <= 1 for d in factors):
            raise InconsistencyError(f"invariant factors must exceed 1: {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise InconsistencyError(f"divisibility chain broken: {factors}")
        if ring is not None and ring.is_field and factors:
            raise InconsistencyError("torsion over a field")
        self.free_rank = free_rank
        self.invariant_factors = factors
        self.ring = ring
        self.generators = generators
        self.relations = relations

    @classmethod
    def free(cls, rank, ring=None):
        """Free module of the given rank with no relations."""
        return cls(rank, (), ring, relations=IntMatrix(rank, 0))

    @classmethod
    def from_relations(cls, relations, ring):
        """Cokernel of ``relations`` (generators = rows)."""
        if ring.is_field:
            dimension = relations.rows - rank(relations, ring)
            return cls(dimension, (), ring, relations=relations)
        diagonal = smith_invariants(relations)
        nonzero = [d for d in diagonal if d]
        torsion = [d for d in nonzero if d > 1]
        return cls(relations.rows - len(nonzero), torsion, ring, relations=relations)

    @property
    def is_zero(self):
        """True if free rank and torsion both vanish."""
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def generator_count(self):
        """Number of generators in the chosen presentation."""
        return self.free_rank + len(self.invariant_factors)

    def to_dict(self):
        """Dictionary representation used by reports."""
        return {'free_rank': self.free_rank,
                'torsion': list(self.invariant_factors)}

    def describe(self):
        """Human readable form such as 'Z^3 + Z/2'."""
        base = 'Z' if self.ring is None else (
            'F' + str(self.ring.modulus) if self.ring.kind == 'Fp' else self.ring.kind)
        parts = []
        if self.free_rank:
            parts.append(base if self.free_rank == 1 else f"{base}^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return ' + '.join(parts) if parts else '0'

    def __eq__(self, other):
        return (isinstance(other, GroupPresentation)
                and self.free_rank == other.free_rank
                and self.invariant_factors == other.invariant_factors)

    def __hash__(self):
        return hash((self.free_rank, self.invariant_factors))

    def __repr__(self):
        return f"GroupPresentation({self.describe()})"


def xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    if a and b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _identity_list(size):
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def _combine_columns(data, a, b, coeffs):
    """Replace columns (a, b) by (p*a + q*b, r*a + s*b)."""
    p, q, r, s = coeffs
    for row in data:
        x, y = row[a], row[b]
        row[a] = p * x + q * y
        row[b] = r * x + s * y


def _combine_rows(data, a, b, coeffs):
    """Replace rows (a, b) by (p*a + q*b, r*a + s*b)."""
    p, q, r, s = coeffs
    row_a, row_b = data[a], data[b]
    data[a] = [p * x + q * y for x, y in zip(row_a, row_b)]
    data[b] = [r * x + s * y for x, y in zip(row_a, row_b)]


def _gcd_coefficients(x, y):
    """Unimodular 2x2 step sending (x, y) to (gcd, 0)."""
    g, s, t = xgcd(x, y)
    return s, t, -y // g, x // g


def hermite_normal_form(matrix):
    """Column-style Hermite normal form.

    Returns ``(H, U)`` with ``H = M @ U`` and ``U`` unimodular. The nonzero
    columns of ``H`` come first, have strictly increasing pivot rows and
    positive pivots, and the entries left of a pivot are reduced into
    ``[0, pivot)``. The form is canonical for the column lattice of ``M``.
    """
    m, n = matrix.shape
    h = matrix.to_list()
    u = _identity_list(n)
    pivot = 0
    for i in range(m):
        if pivot == n:
            break
        for j in range(pivot + 1, n):
            if h[i][j]:
                coeffs = _gcd_coefficients(h[i][pivot], h[i][j])
                _combine_columns(h, pivot, j, coeffs)
                _combine_columns(u, pivot, j, coeffs)
        lead = h[i][pivot]
        if lead == 0:
            continue
        if lead < 0:
            _combine_columns(h, pivot, pivot, (-1, 0, -1, 0))
            _combine_columns(u, pivot, pivot, (-1, 0, -1, 0))
            lead = -lead
        for j in range(pivot):
            quotient = h[i][j] // lead
            if quotient:
                _combine_columns(h, j, pivot, (1, -quotient, 0, 1))
                _combine_columns(u, j, pivot, (1, -quotient, 0, 1))
        pivot += 1
    return IntMatrix(m, n, h), IntMatrix(n, n, u)


def hnf_rank(matrix):
    """Rank over Q via the Hermite form."""
    h, _ = hermite_normal_form(matrix)
    return sum(1 for j in range(h.cols) if any(h.column(j)))


def column_basis(matrix):
    """Canonical basis (nonzero HNF columns) of the column lattice."""
    h, _ = hermite_normal_form(matrix)
    keep = [j for j in range(h.cols) if any(h.column(j))]
    return h.select_columns(keep)


def smith_normal_form(matrix):
    """Smith normal form ``S = U @ M @ V`` with U, V unimodular."""
    m, n = matrix.shape
    a = matrix.to_list()
    left = _identity_list(m)
    right = _identity_list(n)
    for t in range(min(m, n)):
        position = _smallest_entry(a, t)
        if position is None:
            break
        i, j = position
        a[t], a[i] = a[i], a[t]
        left[t], left[i] = left[i], left[t]
        if j != t:
            _combine_columns(a, t, j, (0, 1, 1, 0))
            _combine_columns(right, t, j, (0, 1, 1, 0))
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    coeffs = _gcd_coefficients(a[t][t], a[i][t])
                    _combine_rows(a, t, i, coeffs)
                    _combine_rows(left, t, i, coeffs)
            for j in range(t + 1, n):
                if a[t][j]:
                    coeffs = _gcd_coefficients(a[t][t], a[t][j])
                    _combine_columns(a, t, j, coeffs)
                    _combine_columns(right, t, j, coeffs)
            if any(a[i][t] for i in range(t + 1, m)):
                continue
            offender = _non_divisible_row(a, t)
            if offender is None:
                break
            _combine_rows(a, t, offender, (1, 1, 0, 1))
            _combine_rows(left, t, offender, (1, 1, 0, 1))
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
    return IntMatrix(m, n, a), IntMatrix(m, m, left), IntMatrix(n, n, right)


def _smallest_entry(a, t):
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _non_divisible_row(a, t):
    pivot = a[t][t]
    for i in range(t + 1, len(a)):
        if any(x % pivot for x in a[i][t + 1:]):
            return i
    return None


def smith_invariants(matrix):
    """Diagonal of the Smith normal form (length min(rows, cols))."""
    s, _, _ = smith_normal_form(matrix)
    return [s[i, i] for i in range(min(s.rows, s.cols))]


def determinant(matrix):
    """Exact determinant of a square integer matrix."""
    if matrix.rows != matrix.cols:
        raise InconsistencyError(f"determinant of non-square {matrix.shape}")
    if matrix.rows == 0:
        return 1
    return int(DomainMatrix(matrix.to_list(), matrix.shape, ZZ).det())


def kernel_lattice(matrix):
    """Saturated basis (columns) of the integer kernel, in HNF."""
    h, u = hermite_normal_form(matrix)
    free = [j for j in range(h.cols) if not any(h.column(j))]
    if not free:
        return IntMatrix(matrix.cols, 0)
    return column_basis(u.select_columns(free))


def saturate(basis):
    """Saturation of the lattice spanned by independent columns."""
    if basis.cols == 0:
        return IntMatrix(basis.rows, 0)
    if hnf_rank(basis) != basis.cols:
        raise InconsistencyError("saturate needs linearly independent columns")
    left_kernel = kernel_lattice(basis.transpose())
    if left_kernel.cols == 0:
        return IntMatrix.identity(basis.rows)
    return kernel_lattice(left_kernel.transpose())


def try_solve_integral(a, b):
    """Integral X with A @ X = B, or None when none exists."""
    if a.rows != b.rows:
        raise InconsistencyError(f"solve shape mismatch {a.shape} vs {b.shape}")
    h, u = hermite_normal_form(a)
    pivots = []
    for j in range(h.cols):
        column = h.column(j)
        lead = next((i for i, x in enumerate(column) if x), None)
        if lead is None:
            break
        pivots.append(lead)
    solution = [[0] * b.cols for _ in range(len(pivots))]
    for k in range(b.cols):
        residual = list(b.column(k))
        for j, lead in enumerate(pivots):
            if residual[lead] % h[lead, j]:
                return None
            coeff = residual[lead] // h[lead, j]
            solution[j][k] = coeff
            if coeff:
                for i in range(lead, h.rows):
                    residual[i] -= coeff * h[i, j]
        if any(residual):
            return None
    head = u.select_columns(range(len(pivots)))
    return head @ IntMatrix(len(pivots), b.cols, solution)


def solve_integral(a, b):
    """Integral X with A @ X = B; raises when the system has no such X."""
    x = try_solve_integral(a, b)
    if x is None:
        raise InconsistencyError("expected an integral solution")
    return x


def unimodular_inverse(u):
    """Inverse of a unimodular matrix."""
    return solve_integral(u, IntMatrix.identity(u.rows))


def _to_domain(matrix, ring):
    domain = ring.domain
    rows = [[domain.convert(x) for x in row] for row in matrix.to_list()]
    return DomainMatrix(rows, matrix.shape, domain)


def _from_sympy(entry, ring):
    if ring.kind == 'Fp':
        return int(entry) % ring.modulus
    return Fraction(int(entry.p), int(entry.q))


def rank(matrix, ring):
    """Rank over ``ring`` (Z and Q agree)."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if ring.kind == 'Fp':
        return _to_domain(matrix, ring).rank()
    return hnf_rank(matrix)


def row_echelon(matrix, ring):
    """Reduced row echelon form over a field: (entries, pivot columns)."""
    if not ring.is_field:
        raise InconsistencyError("row echelon form requires a field")
    if matrix.rows == 0 or matrix.cols == 0:
        return [[] for _ in range(matrix.rows)], ()
    reduced, pivots = _to_domain(matrix, ring).rref()
    table = reduced.to_Matrix().tolist()
    return [[_from_sympy(x, ring) for x in row] for row in table], tuple(pivots)


def kernel_basis(matrix, ring):
    """Kernel basis over ``ring`` as integer columns.

    Over Z and Q this is the saturated integer kernel; over Fp it is a
    nullspace basis with entries in ``[0, p)``.
    """
    if ring.kind != 'Fp':
        return kernel_lattice(matrix)
    n = matrix.cols
    if matrix.rows == 0:
        return IntMatrix.identity(n)
    table, pivots = row_echelon(matrix, ring)
    columns = []
    for free in (j for j in range(n) if j not in pivots):
        vector = [0] * n
        vector[free] = 1
        for i, lead in enumerate(pivots):
            vector[lead] = (-table[i][free]) % ring.modulus
        columns.append(vector)
    return IntMatrix.from_columns(columns, n)


def solve(a, b, ring):
    """Solve A @ X = B in ring coordinates.

    Over Z and Q the columns of ``a`` are expected to be a saturated
    lattice basis, which makes the rational solution integral.
    """
    if ring.kind != 'Fp':
        return solve_integral(a, b)
    p = ring.modulus
    table, pivots = row_echelon(IntMatrix.hstack([a, b]), ring)
    if any(lead >= a.cols for lead in pivots):
        raise InconsistencyError("right-hand side outside the column span")
    solution = [[0] * b.cols for _ in range(a.cols)]
    for i, lead in enumerate(pivots):
        for k in range(b.cols):
            solution[lead][k] = table[i][a.cols + k] % p
    return IntMatrix(a.cols, b.cols, solution)


def independent_columns(matrix, ring):
    """Indices of a maximal independent subset of columns, leftmost first."""
    if ring.is_field:
        return list(row_echelon(matrix, ring)[1])
    chosen = []
    for j in range(matrix.cols):
        if hnf_rank(matrix.select_columns(chosen + [j])) > len(chosen):
            chosen.append(j)
    return chosen


def check_complex(boundary_in, boundary_out, ring=None):
    """Raise NotAComplexError unless ``boundary_out @ boundary_in`` vanishes."""
    if boundary_out.cols != boundary_in.rows:
        raise InconsistencyError(
            f"incompatible shapes {boundary_out.shape} and {boundary_in.shape}")
    if not (boundary_out @ boundary_in).is_zero(ring):
        raise NotAComplexError("not a complex")


def homology_of_pair(boundary_in, boundary_out, ring):
    """Presentation of ker(boundary_out) / im(boundary_in) over ``ring``."""
    check_complex(boundary_in, boundary_out, ring)
    if ring.is_field:
        return _field_homology(boundary_in, boundary_out, ring)
    cycles = kernel_lattice(boundary_out)
    if cycles.cols == 0:
        return GroupPresentation(0, (), ring, generators=cycles)
    coordinates = solve_integral(cycles, boundary_in)
    s, u, _ = smith_normal_form(coordinates)
    diagonal = [s[i, i] for i in range(min(s.rows, s.cols))]
    nonzero = sum(1 for d in diagonal if d)
    logger.debug("SNF diagonal %s on %d cycles", diagonal, cycles.cols)
    lifted = cycles @ unimodular_inverse(u)
    torsion = [i for i, d in enumerate(diagonal) if d > 1]
    free = list(range(nonzero, cycles.cols))
    generators = lifted.select_columns(free + torsion)
    return GroupPresentation(cycles.cols - nonzero,
                             [diagonal[i] for i in torsion], ring,
                             generators=generators)


def _field_homology(boundary_in, boundary_out, ring):
    cycles = kernel_basis(boundary_out, ring)
    image_rank = rank(boundary_in, ring)
    if cycles.cols == 0:
        return GroupPresentation(0, (), ring, generators=cycles)
    stacked = IntMatrix.hstack([boundary_in, cycles])
    picked = [j - boundary_in.cols for j in independent_columns(stacked, ring)
              if j >= boundary_in.cols]
    if len(picked) != cycles.cols - image_rank:
        raise InconsistencyError("image not contained in the cycles")
    return GroupPresentation(len(picked), (), ring,
                             generators=cycles.select_columns(picked))


def is_isomorphism(matrix, domain, codomain, ring):
    """Decide whether ``matrix`` induces an isomorphism domain -> codomain.

    ``matrix`` maps the generators of ``domain`` to generator coordinates
    of ``codomain``. Free modules of equal rank reduce to a determinant
    test; otherwise the mapping cone [f | R_N] is examined.
    """
    if matrix.shape != (generator_total(codomain), generator_total(domain)):
        raise InputError(
            f"map of shape {matrix.shape} does not fit "
            f"{domain.describe()} -> {codomain.describe()}")
    rel_dom = _relations(domain)
    rel_cod = _relations(codomain)
    if rel_dom.cols == 0 and rel_cod.cols == 0:
        if matrix.rows != matrix.cols:
            return False
        det = determinant(matrix)
        return ring.is_unit(det)
    cone = IntMatrix.hstack([matrix, rel_cod])
    if ring.is_field:
        surjective = rank(cone, ring) == matrix.rows
        preimage_dim = matrix.cols - rank(cone, ring) + rank(rel_cod, ring)
        return surjective and preimage_dim == rank(rel_dom, ring)
    if try_solve_integral(rel_cod, matrix @ rel_dom) is None:
        raise InputError("map does not respect the relations")
    diagonal = smith_invariants(cone)
    if sum(1 for d in diagonal if d == 1) != matrix.rows:
        return False
    kernel = kernel_lattice(cone).select_rows(range(matrix.cols))
    if rel_dom.cols == 0:
        return kernel.is_zero()
    return try_solve_integral(rel_dom, kernel) is not None


def generator_total(presentation):
    """Number of generators a map must use for this presentation."""
    if presentation.relations is not None:
        return presentation.relations.rows
    return presentation.generator_count


def _relations(presentation):
    if presentation.relations is not None:
        return presentation.relations
    size = presentation.generator_count
    data = [[0] * len(presentation.invariant_factors) for _ in range(size)]
    for k, factor in enumerate(presentation.invariant_factors):
        data[presentation.free_rank + k][k] = factor
    return IntMatrix(size, len(presentation.invariant_factors), data)
