"""Multi-tangent cosheaves F_p and their dual sheaves F^p on a fan."""

import itertools
import logging
from math import comb

from tropfan.errors import InputError
from tropfan.exact_linalg import IntMatrix, column_basis, determinant, solve_integral

logger = logging.getLogger(__name__)

COSHEAF = 'cosheaf'
SHEAF = 'sheaf'


class ModuleAssignment:
    """Per-face free modules with structure matrices between them.

    For a cosheaf, ``structure_map(sigma, tau)`` is the inclusion
    F_p(sigma) -> F_p(tau) for tau <= sigma. For a sheaf it is the
    restriction F^p(tau) -> F^p(sigma), the transpose of that inclusion in
    the dual bases.
    """

    def __init__(self, fan, p, variance, bases, cosheaf=None):
        """Store the per-face bases (columns in wedge coordinates)."""
        self.fan = fan
        self.p = p
        self.variance = variance
        self.bases = bases
        self._cosheaf = cosheaf
        self._cache = {}

    def rank(self, face_id):
        """Rank of the module on a face."""
        return self.bases[face_id].cols

    def basis(self, face_id):
        """Basis matrix of the module on a face."""
        return self.bases[face_id]

    def structure_map(self, source, target):
        """Structure matrix from the module on ``source`` to ``target``."""
        if self.variance == SHEAF:
            return self._cosheaf.structure_map(target, source).transpose()
        if not self.fan.is_face_of(target, source):
            raise InputError(f"face {target} is not a face of {source}")
        key = (source, target)
        if key not in self._cache:
            self._cache[key] = solve_integral(self.bases[target], self.bases[source])
        return self._cache[key]

    def dual(self):
        """The sheaf obtained by dualizing every inclusion."""
        if self.variance == SHEAF:
            return self._cosheaf
        return ModuleAssignment(self.fan, self.p, SHEAF, self.bases, cosheaf=self)

    def __repr__(self):
        return f"ModuleAssignment(p={self.p}, {self.variance})"


def wedge_basis(basis, p):
    """Wedges of the p-subsets of the columns of ``basis``.

    Column S (lex order of p-subsets of columns) holds the p x p minors of
    ``basis`` on the rows I, for I running over the lex-ordered p-subsets
    of the ambient coordinates.
    """
    n, k = basis.shape
    if not isinstance(p, int) or not 0 <= p <= k:
        raise InputError(f"wedge degree {p!r} out of range 0..{k}")
    row_sets = list(itertools.combinations(range(n), p))
    col_sets = list(itertools.combinations(range(k), p))
    data = [[determinant(basis.select_rows(rows).select_columns(cols))
             for cols in col_sets] for rows in row_sets]
    return IntMatrix(len(row_sets), len(col_sets), data)


def _check_degree(fan, p):
    if not isinstance(p, int) or not 0 <= p <= fan.dim:
        raise InputError(f"degree p={p!r} out of range 0..{fan.dim}")


def build_multitangent(fan, p):
    """The cosheaf F_p: sum of the p-th wedges of the maximal cofaces."""
    _check_degree(fan, p)
    ambient = comb(fan.ambient_rank, p)
    top_wedges = {alpha: wedge_basis(fan.faces[alpha].lattice_basis, p)
                  for alpha in fan.maximal_faces()}
    bases = {}
    for sigma in fan.face_ids:
        pieces = [top_wedges[alpha] for alpha in fan.maximal_cofaces(sigma)]
        bases[sigma] = column_basis(IntMatrix.hstack(pieces, rows=ambient))
    logger.debug("F_%d ranks %s", p, [bases[s].cols for s in fan.face_ids])
    return ModuleAssignment(fan, p, COSHEAF, bases)


def build_multicotangent(fan, p):
    """The sheaf F^p, dual to F_p."""
    return build_multitangent(fan, p).dual()


def constant_cosheaf(fan, rank):
    """Constant cosheaf of the given rank with identity structure maps."""
    if rank < 0:
        raise InputError(f"negative rank {rank}")
    bases = {sigma: IntMatrix.identity(rank) for sigma in fan.face_ids}
    return ModuleAssignment(fan, 0, COSHEAF, bases)
