"""Tropical chain and cochain complexes of a fan and their (co)homology."""

import logging
from concurrent.futures import ThreadPoolExecutor

from tropfan.errors import InconsistencyError, InputError
from tropfan.exact_linalg import (
    IntMatrix, check_complex, homology_of_pair, kernel_basis, solve,
)
from tropfan.fan_core import cone_subfan, star_view
from tropfan.trop_sheaf import build_multitangent

logger = logging.getLogger(__name__)

HOMOLOGICAL = 'homological'
COHOMOLOGICAL = 'cohomological'


class ChainComplex:
    """Graded free modules with integer differentials read over a ring.

    ``differentials[q]`` leaves degree q: it is the boundary C_q -> C_{q-1}
    for a homological complex and the coboundary C^q -> C^{q+1} otherwise.
    ``layout[q]`` lists (face, offset, rank) for the summands of degree q.
    """

    def __init__(self, direction, ranks, differentials, ring, layout=None, module=None):
        """Store the graded data and check that consecutive maps compose to zero."""
        self.direction = direction
        self.ranks = dict(ranks)
        self.differentials = dict(differentials)
        self.ring = ring
        self.layout = layout or {}
        self.module = module
        self.check()

    @property
    def degrees(self):
        """Degrees in increasing order."""
        return sorted(self.ranks)

    def rank(self, q):
        """Rank of the degree-q module (0 outside the range)."""
        return self.ranks.get(q, 0)

    def _step(self):
        return -1 if self.direction == HOMOLOGICAL else 1

    def differential(self, q):
        """Map leaving degree q (a zero matrix where none is stored)."""
        target = q + self._step()
        if q in self.differentials:
            return self.differentials[q]
        return IntMatrix(self.rank(target), self.rank(q))

    def boundary_out(self, q):
        """Map whose kernel gives the cycles in degree q."""
        return self.differential(q)

    def boundary_in(self, q):
        """Map whose image gives the boundaries in degree q."""
        return self.differential(q - self._step())

    def check(self):
        """Raise unless every composite of consecutive maps vanishes."""
        for q in self.degrees:
            outgoing = self.differential(q)
            expected = (self.rank(q + self._step()), self.rank(q))
            if outgoing.shape != expected:
                raise InconsistencyError(
                    f"differential in degree {q} has shape {outgoing.shape}, "
                    f"expected {expected}")
            check_complex(self.boundary_in(q), outgoing, self.ring)

    def transpose(self):
        """Dual complex: transposed maps, opposite direction."""
        direction = COHOMOLOGICAL if self.direction == HOMOLOGICAL else HOMOLOGICAL
        dual = {q + self._step(): m.transpose() for q, m in self.differentials.items()}
        return ChainComplex(direction, self.ranks, dual, self.ring, self.layout, self.module)

    def over(self, ring):
        """Same integer data read over another ring."""
        return ChainComplex(self.direction, self.ranks, self.differentials, ring,
                            self.layout, self.module)

    def face_components(self, q, vector):
        """Split a degree-q coordinate vector into ambient vectors per face."""
        parts = {}
        for face, offset, size in self.layout.get(q, []):
            coords = IntMatrix.from_columns([vector[offset:offset + size]], size)
            parts[face] = (self.module.basis(face) @ coords).column(0)
        return parts


class HomologyTable:
    """Per-degree presentations of the (co)homology of a complex."""

    def __init__(self, groups, direction):
        """Store degree -> GroupPresentation."""
        self.groups = dict(groups)
        self.direction = direction

    def group(self, q):
        """Presentation in degree q."""
        return self.groups[q]

    def dims(self):
        """Free ranks (dimensions over a field) by degree."""
        return {q: g.free_rank for q, g in sorted(self.groups.items())}

    def vanishes_except(self, degree):
        """True if every group outside ``degree`` is zero, torsion included."""
        return all(g.is_zero for q, g in self.groups.items() if q != degree)

    def first_nonzero_except(self, degree):
        """First degree other than ``degree`` with a nonzero group, or None."""
        for q in sorted(self.groups):
            if q != degree and not self.groups[q].is_zero:
                return q
        return None

    def to_dict(self):
        """Dictionary keyed by degree."""
        return {str(q): g.to_dict() for q, g in sorted(self.groups.items())}


def map_jobs(function, items, threads=1):
    """Apply ``function`` to every item, in a thread pool when threads > 1."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(function, items))


def _layout(fan, module, faces):
    by_dim = {}
    for face in sorted(faces):
        by_dim.setdefault(fan.faces[face].dim, []).append(face)
    layout, ranks = {}, {}
    for q in range(min(by_dim), max(by_dim) + 1):
        offset = 0
        layout[q] = []
        for face in by_dim.get(q, []):
            size = module.rank(face)
            layout[q].append((face, offset, size))
            offset += size
        ranks[q] = offset
    return layout, ranks


def _assemble(fan, module, faces, ring):
    """Borel-Moore boundary maps over the given faces."""
    layout, ranks = _layout(fan, module, faces)
    members = set(faces)
    differentials = {}
    for q in layout:
        if q - 1 not in layout:
            continue
        data = [[0] * ranks[q] for _ in range(ranks[q - 1])]
        rows = {face: (offset, size) for face, offset, size in layout[q - 1]}
        for sigma, col0, _ in layout[q]:
            for tau in fan.facets[sigma]:
                if tau not in members:
                    continue
                sign = fan.incidence[(tau, sigma)]
                block = module.structure_map(sigma, tau)
                row0, _ = rows[tau]
                for i in range(block.rows):
                    for j in range(block.cols):
                        data[row0 + i][col0 + j] += sign * block[i, j]
        differentials[q] = IntMatrix(ranks[q - 1], ranks[q], data)
    logger.debug("assembled complex with ranks %s", ranks)
    return ChainComplex(HOMOLOGICAL, ranks, differentials, ring, layout, module)


def bm_chain_complex(fan, p, ring, module=None):
    """Borel-Moore chain complex C_q = sum over q-faces of F_p."""
    module = module or build_multitangent(fan, p)
    return _assemble(fan, module, fan.face_ids, ring)


def compact_cochain_complex(fan, p, ring, module=None):
    """Compact-support cochain complex of F^p, dual to the Borel-Moore one."""
    return bm_chain_complex(fan, p, ring, module).transpose()


def plain_cochain_complex(fan, p, ring, module=None):
    """Cochains on compact cells: only the vertex, carrying F^p(v)."""
    module = module or build_multitangent(fan, p)
    size = module.rank(fan.vertex)
    return ChainComplex(COHOMOLOGICAL, {0: size}, {}, ring,
                        {0: [(fan.vertex, 0, size)]}, module.dual())


def star_bm_complex(fan, gamma, p, ring, module=None):
    """Borel-Moore complex of F_p restricted to the faces containing gamma."""
    star = star_view(fan, gamma)
    module = module or build_multitangent(fan, p)
    return _assemble(fan, module, star.member_faces, ring)


def cone_compact_cochain_complex(fan, gamma, module, ring):
    """Compact-support cochains of Cone(gamma) with coefficients in ``module``."""
    subfan = cone_subfan(fan, gamma)
    return _assemble(fan, module, subfan.member_faces, ring).transpose()


def homology(complex_, threads=1):
    """(Co)homology of every degree of a complex."""
    def compute(q):
        return homology_of_pair(complex_.boundary_in(q), complex_.boundary_out(q),
                                complex_.ring)

    degrees = complex_.degrees
    groups = dict(zip(degrees, map_jobs(compute, degrees, threads)))
    return HomologyTable(groups, complex_.direction)


def euler_characteristic(complex_):
    """Alternating sum of the ranks; defined over a field."""
    if not complex_.ring.is_field:
        raise InputError("Euler characteristic needs a field; use Q or Fp")
    return sum((-1) ** q * complex_.rank(q) for q in complex_.degrees)


def star_cycle_basis(fan, gamma, module, ring):
    """Basis of H_d^BM(Star gamma) as cycles in the top-degree star chains.

    Returns (basis, layout) where ``layout`` lists (alpha, offset, rank)
    for the maximal faces containing gamma.
    """
    star = _assemble(fan, module, star_view(fan, gamma).member_faces, ring)
    top = fan.dim
    return kernel_basis(star.boundary_out(top), ring), star.layout[top]


def _rows_for(layout, alphas):
    rows = []
    for alpha, offset, size in layout:
        if alpha in alphas:
            rows.extend(range(offset, offset + size))
    return rows


def star_row_complex(wf, p, ring):
    """Cochain complex r -> sum over r-faces gamma of H_d^BM(Star gamma, F_{d-p}).

    The differential is the restriction of the compact-support coboundary
    of the constant-coefficient cone complexes: the block from gamma to a
    cofacet kappa is O(gamma, kappa) times the projection onto the maximal
    faces containing kappa.
    """
    fan = wf.fan
    d = fan.dim
    if d < 2:
        raise InputError("the star row complex needs a fan of dimension >= 2")
    if not 0 <= p <= d:
        raise InputError(f"degree p={p!r} out of range 0..{d}")
    module = build_multitangent(fan, d - p)
    cycles = {gamma: star_cycle_basis(fan, gamma, module, ring) for gamma in fan.face_ids}
    layout, ranks = {}, {}
    for r in range(d + 1):
        offset = 0
        layout[r] = []
        for gamma in fan.faces_of_dim(r):
            size = cycles[gamma][0].cols
            layout[r].append((gamma, offset, size))
            offset += size
        ranks[r] = offset
    differentials = {}
    for r in range(d):
        data = [[0] * ranks[r] for _ in range(ranks[r + 1])]
        targets = {kappa: offset for kappa, offset, _ in layout[r + 1]}
        for gamma, col0, _ in layout[r]:
            basis, star_layout = cycles[gamma]
            for kappa in fan.cofacets[gamma]:
                kappa_basis, kappa_layout = cycles[kappa]
                alphas = {alpha for alpha, _, _ in kappa_layout}
                image = basis.select_rows(_rows_for(star_layout, alphas))
                image = image.scale(fan.incidence[(gamma, kappa)])
                block = solve(kappa_basis, image, ring)
                row0 = targets[kappa]
                for i in range(block.rows):
                    for j in range(block.cols):
                        data[row0 + i][col0 + j] += block[i, j]
        differentials[r] = IntMatrix(ranks[r + 1], ranks[r], data)
    logger.debug("star row complex for p=%d has ranks %s", p, ranks)
    return ChainComplex(COHOMOLOGICAL, ranks, differentials, ring, layout)
