"""Rational polyhedral fans, stars, cone subfans and Bergman fans of matroids."""

import itertools
import logging
from fractions import Fraction
from math import gcd

from tropfan.errors import InconsistencyError, InputError
from tropfan.exact_linalg import (
    IntMatrix, Ring, determinant, hnf_rank, saturate, smith_normal_form,
    solve_integral,
)

logger = logging.getLogger(__name__)


class Cone:
    """A face of a fan: its rays and the canonical basis of its lattice."""

    def __init__(self, face_id, ray_indices, lattice_basis):
        """Store the face data; ``dim`` is the rank of the lattice basis."""
        self.face_id = face_id
        self.ray_indices = tuple(ray_indices)
        self.lattice_basis = lattice_basis
        self.dim = lattice_basis.cols

    def to_dict(self):
        """Dictionary representation of the face."""
        return {'id': self.face_id, 'rays': list(self.ray_indices), 'dim': self.dim}

    def __repr__(self):
        return f"Cone({self.face_id}, rays={list(self.ray_indices)}, dim={self.dim})"


class Fan:
    """A pure dimensional rational polyhedral fan with oriented faces."""

    def __init__(self, ambient_rank, rays, faces, incidence, simplicial=True):
        """Assemble poset tables from the ordered faces and incidence signs."""
        self.ambient_rank = ambient_rank
        self.rays = tuple(tuple(r) for r in rays)
        self.faces = list(faces)
        self.incidence = dict(incidence)
        self.simplicial = simplicial
        self.dim = max(face.dim for face in self.faces)
        self.vertex = 0
        self.face_index = {face.ray_indices: face.face_id for face in self.faces}
        self.facets = {face.face_id: [] for face in self.faces}
        self.cofacets = {face.face_id: [] for face in self.faces}
        for tau, sigma in sorted(self.incidence):
            self.facets[sigma].append(tau)
            self.cofacets[tau].append(sigma)

    @property
    def face_ids(self):
        """All face ids in canonical order."""
        return [face.face_id for face in self.faces]

    def face(self, face_id):
        """The Cone with the given id."""
        self.check_face(face_id)
        return self.faces[face_id]

    def check_face(self, face_id):
        """Raise InputError for an unknown face id."""
        if not isinstance(face_id, int) or not 0 <= face_id < len(self.faces):
            raise InputError(f"invalid face id {face_id!r}")

    def faces_of_dim(self, k):
        """Ids of the faces of dimension ``k``."""
        return [face.face_id for face in self.faces if face.dim == k]

    def maximal_faces(self):
        """Ids of the top-dimensional faces."""
        return self.faces_of_dim(self.dim)

    def is_face_of(self, tau, sigma):
        """True if tau is a face of sigma (tau <= sigma)."""
        return set(self.faces[tau].ray_indices) <= set(self.faces[sigma].ray_indices)

    def upper_set(self, gamma):
        """Ids of all faces containing gamma."""
        return [kappa for kappa in self.face_ids if self.is_face_of(gamma, kappa)]

    def lower_set(self, gamma):
        """Ids of all faces of gamma."""
        return [kappa for kappa in self.face_ids if self.is_face_of(kappa, gamma)]

    def maximal_cofaces(self, sigma):
        """Maximal faces containing sigma."""
        return [alpha for alpha in self.maximal_faces() if self.is_face_of(sigma, alpha)]

    def ray_matrix(self, face_id):
        """Rays of a face as the columns of an IntMatrix."""
        face = self.faces[face_id]
        return IntMatrix.from_columns([self.rays[i] for i in face.ray_indices],
                                      self.ambient_rank)

    def __repr__(self):
        return (f"Fan(rank={self.ambient_rank}, dim={self.dim}, "
                f"rays={len(self.rays)}, faces={len(self.faces)})")


class WeightedFan:
    """A fan with a ring tag and a weight on every maximal face."""

    def __init__(self, fan, ring, weights):
        """Validate weights: one per maximal face, each a non-zero-divisor."""
        maximal = fan.maximal_faces()
        if sorted(weights) != sorted(maximal):
            raise InputError("weights must be given on exactly the maximal faces")
        self.fan = fan
        self.ring = ring
        self.weights = {}
        for alpha in maximal:
            self.weights[alpha] = _coerce_weight(weights[alpha], ring)

    def weight_list(self):
        """Weights in maximal-face order."""
        return [self.weights[alpha] for alpha in self.fan.maximal_faces()]

    def integral_weights(self):
        """Integer weights with the same verdicts over the ring.

        Over Q the weights are scaled by the lcm of their denominators,
        which is a unit.
        """
        if self.ring.kind != 'Q':
            return dict(self.weights)
        scale = 1
        for value in self.weights.values():
            scale = scale * value.denominator // gcd(scale, value.denominator)
        return {alpha: int(value * scale) for alpha, value in self.weights.items()}

    def all_weights_units(self):
        """True if every weight is a unit of the ring."""
        if self.ring.kind == 'Q':
            return True
        return all(self.ring.is_unit(w) for w in self.weights.values())

    def with_ring(self, ring):
        """Same fan and weights read over another ring."""
        return WeightedFan(self.fan, ring, self.weights)

    def __repr__(self):
        return f"WeightedFan({self.fan!r}, ring={self.ring})"


def _coerce_weight(value, ring):
    if isinstance(value, bool):
        raise InputError(f"invalid weight {value!r}")
    if ring.kind == 'Q':
        try:
            weight = Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise InputError(f"invalid rational weight {value!r}") from error
        if weight == 0:
            raise InputError("weight 0 is a zero-divisor")
        return weight
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise InputError(f"rational weight {value} needs ring Q")
        value = value.numerator
    if not isinstance(value, int):
        raise InputError(f"weight {value!r} is not an integer")
    if ring.is_zero(value):
        raise InputError(f"weight {value} is a zero-divisor over {ring}")
    return ring.reduce(value)


class Subfan:
    """A set of faces of a fan, read with the fan's own lattice data."""

    def __init__(self, fan, member_faces):
        """Store the parent fan and sorted member ids."""
        self.fan = fan
        self.member_faces = tuple(sorted(member_faces))

    def faces_of_dim(self, k):
        """Member ids of dimension ``k``."""
        return [f for f in self.member_faces if self.fan.faces[f].dim == k]

    def maximal_faces(self):
        """Member ids of the fan's top dimension."""
        return self.faces_of_dim(self.fan.dim)

    def __contains__(self, face_id):
        return face_id in self.member_faces


class StarView(Subfan):
    """Upper set of a face, kept unsubdivided."""

    def __init__(self, fan, base_face):
        """Collect every face containing ``base_face``."""
        super().__init__(fan, fan.upper_set(base_face))
        self.base_face = base_face

    def __repr__(self):
        return f"StarView(base={self.base_face}, faces={list(self.member_faces)})"


class ConeSubfan(Subfan):
    """Downward closed set of the faces of a single cone."""

    def __init__(self, fan, apex):
        """Collect every face of ``apex``."""
        super().__init__(fan, fan.lower_set(apex))
        self.apex = apex

    def __repr__(self):
        return f"ConeSubfan(apex={self.apex}, faces={list(self.member_faces)})"


def _primitive(vector):
    g = 0
    for x in vector:
        g = gcd(g, x)
    if g == 0:
        raise InputError("zero vector is not a ray")
    return tuple(x // g for x in vector)


def _validate_rays(ambient_rank, rays):
    if not isinstance(rays, (list, tuple)):
        raise InputError("rays must be a list of integer vectors")
    checked = []
    for index, ray in enumerate(rays):
        if not isinstance(ray, (list, tuple)):
            raise InputError(f"ray {index} is not a list: {ray!r}")
        ray = tuple(ray)
        if len(ray) != ambient_rank:
            raise InputError(f"ray {index} has length {len(ray)}, expected {ambient_rank}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in ray):
            raise InputError(f"ray {index} has non-integer entries")
        if not any(ray):
            raise InputError(f"ray {index} is zero")
        if _primitive(ray) != ray:
            raise InputError(f"ray {index} is not primitive: {list(ray)}")
        checked.append(ray)
    if len(set(checked)) != len(checked):
        raise InputError("duplicate rays")
    return checked


def _check_index_list(value, label):
    if not isinstance(value, (list, tuple)):
        raise InputError(f"{label} is not a list of ray indices: {value!r}")
    if any(isinstance(i, bool) or not isinstance(i, int) for i in value):
        raise InputError(f"{label} has non-integer ray indices")


def _face_lattice_basis(ambient_rank, rays, ray_indices):
    if not ray_indices:
        return IntMatrix(ambient_rank, 0)
    if len(ray_indices) == 1:
        return IntMatrix.from_columns([rays[ray_indices[0]]], ambient_rank)
    generators = IntMatrix.from_columns([rays[i] for i in ray_indices], ambient_rank)
    rank = hnf_rank(generators)
    basis = saturate(_independent_subset(generators, rank))
    return basis


def _independent_subset(generators, rank):
    chosen = []
    for j in range(generators.cols):
        trial = chosen + [j]
        if hnf_rank(generators.select_columns(trial)) == len(trial):
            chosen = trial
        if len(chosen) == rank:
            break
    return generators.select_columns(chosen)


def _orientation_sign(fan_rays, ambient_rank, tau, sigma):
    """Sign of det [u | basis(tau)] in basis(sigma), u = sum of the extra rays."""
    extra = [i for i in sigma.ray_indices if i not in tau.ray_indices]
    u = [sum(fan_rays[i][k] for i in extra) for k in range(ambient_rank)]
    target = IntMatrix.hstack([IntMatrix.from_columns([u], ambient_rank),
                               tau.lattice_basis])
    coords = solve_integral(sigma.lattice_basis, target)
    det = determinant(coords)
    if det == 0:
        raise InconsistencyError(
            f"degenerate orientation between faces {tau.face_id} and {sigma.face_id}")
    return 1 if det > 0 else -1


def build_fan(ambient_rank, rays, maximal_cones, explicit_faces=None):
    """Build and validate a fan from rays and maximal cones.

    Without ``explicit_faces`` every maximal cone must be simplicial and
    all subsets of its rays become faces. Faces are numbered in
    (dim, ray set) order so the vertex is face 0.
    """
    if not isinstance(ambient_rank, int) or ambient_rank < 0:
        raise InputError(f"invalid ambient rank {ambient_rank!r}")
    rays = _validate_rays(ambient_rank, rays)
    if not isinstance(maximal_cones, (list, tuple)):
        raise InputError("maximal cones must be a list of ray-index lists")
    cones = []
    for index, cone in enumerate(maximal_cones):
        _check_index_list(cone, f"maximal cone {index}")
        cone = tuple(sorted(set(cone)))
        if any(not isinstance(i, int) or not 0 <= i < len(rays) for i in cone):
            raise InputError(f"maximal cone {index} references an unknown ray")
        if cone in cones:
            raise InputError(f"maximal cone {list(cone)} listed twice")
        cones.append(cone)
    if not cones:
        raise InputError("a fan needs at least one maximal cone")
    dims = {}
    for cone in cones:
        if cone not in dims:
            dims[cone] = hnf_rank(IntMatrix.from_columns(
                [rays[i] for i in cone], ambient_rank)) if cone else 0
    if len(set(dims.values())) != 1:
        raise InputError("fan is not pure dimensional")
    if explicit_faces is None:
        for cone in cones:
            if dims[cone] != len(cone):
                raise InputError(
                    f"maximal cone {list(cone)} is not simplicial; list its faces explicitly")
        ray_sets = set()
        for cone in cones:
            for size in range(len(cone) + 1):
                ray_sets.update(itertools.combinations(cone, size))
    else:
        if not isinstance(explicit_faces, (list, tuple)):
            raise InputError("faces must be a list of ray-index lists")
        for index, face in enumerate(explicit_faces):
            _check_index_list(face, f"face {index}")
        ray_sets = {tuple(sorted(set(face))) for face in explicit_faces}
        ray_sets.add(())
        missing = [c for c in cones if c not in ray_sets]
        if missing:
            raise InputError(f"maximal cones {missing} absent from the face list")
        for face in ray_sets:
            if not any(set(face) <= set(c) for c in cones):
                raise InputError(f"face {list(face)} lies in no maximal cone")

    bases = {s: _face_lattice_basis(ambient_rank, rays, s) for s in ray_sets}
    ordered = sorted(ray_sets, key=lambda s: (bases[s].cols, s))
    faces = [Cone(i, s, bases[s]) for i, s in enumerate(ordered)]
    maximal_dim = next(iter(dims.values()))
    top = {tuple(c) for c in cones}
    for face in faces:
        if face.dim == maximal_dim and face.ray_indices not in top:
            raise InputError(f"face {list(face.ray_indices)} has top dimension "
                             "but is not a maximal cone")

    incidence = {}
    by_dim = {}
    for face in faces:
        by_dim.setdefault(face.dim, []).append(face)
    for sigma in faces:
        for tau in by_dim.get(sigma.dim - 1, []):
            if set(tau.ray_indices) <= set(sigma.ray_indices):
                incidence[(tau.face_id, sigma.face_id)] = _orientation_sign(
                    rays, ambient_rank, tau, sigma)
    fan = Fan(ambient_rank, rays, faces, incidence,
              simplicial=explicit_faces is None)
    check_boundary_square(fan)
    logger.debug("built %r", fan)
    return fan


def check_boundary_square(fan):
    """Verify sum_tau O(mu, tau) O(tau, sigma) = 0 on every length-2 chain."""
    for sigma in fan.face_ids:
        for tau in fan.facets[sigma]:
            for mu in fan.facets[tau]:
                total = sum(fan.incidence[(mu, t)] * fan.incidence[(t, sigma)]
                            for t in fan.facets[sigma] if (mu, t) in fan.incidence)
                if total:
                    raise InconsistencyError(
                        f"incidence signs fail d^2 = 0 at faces {mu} < {sigma}")


def incidence_sign(fan, tau, sigma):
    """Relative orientation O(tau, sigma) of a covering pair."""
    fan.check_face(tau)
    fan.check_face(sigma)
    try:
        return fan.incidence[(tau, sigma)]
    except KeyError as error:
        raise InputError(f"faces {tau} and {sigma} are not a covering pair") from error


def star_view(source, gamma):
    """Star of ``gamma`` as an unsubdivided upper set.

    ``source`` may itself be a StarView; the star of one of its faces is
    the star of that face in the underlying fan.
    """
    if isinstance(source, StarView):
        if gamma not in source:
            raise InputError(f"face {gamma} is not in the star of {source.base_face}")
        source = source.fan
    source.check_face(gamma)
    return StarView(source, gamma)


def cone_subfan(fan, gamma):
    """The faces of a single cone."""
    fan.check_face(gamma)
    return ConeSubfan(fan, gamma)


def reduced_star(wf, gamma):
    """Quotient of Star(gamma) by L_Z(gamma), as a pointed weighted fan."""
    fan = wf.fan
    fan.check_face(gamma)
    base = fan.faces[gamma]
    star = star_view(fan, gamma)
    n, k = fan.ambient_rank, base.dim
    if k == 0:
        projection = IntMatrix.identity(n)
    else:
        _, left, _ = smith_normal_form(base.lattice_basis)
        projection = left.select_rows(range(k, n))
    new_rays = []
    ray_map = {}
    for kappa in star.member_faces:
        for i in fan.faces[kappa].ray_indices:
            if i in base.ray_indices or i in ray_map:
                continue
            image = projection @ IntMatrix.from_columns([fan.rays[i]], n)
            ray = _primitive(image.column(0))
            if ray in new_rays:
                raise InputError(f"rays collapse in the star of face {gamma}")
            ray_map[i] = len(new_rays)
            new_rays.append(ray)
    maximal = star.maximal_faces()
    cones = [[ray_map[i] for i in fan.faces[a].ray_indices if i not in base.ray_indices]
             for a in maximal]
    explicit = None
    if not fan.simplicial:
        explicit = [[ray_map[i] for i in fan.faces[f].ray_indices
                     if i not in base.ray_indices] for f in star.member_faces]
    reduced = build_fan(n - k, new_rays, cones, explicit)
    weights = {}
    for alpha, cone in zip(maximal, cones):
        weights[reduced.face_index[tuple(sorted(cone))]] = wf.weights[alpha]
    return WeightedFan(reduced, wf.ring, weights)


def stellar_subdivide(wf, sigma):
    """Insert the barycentric ray of a simplicial face and split its cofaces."""
    fan = wf.fan
    fan.check_face(sigma)
    if not fan.simplicial:
        raise InputError("stellar subdivision needs a simplicial fan")
    face = fan.faces[sigma]
    if face.dim < 2:
        raise InputError("only faces of dimension >= 2 can be subdivided")
    total = [sum(fan.rays[i][c] for i in face.ray_indices)
             for c in range(fan.ambient_rank)]
    new_ray = _primitive(total)
    rays = list(fan.rays)
    if new_ray in rays:
        raise InputError("barycentric ray already present")
    rays.append(new_ray)
    new_index = len(rays) - 1
    cones, weights = [], []
    for alpha in fan.maximal_faces():
        members = fan.faces[alpha].ray_indices
        if fan.is_face_of(sigma, alpha):
            for dropped in face.ray_indices:
                cones.append(sorted([i for i in members if i != dropped] + [new_index]))
                weights.append(wf.weights[alpha])
        else:
            cones.append(list(members))
            weights.append(wf.weights[alpha])
    subdivided = build_fan(fan.ambient_rank, rays, cones)
    return WeightedFan(subdivided, wf.ring, {
        subdivided.face_index[tuple(sorted(c))]: w for c, w in zip(cones, weights)})


class Matroid:
    """A matroid on {0, ..., n} given by its bases."""

    def __init__(self, ground_size, bases):
        """Validate equal-size bases in range and the exchange axiom."""
        if not isinstance(ground_size, int) or ground_size < 1:
            raise InputError(f"invalid ground size {ground_size!r}")
        bases = list(bases)
        for index, basis in enumerate(bases):
            if isinstance(basis, (str, bytes)) or not hasattr(basis, '__iter__'):
                raise InputError(f"basis {index} is not a list of elements: {basis!r}")
            if any(isinstance(e, bool) or not isinstance(e, int) for e in basis):
                raise InputError(f"basis {index} has non-integer elements")
        bases = [frozenset(b) for b in bases]
        if not bases:
            raise InputError("a matroid needs at least one basis")
        if len({len(b) for b in bases}) != 1:
            raise InputError("bases have different sizes")
        if any(not 0 <= e < ground_size for b in bases for e in b):
            raise InputError("basis element out of range")
        self.ground_size = ground_size
        self.bases = sorted(set(bases), key=sorted)
        self.rank = len(self.bases[0])
        self._check_exchange()

    def _check_exchange(self):
        basis_set = set(self.bases)
        for b1, b2 in itertools.product(self.bases, repeat=2):
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in basis_set for y in b2 - b1):
                    raise InputError("bases violate the exchange property")

    @property
    def ground_set(self):
        """The ground set as a frozenset."""
        return frozenset(range(self.ground_size))

    def to_dict(self):
        """Dictionary representation of the matroid."""
        return {'ground_size': self.ground_size,
                'bases': [sorted(b) for b in self.bases]}

    def __repr__(self):
        return f"Matroid(n={self.ground_size}, rank={self.rank})"


class LatticeOfFlats:
    """Flats of a matroid ordered by inclusion."""

    def __init__(self, flats, ranks, covers):
        """Store flats (sorted by rank, size, elements) and covering pairs."""
        self.flats = flats
        self.ranks = ranks
        self.covers = covers

    def proper_nonempty(self, ground_size):
        """Flats other than the bottom and the whole ground set."""
        return [f for f in self.flats if f and len(f) < ground_size]


def matroid_rank(matroid, subset):
    """Rank of a subset: largest intersection with a basis."""
    subset = frozenset(subset)
    return max(len(subset & b) for b in matroid.bases)


def matroid_closure(matroid, subset):
    """Elements whose addition does not raise the rank."""
    subset = frozenset(subset)
    base_rank = matroid_rank(matroid, subset)
    return frozenset(e for e in range(matroid.ground_size)
                     if matroid_rank(matroid, subset | {e}) == base_rank)


def matroid_flats(matroid):
    """Lattice of flats computed from the rank function."""
    flats = set()
    for size in range(matroid.ground_size + 1):
        for subset in itertools.combinations(range(matroid.ground_size), size):
            flats.add(matroid_closure(matroid, subset))
    ranks = {f: matroid_rank(matroid, f) for f in flats}
    ordered = sorted(flats, key=lambda f: (ranks[f], len(f), sorted(f)))
    covers = [(f, g) for f in ordered for g in ordered
              if f < g and ranks[g] == ranks[f] + 1]
    return LatticeOfFlats(ordered, ranks, covers)


def _maximal_chains(lattice, ground_size):
    proper = lattice.proper_nonempty(ground_size)
    upward = {f: [g for (h, g) in lattice.covers if h == f and g in proper]
              for f in proper}
    atoms = [f for f in proper if lattice.ranks[f] == 1]
    chains = []

    def extend(chain):
        nexts = upward[chain[-1]]
        if not nexts:
            chains.append(chain)
            return
        for g in nexts:
            extend(chain + [g])

    for atom in atoms:
        extend([atom])
    return chains


def bergman_fan(matroid, ring=None):
    """Bergman fan of a loopless matroid with constant weight 1.

    Lives in Z^{n+1}/Z(1, ..., 1), written in the coordinates obtained by
    subtracting the last coordinate from every other one.
    """
    loops = [e for e in range(matroid.ground_size) if matroid_rank(matroid, {e}) == 0]
    if loops:
        raise InputError(f"matroid has loops: {loops}")
    lattice = matroid_flats(matroid)
    n = matroid.ground_size - 1
    last = matroid.ground_size - 1
    proper = sorted(lattice.proper_nonempty(matroid.ground_size),
                    key=lambda f: (len(f), sorted(f)))
    index = {f: i for i, f in enumerate(proper)}
    rays = [tuple((1 if i in f else 0) - (1 if last in f else 0) for i in range(n))
            for f in proper]
    chains = _maximal_chains(lattice, matroid.ground_size)
    cones = [sorted(index[f] for f in chain) for chain in chains] or [[]]
    fan = build_fan(n, rays, cones)
    weights = {alpha: 1 for alpha in fan.maximal_faces()}
    return WeightedFan(fan, ring or Ring('Z'), weights)


def uniform_matroid(rank, ground_size):
    """U_{rank, ground_size}: every rank-subset is a basis."""
    return Matroid(ground_size, itertools.combinations(range(ground_size), rank))


def boolean_matroid(ground_size):
    """Free matroid: the whole ground set is the only basis."""
    return Matroid(ground_size, [range(ground_size)])
